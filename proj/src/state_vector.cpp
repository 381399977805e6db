// Copyright 2026 The svbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "svbench/state_vector.hpp"

#include "svbench/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <new>
#include <string>

#include <unistd.h>

namespace svbench {

MemoryBudget MemoryBudget::detect() {
    const long pages = ::sysconf(_SC_AVPHYS_PAGES);
    const long page_size = ::sysconf(_SC_PAGESIZE);
    if (pages <= 0 || page_size <= 0) {
        // Unknown platform; fall back to the 30-qubit state size.
        return MemoryBudget{state_bytes(kDefaultMaxQubits)};
    }
    const auto available = static_cast<std::uint64_t>(pages) *
                           static_cast<std::uint64_t>(page_size);
    return MemoryBudget{available / 4 * 3};
}

void MemoryBudget::admit(unsigned n) const {
    if (n < 1 || n > max_qubits || n >= 63) {
        throw Error(Errc::QubitCountOutOfRange,
                    "qubit count " + std::to_string(n) + " outside 1.." +
                        std::to_string(max_qubits));
    }
    if (state_bytes(n) > bytes) {
        throw Error(Errc::MemoryBudgetExceeded,
                    std::to_string(n) + " qubits need " +
                        std::to_string(state_bytes(n)) + " bytes, budget is " +
                        std::to_string(bytes));
    }
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amps) {
    if (amps.size() < 2 || !std::has_single_bit(amps.size())) {
        throw Error(Errc::QubitCountOutOfRange,
                    "amplitude count " + std::to_string(amps.size()) +
                        " is not a power of two >= 2");
    }
    const auto n = static_cast<unsigned>(std::countr_zero(amps.size()));
    return StateVector(n, std::move(amps));
}

void StateVector::reset_zero() noexcept {
    std::fill(amps_.begin(), amps_.end(), Amplitude{});
    amps_[0] = Amplitude{1, 0};
}

StateVector init_zero_state(unsigned n, const MemoryBudget &budget) {
    budget.admit(n);
    std::vector<Amplitude> amps;
    try {
        amps.assign(dimension(n), Amplitude{});
    } catch (const std::bad_alloc &) {
        throw Error(Errc::AllocationFailure,
                    "cannot allocate " + std::to_string(state_bytes(n)) + " bytes");
    }
    amps[0] = Amplitude{1, 0};
    return StateVector(n, std::move(amps));
}

StateVector init_zero_state(unsigned n) {
    return init_zero_state(n, MemoryBudget::detect());
}

double state_norm(std::span<const Amplitude> amps) noexcept {
    double sum = 0.0;
    for (const auto &a : amps) {
        const double re = a.real();
        const double im = a.imag();
        sum += re * re + im * im;
    }
    return std::sqrt(sum);
}

double max_abs_deviation(std::span<const Amplitude> a, std::span<const Amplitude> b) {
    if (a.size() != b.size()) {
        throw Error(Errc::QubitCountOutOfRange, "state sizes differ");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double dr = static_cast<double>(a[i].real()) - b[i].real();
        const double di = static_cast<double>(a[i].imag()) - b[i].imag();
        worst = std::max(worst, std::hypot(dr, di));
    }
    return worst;
}

} // namespace svbench
