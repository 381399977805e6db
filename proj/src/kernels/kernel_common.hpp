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
#pragma once

#include "svbench/kernels.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace svbench::detail {

/// Qubit positions of one gate application, checked against n.
struct GateLayout {
    std::vector<Qubit> sorted;  // targets and controls, ascending
    Index control_mask = 0;
    std::array<Index, 2> target_mask{};
    unsigned num_targets = 0;
    Index free_count = 0; // indices left after fixing every gate qubit

    GateLayout(unsigned n, const GateMatrix &g, std::span<const Qubit> targets,
               std::span<const Qubit> controls);

    /// The index with all gate bits zero for the i-th free combination.
    [[nodiscard]] Index base(Index i) const noexcept {
        for (Qubit p : sorted) {
            const Index low = i & ((Index{1} << p) - 1);
            i = ((i - low) << 1) | low;
        }
        return i;
    }

    /// Offset of local basis state `local` (2*bit(t0) + bit(t1) for 4x4).
    [[nodiscard]] Index target_offset(unsigned local) const noexcept {
        if (num_targets == 1) {
            return local ? target_mask[0] : 0;
        }
        return ((local & 2) ? target_mask[0] : 0) | ((local & 1) ? target_mask[1] : 0);
    }
};

[[nodiscard]] inline Amplitude cmul(Amplitude a, Amplitude b) noexcept {
    return {a.real() * b.real() - a.imag() * b.imag(),
            a.real() * b.imag() + a.imag() * b.real()};
}

[[nodiscard]] inline Amplitude cadd(Amplitude a, Amplitude b) noexcept {
    return {a.real() + b.real(), a.imag() + b.imag()};
}

/// body(begin, end) over [0, count), chunked across threads when the
/// dispatch mode is parallel. Chunks are contiguous and disjoint.
template <class Body>
void parallel_for(Index count, const DispatchOptions &opt, Body &&body) {
    if (opt.mode == DispatchMode::Sequential || count <= std::max<Index>(opt.grain, 1)) {
        body(Index{0}, count);
        return;
    }
    unsigned threads = opt.threads ? opt.threads : std::thread::hardware_concurrency();
    threads = std::max(threads, 1U);
    const Index grain = std::max<Index>(opt.grain, 1);
    const Index chunks = std::min<Index>(threads, (count + grain - 1) / grain);
    if (chunks <= 1) {
        body(Index{0}, count);
        return;
    }
    const Index step = (count + chunks - 1) / chunks;
    std::vector<std::jthread> workers;
    workers.reserve(chunks - 1);
    for (Index c = 1; c < chunks; ++c) {
        const Index begin = c * step;
        const Index end = std::min(count, begin + step);
        if (begin < end) {
            workers.emplace_back([&body, begin, end] { body(begin, end); });
        }
    }
    body(Index{0}, std::min(count, step));
}

/// Row-major square matrix over the gate qubits, controls folded in.
/// qubits[0] is the most significant bit of the local index.
struct ExpandedGate {
    std::vector<Qubit> qubits;
    unsigned dim = 0;
    std::vector<Amplitude> m;
};

[[nodiscard]] ExpandedGate expand_controls(const GateMatrix &g, std::span<const Qubit> targets,
                                           std::span<const Qubit> controls);

/// coef * (factor on each listed qubit) (x) identity elsewhere.
struct KronFactor {
    Qubit qubit;
    Matrix2 m;
};

struct KronTerm {
    Amplitude coef{1, 0};
    std::vector<KronFactor> factors;
};

/// Sum-of-Kronecker-products form of a (controlled) gate:
///  - 1 target, no controls: the single term G on t.
///  - 2 targets: one term per nonzero entry, elementary 2x2 factors.
///  - controls: I + (P1 on every control) (x) (G - I).
[[nodiscard]] std::vector<KronTerm> kronecker_terms(const GateMatrix &g,
                                                    std::span<const Qubit> targets,
                                                    std::span<const Qubit> controls);

} // namespace svbench::detail
