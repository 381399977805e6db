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
/**
 * @file
 * Flat state-vector storage and the qubit/bit ordering convention.
 *
 * Bit t of a flat amplitude index is the basis value of qubit t, so qubit 0
 * is the least-significant bit and the two amplitudes touched by a gate on
 * qubit t sit 2^t elements apart.
 */
#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace svbench {

#ifdef SVBENCH_DOUBLE_PRECISION
using Real = double;
#else
using Real = float;
#endif

/// One complex amplitude; 8 bytes in the default single-precision build.
using Amplitude = std::complex<Real>;
/// Flat amplitude index. Always 64-bit so 2^32 and beyond is addressable.
using Index = std::uint64_t;
using Qubit = unsigned;

inline constexpr unsigned kDefaultMaxQubits = 30;

[[nodiscard]] constexpr Index dimension(unsigned n) noexcept {
    return Index{1} << n;
}

/// Bytes held by an n-qubit state vector (2^n amplitudes).
[[nodiscard]] constexpr std::uint64_t state_bytes(unsigned n) noexcept {
    return dimension(n) * sizeof(Amplitude);
}

/**
 * Admission limits checked before a state vector is allocated.
 *
 * The default budget is 75% of the physical memory the OS reports as
 * available when detect() is called.
 */
struct MemoryBudget {
    std::uint64_t bytes;
    unsigned max_qubits = kDefaultMaxQubits;

    [[nodiscard]] static MemoryBudget detect();
    [[nodiscard]] static MemoryBudget of_bytes(std::uint64_t bytes,
                                               unsigned max_qubits = kDefaultMaxQubits) {
        return MemoryBudget{bytes, max_qubits};
    }

    /// Throws QubitCountOutOfRange or MemoryBudgetExceeded.
    void admit(unsigned n) const;
};

/// Owned, exclusively mutable array of 2^n amplitudes.
class StateVector {
  public:
    /// Wraps existing amplitudes; the length must be a power of two >= 2.
    [[nodiscard]] static StateVector from_amplitudes(std::vector<Amplitude> amps);

    [[nodiscard]] unsigned num_qubits() const noexcept { return n_; }
    [[nodiscard]] Index size() const noexcept { return amps_.size(); }

    [[nodiscard]] std::span<Amplitude> amplitudes() noexcept { return amps_; }
    [[nodiscard]] std::span<const Amplitude> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] Amplitude operator[](Index i) const noexcept { return amps_[i]; }
    [[nodiscard]] Amplitude *data() noexcept { return amps_.data(); }
    [[nodiscard]] const Amplitude *data() const noexcept { return amps_.data(); }

    /// Rewrites the contents as |0...0> without reallocating.
    void reset_zero() noexcept;

    bool operator==(const StateVector &) const = default;

  private:
    friend StateVector init_zero_state(unsigned, const MemoryBudget &);
    StateVector(unsigned n, std::vector<Amplitude> amps)
        : n_(n), amps_(std::move(amps)) {}

    unsigned n_;
    std::vector<Amplitude> amps_;
};

/// |0...0> on n qubits, after checking n against the budget.
[[nodiscard]] StateVector init_zero_state(unsigned n, const MemoryBudget &budget);
[[nodiscard]] StateVector init_zero_state(unsigned n);

/// sqrt(sum |amp|^2), accumulated in double precision.
[[nodiscard]] double state_norm(std::span<const Amplitude> amps) noexcept;
[[nodiscard]] inline double state_norm(const StateVector &s) noexcept {
    return state_norm(s.amplitudes());
}

/// Largest |a_i - b_i| over two equally sized amplitude arrays.
[[nodiscard]] double max_abs_deviation(std::span<const Amplitude> a,
                                       std::span<const Amplitude> b);

} // namespace svbench
