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
 * Gate kinds and their unitary matrices.
 */
#pragma once

#include "svbench/state_vector.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace svbench {

enum class GateKind {
    H,
    X,
    Y,
    Z,
    S,
    T,
    P,
    Rx,
    Ry,
    Rz,
    General2x2,
    CNOT,
    CZ,
    CP,
    SWAP,
};

inline constexpr std::array kAllGateKinds = {
    GateKind::H,  GateKind::X,  GateKind::Y,          GateKind::Z,
    GateKind::S,  GateKind::T,  GateKind::P,          GateKind::Rx,
    GateKind::Ry, GateKind::Rz, GateKind::General2x2, GateKind::CNOT,
    GateKind::CZ, GateKind::CP, GateKind::SWAP,
};

/// Canonical upper-case spelling, e.g. "CNOT", "RX", "U" for General2x2.
[[nodiscard]] std::string_view gate_name(GateKind kind) noexcept;

/// Case-insensitive; accepts canonical names and common aliases
/// ("hadamard", "cx", "pauli-x", "phase", "cphase", "general").
[[nodiscard]] std::optional<GateKind> parse_gate_kind(std::string_view name);

[[nodiscard]] bool is_parameterized(GateKind kind) noexcept;
/// Number of qubits the full gate acts on (controls included).
[[nodiscard]] unsigned gate_arity(GateKind kind) noexcept;
/// CNOT, CZ and CP: a single-qubit core with one control.
[[nodiscard]] bool is_controlled(GateKind kind) noexcept;

using Matrix2 = std::array<Amplitude, 4>;

/**
 * Dense 2x2 or 4x4 gate matrix, row-major.
 *
 * For 4x4 matrices the local basis index is 2*bit(q0) + bit(q1) where q0
 * and q1 are the first and second target qubit, so CNOT is the textbook
 * matrix with targets {control, target}.
 */
struct GateMatrix {
    GateKind kind;
    unsigned dim;
    std::array<Amplitude, 16> entries{};

    [[nodiscard]] Amplitude operator()(unsigned row, unsigned col) const noexcept {
        return entries[row * dim + col];
    }
    [[nodiscard]] Amplitude &at(unsigned row, unsigned col) noexcept {
        return entries[row * dim + col];
    }
};

/// Standard unitary for kind. theta must be given iff the kind is
/// parameterized; General2x2 needs general_gate() instead.
[[nodiscard]] GateMatrix gate_matrix(GateKind kind, std::optional<double> theta = {});

/// Arbitrary single-qubit unitary; throws NonUnitaryMatrix beyond 1e-6.
[[nodiscard]] GateMatrix general_gate(const Matrix2 &entries);

/// Largest entrywise |(M M^dagger - I)_ij|, computed in double.
[[nodiscard]] double unitarity_error(const GateMatrix &m) noexcept;

} // namespace svbench
