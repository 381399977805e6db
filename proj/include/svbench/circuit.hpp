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
 * Circuit elements, the GHZ and QFT benchmark circuits, and the
 * line-oriented circuit text format.
 */
#pragma once

#include "svbench/gates.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace svbench {

/**
 * One circuit element.
 *
 * control is set for CNOT/CZ/CP, second for SWAP, theta for parameterized
 * kinds and matrix for General2x2.
 */
struct GateOp {
    GateKind kind = GateKind::H;
    Qubit target = 0;
    std::optional<Qubit> control;
    std::optional<Qubit> second;
    std::optional<double> theta;
    std::optional<Matrix2> matrix;

    [[nodiscard]] static GateOp single(GateKind kind, Qubit target,
                                       std::optional<double> theta = {});
    [[nodiscard]] static GateOp controlled(GateKind kind, Qubit control, Qubit target,
                                           std::optional<double> theta = {});
    [[nodiscard]] static GateOp swap(Qubit a, Qubit b);
    [[nodiscard]] static GateOp general(Qubit target, const Matrix2 &matrix);

    /// All qubits the op touches, controls first.
    [[nodiscard]] std::vector<Qubit> qubits() const;

    bool operator==(const GateOp &) const = default;
};

/// A gate lowered to what the kernels consume: a 2x2 or 4x4 matrix on its
/// targets, conditioned on every control qubit being 1.
struct LoweredGate {
    GateMatrix matrix;
    std::vector<Qubit> targets;
    std::vector<Qubit> controls;
};

/// CNOT/CZ/CP lower to X/Z/P with one control; SWAP to the 4x4 matrix.
[[nodiscard]] LoweredGate lower(const GateOp &op);

enum class CircuitLabel { GHZ, QFT, Custom };

[[nodiscard]] std::string_view circuit_label_name(CircuitLabel label) noexcept;
[[nodiscard]] std::optional<CircuitLabel> parse_circuit_label(std::string_view s);

struct Circuit {
    unsigned n = 0;
    std::vector<GateOp> ops;
    CircuitLabel label = CircuitLabel::Custom;

    /// Throws QubitIndexOutOfRange / DuplicateQubit / MissingParameter /
    /// NonUnitaryMatrix.
    void validate() const;
};

/// H(0) then the CNOT chain (k -> k+1).
[[nodiscard]] Circuit build_ghz(unsigned n);

/// H(k) and CP(pi / 2^(j-k)) controlled by j > k, then floor(n/2) SWAPs.
[[nodiscard]] Circuit build_qft(unsigned n);

[[nodiscard]] Circuit build_circuit(CircuitLabel label, unsigned n);

/// n + n(n-1)/2 + floor(n/2).
[[nodiscard]] constexpr std::size_t qft_gate_count(unsigned n) noexcept {
    return n + static_cast<std::size_t>(n) * (n - 1) / 2 + n / 2;
}

struct GateCensus {
    std::size_t total = 0;
    std::map<GateKind, std::size_t> by_kind;
};

[[nodiscard]] GateCensus gate_count(const Circuit &c);

/// One gate per line: `KIND target [control|second] [theta]`, or
/// `U target` followed by the eight real numbers of a 2x2 matrix.
/// The first non-comment line may be `qubits <n>`.
void write_circuit(std::ostream &out, const Circuit &c);
[[nodiscard]] std::string format_circuit(const Circuit &c);

/// Inverse of write_circuit. Without a `qubits` header, n is one more than
/// the largest qubit index used. '#' starts a comment.
[[nodiscard]] Circuit read_circuit(std::istream &in);
[[nodiscard]] Circuit parse_circuit(std::string_view text);
[[nodiscard]] Circuit load_circuit_file(const std::string &path);

} // namespace svbench
