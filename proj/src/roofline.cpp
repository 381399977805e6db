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
#include "svbench/roofline.hpp"

#include "svbench/error.hpp"

#include <array>
#include <cmath>
#include <string>

namespace svbench {
namespace {

constexpr double ai_of(unsigned flops, unsigned bytes) {
    return static_cast<double>(flops) / static_cast<double>(bytes);
}

constexpr std::array<CostTableRow, 11> kTable{{
    {"Pauli-X", "1-qubit", 0, 32, ai_of(0, 32)},
    {"Pauli-Y", "1-qubit", 0, 32, ai_of(0, 32)},
    {"Pauli-Z", "1-qubit", 0, 16, ai_of(0, 16)},
    {"CNOT", "2-qubit", 0, 32, ai_of(0, 32)},
    {"CZ", "2-qubit", 0, 16, ai_of(0, 16)},
    {"SWAP", "2-qubit", 0, 32, ai_of(0, 32)},
    {"Hadamard", "1-qubit", 8, 32, ai_of(8, 32)},
    {"Phase (T, P)", "1-qubit", 6, 16, ai_of(6, 16)},
    {"Rotation (Rx, Ry)", "1-qubit", 12, 32, ai_of(12, 32)},
    {"Ctrl-Phase", "2-qubit", 6, 16, ai_of(6, 16)},
    {"General 2x2", "1-qubit", 28, 32, ai_of(28, 32)},
}};

std::size_t row_index(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::X:
        return 0;
    case GateKind::Y:
        return 1;
    case GateKind::Z:
        return 2;
    case GateKind::CNOT:
        return 3;
    case GateKind::CZ:
        return 4;
    case GateKind::SWAP:
        return 5;
    case GateKind::H:
        return 6;
    case GateKind::S:
    case GateKind::T:
    case GateKind::P:
        return 7;
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rz:
        return 8;
    case GateKind::CP:
        return 9;
    case GateKind::General2x2:
        return 10;
    }
    return 10;
}

} // namespace

std::span<const CostTableRow> cost_table() noexcept { return kTable; }

GateCostModel gate_ai(GateKind kind) noexcept {
    const CostTableRow &row = kTable[row_index(kind)];
    return {kind, row.gate, row.flops, row.bytes, row.ai};
}

GateCostModel gate_ai(std::string_view kind_name) {
    const auto kind = parse_gate_kind(kind_name);
    if (!kind) {
        throw Error(Errc::UnknownGateKind, "no cost row for '" + std::string(kind_name) + "'");
    }
    return gate_ai(*kind);
}

std::string_view regime_name(Regime r) noexcept {
    return r == Regime::MemoryBound ? "memory_bound" : "compute_bound";
}

RooflinePoint roofline_eval(double ai, double p_peak, double b_peak) {
    if (!(std::isfinite(p_peak) && p_peak > 0.0) || !(std::isfinite(b_peak) && b_peak > 0.0)) {
        throw Error(Errc::NonPositiveMachineParameter,
                    "p_peak and b_peak must be positive (got " + std::to_string(p_peak) + ", " +
                        std::to_string(b_peak) + ")");
    }
    if (!(std::isfinite(ai) && ai >= 0.0)) {
        throw Error(Errc::NonPositiveMachineParameter,
                    "arithmetic intensity must be >= 0 (got " + std::to_string(ai) + ")");
    }
    RooflinePoint p;
    p.ai = ai;
    p.p_peak = p_peak;
    p.b_peak = b_peak;
    p.ridge = p_peak / b_peak;
    p.predicted = std::min(p_peak, ai * b_peak);
    p.regime = ai <= p.ridge ? Regime::MemoryBound : Regime::ComputeBound;
    return p;
}

double CircuitAiProfile::weighted_ai() const noexcept {
    return bytes == 0 ? 0.0 : static_cast<double>(flops) / static_cast<double>(bytes);
}

CircuitAiProfile circuit_ai_profile(const Circuit &c) {
    const std::uint64_t units = c.n == 0 ? 0 : std::uint64_t{1} << (c.n - 1);
    CircuitAiProfile out;
    for (const auto &op : c.ops) {
        const GateCostModel m = gate_ai(op.kind);
        out.flops += m.flops_per_unit * units;
        out.bytes += m.bytes_per_unit * units;
    }
    return out;
}

} // namespace svbench
