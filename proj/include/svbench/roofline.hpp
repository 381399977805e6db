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
 * Per-gate arithmetic intensity and the roofline bound
 * P = min(p_peak, ai * b_peak).
 */
#pragma once

#include "svbench/circuit.hpp"

#include <cstdint>
#include <span>
#include <string_view>

namespace svbench {

/// Cost of one operation unit (one amplitude pair, or one touched
/// amplitude for the 16-byte diagonal rows) under direct-index application.
struct GateCostModel {
    GateKind kind = GateKind::H;
    std::string_view row; ///< cost-table row the kind belongs to
    unsigned flops_per_unit = 0;
    unsigned bytes_per_unit = 0;
    double ai = 0.0; ///< flops / bytes

    bool operator==(const GateCostModel &) const = default;
};

struct CostTableRow {
    std::string_view gate;
    std::string_view type; ///< "1-qubit" or "2-qubit"
    unsigned flops = 0;
    unsigned bytes = 0;
    double ai = 0.0;
};

/// The eleven rows of the gate cost table, in display order.
[[nodiscard]] std::span<const CostTableRow> cost_table() noexcept;

[[nodiscard]] GateCostModel gate_ai(GateKind kind) noexcept;

/// Accepts any name parse_gate_kind understands; throws UnknownGateKind.
[[nodiscard]] GateCostModel gate_ai(std::string_view kind_name);

enum class Regime { MemoryBound, ComputeBound };

[[nodiscard]] std::string_view regime_name(Regime r) noexcept;

struct RooflinePoint {
    double ai = 0.0;     ///< FLOP/byte
    double p_peak = 0.0; ///< GFLOP/s
    double b_peak = 0.0; ///< GB/s
    double predicted = 0.0;
    double ridge = 0.0; ///< p_peak / b_peak
    Regime regime = Regime::MemoryBound;
};

/// memory_bound iff ai <= ridge. Throws NonPositiveMachineParameter unless
/// p_peak > 0, b_peak > 0 and ai >= 0 (all finite).
[[nodiscard]] RooflinePoint roofline_eval(double ai, double p_peak, double b_peak);

struct CircuitAiProfile {
    std::uint64_t flops = 0;
    std::uint64_t bytes = 0;

    /// flops / bytes, 0 for an empty profile.
    [[nodiscard]] double weighted_ai() const noexcept;

    CircuitAiProfile &operator+=(const CircuitAiProfile &o) noexcept {
        flops += o.flops;
        bytes += o.bytes;
        return *this;
    }
    bool operator==(const CircuitAiProfile &) const = default;
};

/// Sums flops and bytes over every gate, each counted for 2^(n-1) units.
[[nodiscard]] CircuitAiProfile circuit_ai_profile(const Circuit &c);

} // namespace svbench
