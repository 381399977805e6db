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
 * Self-contained SVG charts (800x500 viewBox) for timing sweeps, speedups
 * and step-ratio bars.
 */
#pragma once

#include "svbench/harness.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace svbench {

enum class PlotKind { TimeVsQubitsLog, SpeedupVsQubits, CliffBars };

[[nodiscard]] std::string_view plot_kind_name(PlotKind k) noexcept;
[[nodiscard]] std::optional<PlotKind> parse_plot_kind(std::string_view s);

struct PlotPoint {
    double x = 0.0;
    double y = 0.0;
};

struct PlotSeries {
    std::string label;
    std::vector<PlotPoint> points;
};

/// Shaded vertical band between two x values.
struct PlotBand {
    double x0 = 0.0;
    double x1 = 0.0;
    std::string label;
};

/// Dashed horizontal line at y.
struct ReferenceLine {
    double y = 0.0;
    std::string label;
};

struct PlotSpec {
    PlotKind kind = PlotKind::TimeVsQubitsLog;
    std::string title;
    std::string x_label = "qubits";
    std::string y_label;
    std::vector<PlotSeries> series;
    std::optional<PlotBand> band;
    std::vector<ReferenceLine> reference_lines;
    /// TimeVsQubitsLog is always log-y; other kinds opt in.
    bool log_y = false;

    [[nodiscard]] bool uses_log_y() const noexcept {
        return log_y || kind == PlotKind::TimeVsQubitsLog;
    }
};

/// One <polyline> per series for line kinds, one <path> per series for
/// bars. Throws EmptySeries when there is no series or a series has no
/// points, NonPositiveLogValue for y <= 0 on a log axis.
[[nodiscard]] std::string emit_plot(const PlotSpec &spec);

/// Mean time vs qubits, one series per strategy.
[[nodiscard]] PlotSpec time_plot(std::span<const TrialStats> stats);

/// mean_a / mean_b vs qubits, one series per (a, b) pair.
[[nodiscard]] PlotSpec speedup_plot(std::span<const TrialStats> stats,
                                    std::span<const std::pair<std::string, std::string>> pairs);

/// Step ratio bars per transition, one series per strategy, with a
/// reference line at the ideal 2x.
[[nodiscard]] PlotSpec cliff_bars_plot(std::span<const TrialStats> stats);

} // namespace svbench
