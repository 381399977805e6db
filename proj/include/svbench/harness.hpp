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
 * Benchmark sweeps over (strategy, qubit count) cells, and the analysis of
 * their mean timings: step ratios, cliff flags and speedups.
 *
 * Cells run strictly one at a time. Every strategy finishes its whole qubit
 * range, in ascending order, before the next one starts; the recovery gap
 * separates consecutive strategies.
 */
#pragma once

#include "svbench/circuit.hpp"
#include "svbench/kernels.hpp"
#include "svbench/membench.hpp"
#include "svbench/state_vector.hpp"

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace svbench {

enum class Isolation { InProcess, Subprocess };

[[nodiscard]] std::string_view isolation_name(Isolation i) noexcept;

struct ExperimentPlan {
    CircuitLabel circuit = CircuitLabel::GHZ;
    std::vector<KernelStrategy> strategies;
    unsigned n_min = 1;
    unsigned n_max = 1;
    unsigned trials = 5;
    unsigned warmup = 1;
    double recovery_seconds = 90.0;
    Isolation isolation = Isolation::InProcess;
    /// Defaults to MemoryBudget::detect() when unset.
    std::optional<MemoryBudget> budget;

    /// Throws InvalidPlan.
    void validate() const;
};

/// "a..b" or a single count "a". Throws ParseError.
[[nodiscard]] std::pair<unsigned, unsigned> parse_qubit_range(std::string_view text);

/// key=value lines: circuit, strategies (comma separated), qubits,
/// trials, warmup, recovery_seconds, isolation. '#' starts a comment.
/// Throws ParseError or InvalidPlan.
[[nodiscard]] ExperimentPlan parse_plan(std::string_view text);
[[nodiscard]] ExperimentPlan load_plan_file(const std::string &path);
[[nodiscard]] std::string format_plan(const ExperimentPlan &plan);

inline constexpr const char *kRecoveryEnvVar = "QSIM_RECOVERY_SECONDS";

/// Replaces recovery_seconds with $QSIM_RECOVERY_SECONDS when it is set.
/// Throws ParseError on a malformed or negative value.
void apply_environment(ExperimentPlan &plan);

enum class CellStatus { Ok, MemoryBudgetExceeded, Failed };

[[nodiscard]] std::string_view cell_status_name(CellStatus s) noexcept;

struct TrialStats {
    std::string strategy;
    unsigned n = 0;
    std::vector<double> trial_seconds; ///< timed trials only
    double mean_s = 0.0;
    double sigma_s = 0.0;
    double cov = 0.0;
    std::uint64_t state_bytes = 0;
    CellStatus status = CellStatus::Ok;
    std::string error; ///< set when status != Ok

    /// Fills mean_s, sigma_s, cov and state_bytes from trial_seconds and n.
    void finalize();
};

using ResultSink = std::function<void(const TrialStats &)>;

struct HarnessHooks {
    Clock *clock = nullptr;                 ///< SteadyClock when null
    std::function<void(double)> sleep;      ///< seconds; real sleep when empty
};

/// One warm-up-discarded cell per (strategy, n). Budget and kernel errors
/// are recorded in the cell and the sweep continues.
[[nodiscard]] std::vector<TrialStats> run_experiment(const ExperimentPlan &plan,
                                                     const ResultSink &sink = {},
                                                     HarnessHooks hooks = {});

/// Mean time per qubit count for one strategy.
using MeanSeries = std::map<unsigned, double>;

/// Rows of the given strategy with status Ok.
[[nodiscard]] MeanSeries mean_series(std::span<const TrialStats> stats,
                                     const std::string &strategy);

/// Strategy names in first-appearance order.
[[nodiscard]] std::vector<std::string> strategy_names(std::span<const TrialStats> stats);

struct StepRatio {
    unsigned n = 0; ///< the larger of the two counts
    double ratio = 0.0;

    bool operator==(const StepRatio &) const = default;
};

/// t(n) / t(n-1) for consecutive counts. Throws MissingQubitCount on a gap
/// and EmptySeries when there are no samples.
[[nodiscard]] std::vector<StepRatio> step_ratios(const MeanSeries &means);

inline constexpr double kDefaultCliffThreshold = 3.0;

/// Every transition with ratio >= threshold.
[[nodiscard]] std::vector<StepRatio> detect_cliff(std::span<const StepRatio> ratios,
                                                  double threshold = kDefaultCliffThreshold);

/// mean_a / mean_b per n; > 1 means b is faster. Throws MissingQubitCount
/// unless both cover the same counts.
[[nodiscard]] std::vector<StepRatio> speedup_table(const MeanSeries &a, const MeanSeries &b);

/// Results interchange: one row per timed trial.
struct TrialRecord {
    std::string strategy;
    unsigned n = 0;
    unsigned trial_index = 0; ///< 1-based
    double seconds = 0.0;
};

inline constexpr const char *kResultsHeader = "strategy,n,trial_index,seconds";

void write_results_csv(std::ostream &out, std::span<const TrialStats> stats);
void write_results_csv_header(std::ostream &out);
void write_results_csv_rows(std::ostream &out, const TrialStats &cell);

/// Accepts the header line, blank lines and '#' comments. Throws ParseError.
[[nodiscard]] std::vector<TrialRecord> read_results_csv(std::istream &in);
[[nodiscard]] std::vector<TrialRecord> load_results_file(const std::string &path);

/// Groups records by (strategy, n) in first-appearance order of strategies,
/// ascending n, and computes each cell's statistics.
[[nodiscard]] std::vector<TrialStats> stats_from_records(std::span<const TrialRecord> records);

/// JSON array of {strategy, n, mean_s, sigma_s, cov, state_bytes, status}.
[[nodiscard]] std::string summary_json(std::span<const TrialStats> stats, int indent = 2);

} // namespace svbench
