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
#include "doctest.h"

#include "svbench/error.hpp"
#include "svbench/harness.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

using namespace svbench;

namespace {

Errc code_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("expected svbench::Error");
    return Errc::Io;
}

double round2(double x) { return std::round(x * 100.0) / 100.0; }

ExperimentPlan small_plan() {
    ExperimentPlan p;
    p.circuit = CircuitLabel::GHZ;
    p.strategies = {KernelStrategy{StrategyId::DirectIndex}};
    p.n_min = 3;
    p.n_max = 6;
    p.trials = 3;
    p.recovery_seconds = 0;
    p.budget = MemoryBudget::of_bytes(std::uint64_t{1} << 30);
    return p;
}

std::vector<TrialStats> fixture(const char *path) {
    return stats_from_records(load_results_file(path));
}

std::vector<double> values(const std::vector<StepRatio> &rs) {
    std::vector<double> out;
    for (const auto &r : rs) out.push_back(round2(r.ratio));
    return out;
}

} // namespace

TEST_CASE("plan shape: four cells of three timings") {
    ManualClock clock(1000);
    HarnessHooks hooks;
    hooks.clock = &clock;
    const auto rows = run_experiment(small_plan(), {}, hooks);
    REQUIRE(rows.size() == 4);
    for (unsigned i = 0; i < 4; ++i) {
        CHECK(rows[i].n == 3 + i);
        CHECK(rows[i].strategy == "direct_index");
        CHECK(rows[i].status == CellStatus::Ok);
        CHECK(rows[i].trial_seconds == std::vector<double>{1e-6, 1e-6, 1e-6});
        CHECK(rows[i].mean_s == 1e-6);
        CHECK(rows[i].sigma_s == 0.0);
        CHECK(rows[i].cov == 0.0);
        CHECK(rows[i].state_bytes == (std::uint64_t{8} << rows[i].n));
    }
}

TEST_CASE("warm-up trials are discarded") {
    auto plan = small_plan();
    plan.n_max = 3;
    plan.warmup = 2;
    ManualClock clock;
    clock.script({0, 5'000'000'000, 5'000'000'000, 9'000'000'000});
    clock.script({10'000'000'000, 10'000'001'000, 10'000'002'000, 10'000'004'000});
    clock.script({10'000'005'000, 10'000'008'000});
    HarnessHooks hooks;
    hooks.clock = &clock;
    const auto rows = run_experiment(plan, {}, hooks);
    REQUIRE(rows.size() == 1);
    REQUIRE(rows[0].trial_seconds.size() == 3);
    CHECK(rows[0].trial_seconds[0] == doctest::Approx(1e-6));
    CHECK(rows[0].trial_seconds[1] == doctest::Approx(2e-6));
    CHECK(rows[0].trial_seconds[2] == doctest::Approx(3e-6));
    CHECK(rows[0].mean_s == doctest::Approx(2e-6));
    CHECK(rows[0].sigma_s == doctest::Approx(std::sqrt(2.0 / 3.0) * 1e-6));
    CHECK(rows[0].cov == doctest::Approx(rows[0].sigma_s / rows[0].mean_s));
}

TEST_CASE("strategies run serially with recovery gaps between them") {
    auto plan = small_plan();
    plan.strategies = {KernelStrategy{StrategyId::DirectIndex},
                       KernelStrategy{StrategyId::FlatIndex},
                       KernelStrategy{StrategyId::Tensordot}};
    plan.n_max = 4;
    plan.recovery_seconds = 7.5;
    std::vector<std::string> events;
    HarnessHooks hooks;
    hooks.sleep = [&](double s) { events.push_back("sleep " + std::to_string(s)); };
    const auto rows = run_experiment(
        plan,
        [&](const TrialStats &c) { events.push_back(c.strategy + " " + std::to_string(c.n)); },
        hooks);
    CHECK(rows.size() == 6);
    const std::vector<std::string> expected{
        "direct_index 3", "direct_index 4", "sleep 7.500000", "flat_index 3", "flat_index 4",
        "sleep 7.500000", "tensordot 3",    "tensordot 4"};
    CHECK(events == expected);

    plan.recovery_seconds = 0;
    int sleeps = 0;
    hooks.sleep = [&](double) { ++sleeps; };
    (void)run_experiment(plan, {}, hooks);
    CHECK(sleeps == 0);
}

TEST_CASE("budget and kernel failures are recorded per cell") {
    auto plan = small_plan();
    plan.strategies = {KernelStrategy{StrategyId::KronDense, {}, 6},
                       KernelStrategy{StrategyId::DirectIndex}};
    plan.n_min = 5;
    plan.n_max = 8;
    plan.trials = 1;
    plan.warmup = 0;
    plan.budget = MemoryBudget::of_bytes(state_bytes(7));
    const auto rows = run_experiment(plan);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0].status == CellStatus::Ok);
    CHECK(rows[1].status == CellStatus::Ok);
    CHECK(rows[2].status == CellStatus::Failed);
    CHECK(rows[2].error.find("dense") != std::string::npos);
    CHECK(rows[2].trial_seconds.empty());
    CHECK(rows[3].status == CellStatus::MemoryBudgetExceeded);
    CHECK(rows[6].status == CellStatus::Ok);
    CHECK(rows[7].status == CellStatus::MemoryBudgetExceeded);
    CHECK(mean_series(rows, "kron_dense").size() == 2);
}

TEST_CASE("subprocess isolation") {
    auto plan = small_plan();
    plan.isolation = Isolation::Subprocess;
    plan.strategies = {KernelStrategy{StrategyId::DirectIndex},
                       KernelStrategy{StrategyId::KronDense, {}, 8}};
    plan.n_min = 8;
    plan.n_max = 9;
    plan.trials = 2;
    plan.warmup = 1;
    const auto rows = run_experiment(plan);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].status == CellStatus::Ok);
    CHECK(rows[0].trial_seconds.size() == 2);
    CHECK(rows[0].mean_s > 0.0);
    CHECK(rows[1].status == CellStatus::Ok);
    CHECK(rows[2].status == CellStatus::Ok);
    CHECK(rows[3].status == CellStatus::Failed);
    CHECK(rows[3].error.find("9 qubits") != std::string::npos);

    ManualClock clock(2000);
    HarnessHooks hooks;
    hooks.clock = &clock;
    plan.strategies = {KernelStrategy{StrategyId::FlatIndex}};
    const auto scripted = run_experiment(plan, {}, hooks);
    CHECK(scripted[0].trial_seconds == std::vector<double>{2e-6, 2e-6});
}

TEST_CASE("plan validation") {
    auto plan = small_plan();
    plan.trials = 0;
    CHECK(code_of([&] { plan.validate(); }) == Errc::InvalidPlan);
    plan = small_plan();
    plan.strategies.clear();
    CHECK(code_of([&] { plan.validate(); }) == Errc::InvalidPlan);
    plan = small_plan();
    plan.n_max = 31;
    plan.budget.reset();
    CHECK(code_of([&] { plan.validate(); }) == Errc::InvalidPlan);
    plan = small_plan();
    plan.circuit = CircuitLabel::Custom;
    CHECK(code_of([&] { plan.validate(); }) == Errc::InvalidPlan);
    plan = small_plan();
    plan.recovery_seconds = -1;
    CHECK(code_of([&] { (void)run_experiment(plan); }) == Errc::InvalidPlan);
}

TEST_CASE("plan files") {
    const auto plan = parse_plan(R"(# experiment 2 shape
circuit = qft
strategies = tensordot, flat_index:parallel ,direct_index
qubits = 27..30
trials = 5
recovery_seconds = 90
isolation = subprocess
)");
    CHECK(plan.circuit == CircuitLabel::QFT);
    REQUIRE(plan.strategies.size() == 3);
    CHECK(plan.strategies[1].name() == "flat_index:parallel");
    CHECK(plan.n_min == 27);
    CHECK(plan.n_max == 30);
    CHECK(plan.trials == 5);
    CHECK(plan.warmup == 1);
    CHECK(plan.recovery_seconds == 90.0);
    CHECK(plan.isolation == Isolation::Subprocess);

    const auto again = parse_plan(format_plan(plan));
    CHECK(format_plan(again) == format_plan(plan));

    CHECK(parse_qubit_range("7") == std::pair<unsigned, unsigned>{7, 7});
    CHECK(code_of([] { (void)parse_qubit_range("6..3"); }) == Errc::ParseError);
    CHECK(code_of([] { (void)parse_qubit_range("0..3"); }) == Errc::ParseError);
    CHECK(code_of([] { (void)parse_plan("strategies=direct_index\n"); }) == Errc::InvalidPlan);
    CHECK(code_of([] { (void)parse_plan("qubits=3\nstrategies=direct_index\ncolour=red\n"); }) ==
          Errc::ParseError);
    CHECK(code_of([] { (void)parse_plan("qubits=3\nstrategies=numpy\n"); }) == Errc::ParseError);
    CHECK(code_of([] { (void)parse_plan("qubits=3\nstrategies=direct_index\ntrials=x\n"); }) ==
          Errc::ParseError);
    CHECK(code_of([] { (void)load_plan_file("/nonexistent.plan"); }) == Errc::Io);
}

TEST_CASE("recovery override from the environment") {
    auto plan = small_plan();
    plan.recovery_seconds = 90;
    ::unsetenv(kRecoveryEnvVar);
    apply_environment(plan);
    CHECK(plan.recovery_seconds == 90.0);
    ::setenv(kRecoveryEnvVar, "0", 1);
    apply_environment(plan);
    CHECK(plan.recovery_seconds == 0.0);
    ::setenv(kRecoveryEnvVar, "-3", 1);
    CHECK(code_of([&] { apply_environment(plan); }) == Errc::ParseError);
    ::unsetenv(kRecoveryEnvVar);
}

TEST_CASE("step ratios") {
    CHECK(step_ratios({{1, 1.0}, {2, 2.0}, {3, 4.0}, {4, 8.0}}) ==
          std::vector<StepRatio>{{2, 2.0}, {3, 2.0}, {4, 2.0}});
    MeanSeries geo;
    for (unsigned n = 10; n < 20; ++n) geo[n] = std::pow(2.5, n - 10) * 0.3;
    for (const auto &r : step_ratios(geo)) CHECK(r.ratio == doctest::Approx(2.5));
    CHECK(step_ratios({{5, 1.0}}).empty());
    CHECK(code_of([] { (void)step_ratios({{1, 1.0}, {3, 4.0}}); }) == Errc::MissingQubitCount);
    CHECK(code_of([] { (void)step_ratios({}); }) == Errc::EmptySeries);
}

TEST_CASE("cliff detection is monotone in the threshold") {
    const std::vector<StepRatio> rs{{2, 2.1}, {3, 4.46}, {4, 3.0}, {5, 2.0}};
    CHECK(detect_cliff(rs) == std::vector<StepRatio>{{3, 4.46}, {4, 3.0}});
    std::size_t prev = rs.size() + 1;
    for (double t = 1.0; t <= 5.0; t += 0.25) {
        const auto flagged = detect_cliff(rs, t);
        CHECK(flagged.size() <= prev);
        prev = flagged.size();
    }
    CHECK(detect_cliff({}).empty());
}

TEST_CASE("speedup tables") {
    const MeanSeries a{{1, 3.0}, {2, 5.0}}, b{{1, 1.5}, {2, 0.5}};
    CHECK(speedup_table(a, b) == std::vector<StepRatio>{{1, 2.0}, {2, 10.0}});
    const auto ab = speedup_table(a, b), ba = speedup_table(b, a);
    for (std::size_t i = 0; i < ab.size(); ++i) CHECK(ab[i].ratio * ba[i].ratio == doctest::Approx(1.0));
    for (const auto &r : speedup_table(a, a)) CHECK(r.ratio == 1.0);
    CHECK(code_of([&] { (void)speedup_table(a, MeanSeries{{1, 1.0}}); }) ==
          Errc::MissingQubitCount);
}

TEST_CASE("GHZ fixture: step ratios and cliffs") {
    const auto stats = fixture("fixtures/ghz_means.csv");
    CHECK(strategy_names(stats) == std::vector<std::string>{"C", "F", "G", "H", "I", "J", "K"});
    const std::map<std::string, std::vector<double>> printed{
        {"C", {2.10, 4.46, 2.08}}, {"F", {2.04, 3.16, 2.15}}, {"G", {2.69, 2.66, 2.42}},
        {"H", {2.06, 4.03, 2.14}}, {"I", {3.45, 2.41, 2.28}}, {"J", {2.07, 2.09, 2.09}},
        {"K", {2.08, 2.07, 2.06}}};
    for (const auto &[name, expected] : printed) {
        CAPTURE(name);
        const auto rs = step_ratios(mean_series(stats, name));
        REQUIRE(rs.size() == 3);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(rs[i].n == 28 + i);
            CHECK(std::abs(rs[i].ratio - expected[i]) <= 0.01);
        }
        CHECK(values(rs) == expected);
    }
    const auto c = detect_cliff(step_ratios(mean_series(stats, "C")));
    REQUIRE(c.size() == 1);
    CHECK(c[0].n == 29);
    CHECK(std::abs(c[0].ratio - 4.46) <= 0.01);
    CHECK(detect_cliff(step_ratios(mean_series(stats, "K"))).empty());
    const auto i = detect_cliff(step_ratios(mean_series(stats, "I")));
    REQUIRE(i.size() == 1);
    CHECK(i[0].n == 28);
    CHECK(std::abs(i[0].ratio - 3.45) <= 0.01);
}

TEST_CASE("GHZ fixture: CPU over GPU speedups") {
    const auto stats = fixture("fixtures/ghz_means.csv");
    const auto speed = [&](const char *cpu, const char *gpu) {
        return values(speedup_table(mean_series(stats, cpu), mean_series(stats, gpu)));
    };
    CHECK(speed("G", "F") == std::vector<double>{3.09, 4.07, 3.43, 3.87});
    CHECK(speed("I", "H") == std::vector<double>{3.54, 5.92, 3.54, 3.77});
    CHECK(speed("K", "J") == std::vector<double>{10.08, 10.12, 10.04, 9.89});
}

TEST_CASE("QFT fixture: step ratios") {
    const auto stats = fixture("fixtures/qft_means.csv");
    CHECK(values(step_ratios(mean_series(stats, "C"))) == std::vector<double>{2.19, 4.33, 2.28});
    CHECK(values(step_ratios(mean_series(stats, "F"))) == std::vector<double>{2.13, 3.84, 2.15});
    CHECK(values(step_ratios(mean_series(stats, "J"))) == std::vector<double>{2.14, 2.12, 2.18});
    CHECK(values(step_ratios(mean_series(stats, "K"))) == std::vector<double>{2.13, 2.12, 2.17});
    CHECK(detect_cliff(step_ratios(mean_series(stats, "J"))).empty());
    CHECK(detect_cliff(step_ratios(mean_series(stats, "F"))).size() == 1);
}

TEST_CASE("results CSV round trip and JSON summary") {
    ManualClock clock(1500);
    HarnessHooks hooks;
    hooks.clock = &clock;
    const auto rows = run_experiment(small_plan(), {}, hooks);
    std::stringstream csv;
    write_results_csv(csv, rows);
    const auto back = stats_from_records(read_results_csv(csv));
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(back[i].strategy == rows[i].strategy);
        CHECK(back[i].n == rows[i].n);
        CHECK(back[i].trial_seconds == rows[i].trial_seconds);
        CHECK(back[i].mean_s == rows[i].mean_s);
    }

    const auto doc = nlohmann::json::parse(summary_json(rows));
    REQUIRE(doc.size() == 4);
    CHECK(doc[0]["strategy"] == "direct_index");
    CHECK(doc[0]["n"] == 3);
    CHECK(doc[0]["state_bytes"] == 64);
    CHECK(doc[0]["mean_s"].get<double>() == doctest::Approx(1.5e-6));
    CHECK(doc[0].contains("sigma_s"));
    CHECK(doc[0].contains("cov"));

    std::istringstream bad1("strategy,n,trial_index,seconds\nC,27,1\n");
    CHECK(code_of([&] { (void)read_results_csv(bad1); }) == Errc::ParseError);
    std::istringstream bad2("C,x,1,1.0\n");
    CHECK(code_of([&] { (void)read_results_csv(bad2); }) == Errc::ParseError);
    std::istringstream bad3("C,27,0,1.0\n");
    CHECK(code_of([&] { (void)read_results_csv(bad3); }) == Errc::ParseError);
    std::istringstream bad4("C,27,1,-1.0\n");
    CHECK(code_of([&] { (void)read_results_csv(bad4); }) == Errc::ParseError);
    CHECK(code_of([] { (void)load_results_file("/nonexistent.csv"); }) == Errc::Io);
}
