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
// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. Runs from the project root (fixtures are relative).
// An optional argument restricts the run to criteria whose name contains it.
#include "oracle.hpp"
#include "random_circuit.hpp"

#include "svbench/circuit.hpp"
#include "svbench/cli.hpp"
#include "svbench/error.hpp"
#include "svbench/harness.hpp"
#include "svbench/kernels.hpp"
#include "svbench/membench.hpp"
#include "svbench/roofline.hpp"
#include "svbench/state_vector.hpp"
#include "svbench/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <unistd.h>
#include <vector>

using namespace svbench;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;
std::string only; // run only criteria whose name contains this

// budget_s <= 0 means no runtime bound.
void criterion(const char *name, double budget_s, const std::function<Outcome()> &body) {
    if (std::string_view(name).find(only) == std::string_view::npos) {
        return;
    }
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception &e) {
        o = {false, std::string("threw: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0 && secs >= budget_s) {
        o.pass = false;
        o.detail += " [over the " + std::to_string(static_cast<int>(budget_s)) + " s budget]";
    }
    if (!o.pass) {
        ++failures;
    }
    std::printf("%s %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
    std::fflush(stdout);
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
}

double max_deviation(const StateVector &a, const StateVector &b) {
    double worst = 0.0;
    for (Index i = 0; i < a.size(); ++i) {
        const std::complex<double> x(a[i].real(), a[i].imag());
        const std::complex<double> y(b[i].real(), b[i].imag());
        worst = std::max(worst, std::abs(x - y));
    }
    return worst;
}

StateVector simulate(const Circuit &c, const KernelStrategy &k) {
    StateVector s = init_zero_state(c.n);
    run_circuit(s, c, k);
    return s;
}

Outcome oracle_equivalence() {
    double worst = 0.0;
    std::size_t checked = 0;
    for (const CircuitLabel label : {CircuitLabel::GHZ, CircuitLabel::QFT}) {
        for (unsigned n = 3; n <= 10; ++n) {
            for (const auto &r : verify_all(build_circuit(label, n))) {
                worst = std::max(worst, r.max_abs_deviation);
                ++checked;
                if (!(r.max_abs_deviation < 1e-6)) {
                    return {false, std::string(circuit_label_name(label)) + "(" +
                                       std::to_string(n) + ") " + r.strategy + " deviates by " +
                                       fmt(r.max_abs_deviation)};
                }
            }
        }
    }
    return {true, std::to_string(checked) + " runs, max deviation " + fmt(worst)};
}

Outcome random_equivalence() {
    std::mt19937_64 rng(20260415);
    double worst = 0.0;
    for (int c = 0; c < 100; ++c) {
        const auto n = static_cast<unsigned>(std::uniform_int_distribution<int>(2, 8)(rng));
        const auto gates = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 40)(rng));
        const Circuit circ = testing::random_circuit(rng, n, gates, testing::GateSet::CostTable);
        std::vector<StateVector> outs;
        for (StrategyId id : kAllStrategyIds) {
            outs.push_back(simulate(circ, KernelStrategy{id}));
        }
        for (std::size_t a = 0; a < outs.size(); ++a) {
            for (std::size_t b = a + 1; b < outs.size(); ++b) {
                const double d = max_deviation(outs[a], outs[b]);
                worst = std::max(worst, d);
                if (!(d < 1e-6)) {
                    return {false, "circuit " + std::to_string(c) + ": " +
                                       std::string(strategy_name(kAllStrategyIds[a])) + " vs " +
                                       std::string(strategy_name(kAllStrategyIds[b])) +
                                       " deviates by " + fmt(d)};
                }
            }
        }
    }
    return {true, "100 circuits x 10 pairs, max deviation " + fmt(worst)};
}

Outcome structure() {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (unsigned n = 1; n <= 20; ++n) {
        const StateVector s = simulate(build_ghz(n), KernelStrategy{});
        std::vector<Index> nonzero;
        for (Index i = 0; i < s.size(); ++i) {
            if (s[i] != Amplitude{}) {
                nonzero.push_back(i);
            }
        }
        if (nonzero.size() != 2) {
            return {false, "GHZ(" + std::to_string(n) + ") has " +
                               std::to_string(nonzero.size()) + " nonzero amplitudes"};
        }
        for (Index i : nonzero) {
            if (!(std::abs(std::abs(std::complex<double>(s[i])) - inv_sqrt2) <= 1e-6)) {
                return {false, "GHZ(" + std::to_string(n) + ") modulus off at " +
                                   std::to_string(i)};
            }
        }
    }
    for (unsigned n = 1; n <= 16; ++n) {
        const StateVector s = simulate(build_qft(n), KernelStrategy{});
        const double expected = std::pow(2.0, -static_cast<double>(n) / 2.0);
        for (Index i = 0; i < s.size(); ++i) {
            if (!(std::abs(std::abs(std::complex<double>(s[i])) - expected) <= 1e-6)) {
                return {false, "QFT(" + std::to_string(n) + ") modulus off at " +
                                   std::to_string(i)};
            }
        }
    }
    const std::size_t g30 = build_qft(30).ops.size();
    if (g30 != 480) {
        return {false, "QFT(30) has " + std::to_string(g30) + " gates"};
    }
    return {true, "GHZ 1..20 two amplitudes, QFT 1..16 uniform, QFT(30) 480 gates"};
}

struct ExpectedRow {
    const char *gate;
    const char *type;
    unsigned flops;
    unsigned bytes;
    std::vector<GateKind> kinds;
};

Outcome ai_table() {
    const std::vector<ExpectedRow> expected{
        {"Pauli-X", "1-qubit", 0, 32, {GateKind::X}},
        {"Pauli-Y", "1-qubit", 0, 32, {GateKind::Y}},
        {"Pauli-Z", "1-qubit", 0, 16, {GateKind::Z}},
        {"CNOT", "2-qubit", 0, 32, {GateKind::CNOT}},
        {"CZ", "2-qubit", 0, 16, {GateKind::CZ}},
        {"SWAP", "2-qubit", 0, 32, {GateKind::SWAP}},
        {"Hadamard", "1-qubit", 8, 32, {GateKind::H}},
        {"Phase (T, P)", "1-qubit", 6, 16, {GateKind::T, GateKind::P}},
        {"Rotation (Rx, Ry)", "1-qubit", 12, 32, {GateKind::Rx, GateKind::Ry}},
        {"Ctrl-Phase", "2-qubit", 6, 16, {GateKind::CP}},
        {"General 2x2", "1-qubit", 28, 32, {GateKind::General2x2}},
    };
    const auto table = cost_table();
    if (table.size() != expected.size()) {
        return {false, std::to_string(table.size()) + " rows"};
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const ExpectedRow &e = expected[i];
        const CostTableRow &r = table[i];
        // ai = flops / bytes exactly: cross-multiplied integer check plus the
        // correctly rounded quotient.
        const double ai = static_cast<double>(e.flops) / static_cast<double>(e.bytes);
        if (r.gate != e.gate || r.type != e.type || r.flops != e.flops || r.bytes != e.bytes ||
            r.ai != ai) {
            return {false, std::string("row ") + e.gate + " differs"};
        }
        for (GateKind k : e.kinds) {
            const GateCostModel m = gate_ai(k);
            if (m.row != e.gate || m.flops_per_unit != e.flops || m.bytes_per_unit != e.bytes ||
                m.ai * e.bytes != static_cast<double>(e.flops) || m.ai != ai) {
                return {false, std::string("gate_ai(") + std::string(gate_name(k)) + ")"};
            }
        }
    }
    return {true, "11 rows match"};
}

Outcome roofline_law() {
    std::size_t checked = 0;
    for (int i = 0; i < 10; ++i) {
        const double ai = 0.0625 * i * i + 0.03 * i; // 0 and a spread up to ~5.3
        for (int j = 0; j < 10; ++j) {
            const double p = 1.5 + 97.3 * j;
            for (int k = 0; k < 10; ++k) {
                const double b = 10.0 + 31.7 * k;
                const RooflinePoint pt = roofline_eval(ai, p, b);
                if (pt.predicted != std::min(p, ai * b)) {
                    return {false, "ai=" + fmt(ai) + " p=" + fmt(p) + " b=" + fmt(b)};
                }
                ++checked;
            }
        }
    }
    return {true, std::to_string(checked) + " triples exact"};
}

Outcome analysis() {
    const auto ghz = stats_from_records(load_results_file("fixtures/ghz_means.csv"));
    const auto qft = stats_from_records(load_results_file("fixtures/qft_means.csv"));
    const auto near = [](double a, double b) { return std::abs(a - b) <= 0.01; };
    std::size_t cells = 0;

    struct Step {
        const std::vector<TrialStats> *stats;
        const char *table;
        const char *strategy;
        unsigned n;
        double value;
    };
    // Bold step ratios; these are also the only transitions flagged as
    // cliffs in their series.
    const std::vector<Step> steps{
        {&ghz, "GHZ", "C", 29, 4.46}, {&ghz, "GHZ", "F", 29, 3.16},
        {&ghz, "GHZ", "H", 29, 4.03}, {&ghz, "GHZ", "I", 28, 3.45},
        {&qft, "QFT", "C", 29, 4.33}, {&qft, "QFT", "F", 29, 3.84},
    };
    for (const Step &s : steps) {
        const auto ratios = step_ratios(mean_series(*s.stats, s.strategy));
        const auto it = std::find_if(ratios.begin(), ratios.end(),
                                     [&](const StepRatio &r) { return r.n == s.n; });
        const std::string where = std::string(s.table) + " " + s.strategy + "@" + std::to_string(s.n);
        if (it == ratios.end() || !near(it->ratio, s.value)) {
            return {false, where + " step ratio"};
        }
        const auto cliffs = detect_cliff(ratios);
        if (cliffs.size() != 1 || cliffs[0].n != s.n) {
            return {false, where + " cliff flags"};
        }
        ++cells;
    }
    for (const char *clean : {"G", "J", "K"}) {
        if (!detect_cliff(step_ratios(mean_series(ghz, clean))).empty()) {
            return {false, std::string("GHZ ") + clean + " flagged a cliff"};
        }
    }
    for (const char *clean : {"J", "K"}) {
        if (!detect_cliff(step_ratios(mean_series(qft, clean))).empty()) {
            return {false, std::string("QFT ") + clean + " flagged a cliff"};
        }
    }

    struct Speed {
        const char *a;
        const char *b;
        unsigned n;
        double value;
    };
    const std::vector<Speed> speeds{
        {"I", "H", 28, 5.92}, {"K", "J", 27, 10.08}, {"K", "J", 28, 10.12},
        {"K", "J", 29, 10.04}, {"K", "J", 30, 9.89},
    };
    for (const Speed &s : speeds) {
        const auto table = speedup_table(mean_series(ghz, s.a), mean_series(ghz, s.b));
        const auto it = std::find_if(table.begin(), table.end(),
                                     [&](const StepRatio &r) { return r.n == s.n; });
        if (it == table.end() || !near(it->ratio, s.value)) {
            return {false, std::string(s.a) + "/" + s.b + "@" + std::to_string(s.n)};
        }
        ++cells;
    }
    return {true, std::to_string(cells) + " cells within 0.01, cliff flags match"};
}

bool partition_ok(unsigned n, Qubit t, std::vector<std::uint8_t> &seen) {
    const PairIndexSet ps(n, t);
    const Index dim = Index{1} << n;
    if (ps.size() * 2 != dim) {
        return false;
    }
    seen.assign(dim, 0);
    for (Index i = 0; i < ps.size(); ++i) {
        const auto [a, b] = ps.pair(i);
        if (a >= dim || b >= dim || (a >> t & 1U) != 0 || b != (a ^ (Index{1} << t)) ||
            seen[a]++ != 0 || seen[b]++ != 0 || ps.rank(a) != i) {
            return false;
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](std::uint8_t v) { return v == 1; });
}

Outcome pair_partition() {
    std::vector<std::uint8_t> seen;
    std::size_t cases = 0;
    for (unsigned n = 1; n <= 16; ++n) {
        for (Qubit t = 0; t < n; ++t) {
            if (!partition_ok(n, t, seen)) {
                return {false, "n=" + std::to_string(n) + " t=" + std::to_string(t)};
            }
            ++cases;
        }
    }
    return {true, std::to_string(cases) + " (n, t) cases, every index covered once"};
}

Outcome norm_preservation() {
    const Circuit qft = build_qft(14);
    double worst = 0.0;
    std::string worst_at;
    for (StrategyId id : kAllStrategyIds) {
        KernelStrategy k{id};
        k.dense_cap = 14;
        StateVector s = init_zero_state(qft.n);
        run_circuit(s, qft, k, [&](std::size_t gate, const StateVector &st) {
            double sum = 0.0;
            for (Index i = 0; i < st.size(); ++i) {
                sum += std::norm(std::complex<double>(st[i]));
            }
            const double dev = std::abs(std::sqrt(sum) - 1.0);
            if (dev > worst || worst_at.empty()) {
                worst = std::max(worst, dev);
                worst_at = std::string(strategy_name(id)) + " gate " + std::to_string(gate);
            }
        });
    }
    const std::string detail = "QFT(14), " + std::to_string(qft.ops.size()) +
                               " gates x 5 strategies, max |norm-1| " + fmt(worst) + " at " +
                               worst_at;
    return {worst < 1e-5, detail};
}

double population_sigma(const std::vector<double> &xs, double mean) {
    double acc = 0.0;
    for (double x : xs) {
        acc += (x - mean) * (x - mean);
    }
    return std::sqrt(acc / static_cast<double>(xs.size()));
}

Outcome stream_formula() {
    StreamConfig cfg;
    cfg.buffer_bytes = std::uint64_t{1} << 20;
    cfg.warmup = 10;
    cfg.trials = 5;
    const std::vector<std::int64_t> elapsed_ns{4'000'000, 1'000'000, 1'250'000, 999'000,
                                               1'000'500};
    ManualClock clock;
    std::int64_t t = 5'000'000'000;
    for (std::int64_t e : elapsed_ns) {
        clock.script({t, t + e});
        t += e + 17;
    }
    const BandwidthReport r = stream_probe(cfg, clock);
    if (r.timed_passes != 5 || r.warmup_passes != 10 || r.trial_gbs.size() != 5 ||
        !r.checksum_ok) {
        return {false, "probe shape"};
    }
    const double bytes = static_cast<double>(cfg.buffer_bytes);
    for (std::size_t i = 0; i < elapsed_ns.size(); ++i) {
        const double secs = static_cast<double>(elapsed_ns[i]) / 1e9;
        if (r.trial_seconds[i] != secs || r.trial_gbs[i] != 2.0 * bytes / secs / 1e9) {
            return {false, "trial " + std::to_string(i + 1) + " GB/s not exact"};
        }
    }

    // Synthetic five-trial list; the first trial is a slow ramp-up pass.
    const std::uint64_t big = std::uint64_t{512} << 20;
    const std::vector<double> secs{0.0100, 0.00480, 0.00484, 0.00490, 0.00478};
    std::vector<double> gbs;
    for (double s : secs) {
        gbs.push_back(2.0 * static_cast<double>(big) / s / 1e9);
    }
    const unsigned first[] = {1};
    const BandwidthReport kept = aggregate_bandwidth(big, secs, first, 273.0);
    const std::vector<double> tail(gbs.begin() + 1, gbs.end());
    double mean = 0.0;
    for (double g : tail) {
        mean += g;
    }
    mean /= static_cast<double>(tail.size());
    const double sigma = population_sigma(tail, mean);
    if (kept.excluded != std::vector<unsigned>{1} || kept.trial_gbs.size() != 5 ||
        std::abs(kept.mean_gbs - mean) > 1e-9 * mean || std::abs(kept.sigma_gbs - sigma) > 1e-9 * mean ||
        std::abs(*kept.percent_of_peak - 100.0 * mean / 273.0) > 1e-9) {
        return {false, "trial-1 exclusion with N=4"};
    }
    double all_mean = 0.0;
    for (double g : gbs) {
        all_mean += g;
    }
    all_mean /= 5.0;
    const BandwidthReport all = aggregate_bandwidth(big, secs);
    if (std::abs(all.mean_gbs - all_mean) > 1e-9 * all_mean ||
        std::abs(all.sigma_gbs - population_sigma(gbs, all_mean)) > 1e-9 * all_mean) {
        return {false, "no-exclusion aggregate"};
    }
    const std::vector<double> equal(4, 0.01);
    if (aggregate_bandwidth(big, equal).sigma_gbs != 0.0) {
        return {false, "sigma of equal trials"};
    }
    bool rejected = false;
    try {
        const unsigned everything[] = {1, 2, 3, 4};
        (void)aggregate_bandwidth(big, equal, everything);
    } catch (const Error &e) {
        rejected = e.code() == Errc::InvalidPlan;
    }
    if (!rejected) {
        return {false, "excluding every trial was accepted"};
    }
    return {true, "exact GB/s on 5 scripted passes; N=4 mean " + fmt(kept.mean_gbs) +
                      " sigma " + fmt(kept.sigma_gbs)};
}

Outcome parallel_determinism() {
    std::mt19937_64 rng(777);
    const KernelStrategy seq{StrategyId::DirectIndex};
    const KernelStrategy par{StrategyId::DirectIndex, DispatchOptions::parallel(4, 64)};
    for (int c = 0; c < 20; ++c) {
        const auto n = static_cast<unsigned>(std::uniform_int_distribution<int>(2, 12)(rng));
        const Circuit circ = testing::random_circuit(rng, n, 60);
        const StateVector a = simulate(circ, seq);
        const StateVector b = simulate(circ, par);
        if (!std::equal(a.amplitudes().begin(), a.amplitudes().end(), b.amplitudes().begin(),
                        [](Amplitude x, Amplitude y) {
                            return std::memcmp(&x, &y, sizeof(Amplitude)) == 0;
                        })) {
            return {false, "circuit " + std::to_string(c) + " (n=" + std::to_string(n) + ")"};
        }
    }
    return {true, "20 circuits bitwise identical with 4 workers"};
}

Outcome bench_smoke() {
    const auto csv = std::filesystem::temp_directory_path() /
                     ("svbench_smoke_" + std::to_string(::getpid()) + ".csv");
    const std::vector<std::string> args{"bench",    "--circuit",    "ghz",        "--strategies",
                                        "direct_index", "--qubits", "16..22",     "-N",
                                        "3",        "--recovery",   "0",          "--out",
                                        csv.string()};
    std::ostringstream out;
    std::ostringstream err;
    const int rc = cli_main(args, out, err);
    if (rc != 0) {
        return {false, "exit " + std::to_string(rc) + ": " + err.str()};
    }
    const auto stats = stats_from_records(load_results_file(csv.string()));
    std::filesystem::remove(csv);
    const auto ratios = step_ratios(mean_series(stats, "direct_index"));
    std::string detail = "ratios";
    bool in_band = ratios.size() == 6;
    for (const StepRatio &r : ratios) {
        detail += " " + std::to_string(r.n) + ":" + fmt(r.ratio);
        in_band = in_band && r.ratio >= 1.2 && r.ratio <= 4.0;
    }
    return {in_band, detail};
}

} // namespace

int main(int argc, char **argv) {
    if (argc > 1) {
        only = argv[1];
    }
    criterion("oracle equivalence, GHZ/QFT n=3..10", 30, oracle_equivalence);
    criterion("random-circuit equivalence", 60, random_equivalence);
    criterion("GHZ/QFT structure", 0, structure);
    criterion("AI table", 0, ai_table);
    criterion("roofline law", 0, roofline_law);
    criterion("analysis reproduction from fixtures", 1, analysis);
    criterion("pair partition n<=16", 30, pair_partition);
    criterion("norm preservation QFT(14)", 0, norm_preservation);
    criterion("STREAM formula", 0, stream_formula);
    criterion("parallel determinism", 0, parallel_determinism);
    criterion("bench smoke, direct_index GHZ 16..22", 120, bench_smoke);
    std::printf("%d failed\n", failures);
    return failures == 0 ? 0 : 1;
}
