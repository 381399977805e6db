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
#include "svbench/cli.hpp"

#include "svbench/circuit.hpp"
#include "svbench/error.hpp"
#include "svbench/harness.hpp"
#include "svbench/kernels.hpp"
#include "svbench/membench.hpp"
#include "svbench/plot.hpp"
#include "svbench/roofline.hpp"
#include "svbench/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace svbench {
namespace {

using Json = nlohmann::ordered_json;

enum class Format { Table, Csv, Json };

const std::map<std::string, Format> kFormats{
    {"table", Format::Table}, {"csv", Format::Csv}, {"json", Format::Json}};

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

std::string sci(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

struct Cell {
    std::string text;
    Json value;
};

Cell cell(std::string s) { return {s, Json(s)}; }
Cell cell(const char *s) { return cell(std::string(s)); }
Cell cell(std::string_view s) { return cell(std::string(s)); }
Cell cell(double v, int decimals) { return {fixed(v, decimals), Json(v)}; }
Cell cell_sci(double v) { return {sci(v), Json(v)}; }
template <typename I>
    requires std::is_integral_v<I>
Cell cell(I v) {
    return {std::to_string(v), Json(v)};
}
Cell cell(bool v) { return {v ? "yes" : "no", Json(v)}; }

struct Table {
    std::vector<std::string> headers;
    std::vector<std::vector<Cell>> rows;

    [[nodiscard]] Json to_json() const {
        Json arr = Json::array();
        for (const auto &row : rows) {
            Json obj = Json::object();
            for (std::size_t c = 0; c < headers.size(); ++c) {
                obj[headers[c]] = row[c].value;
            }
            arr.push_back(std::move(obj));
        }
        return arr;
    }

    void print(std::ostream &out, Format f) const {
        if (f == Format::Json) {
            out << to_json().dump(2) << '\n';
            return;
        }
        if (f == Format::Csv) {
            for (std::size_t c = 0; c < headers.size(); ++c) {
                out << (c ? "," : "") << headers[c];
            }
            out << '\n';
            for (const auto &row : rows) {
                for (std::size_t c = 0; c < row.size(); ++c) {
                    out << (c ? "," : "")
                        << (row[c].value.is_string() ? row[c].value.get<std::string>()
                                                     : row[c].value.dump());
                }
                out << '\n';
            }
            return;
        }
        std::vector<std::size_t> width(headers.size());
        for (std::size_t c = 0; c < headers.size(); ++c) {
            width[c] = headers[c].size();
            for (const auto &row : rows) {
                width[c] = std::max(width[c], row[c].text.size());
            }
        }
        const auto line = [&](const auto &get) {
            for (std::size_t c = 0; c < headers.size(); ++c) {
                const std::string &s = get(c);
                out << (c ? "  " : "") << s;
                if (c + 1 < headers.size()) {
                    out << std::string(width[c] - s.size(), ' ');
                }
            }
            out << '\n';
        };
        line([&](std::size_t c) -> const std::string & { return headers[c]; });
        for (const auto &row : rows) {
            line([&](std::size_t c) -> const std::string & { return row[c].text; });
        }
    }
};

// Maps library errors raised by bad argument values to the usage exit code.
int exit_code_for(const Error &e) {
    switch (e.code()) {
    case Errc::QubitCountOutOfRange:
    case Errc::ParseError:
    case Errc::InvalidPlan:
    case Errc::UnknownGateKind:
    case Errc::MissingParameter:
    case Errc::NonPositiveMachineParameter:
    case Errc::QubitIndexOutOfRange:
    case Errc::DuplicateQubit:
    case Errc::NonUnitaryMatrix:
        return kExitUsage;
    default:
        return kExitFailure;
    }
}

CircuitLabel require_label(const std::string &name) {
    const auto label = parse_circuit_label(name);
    if (!label || *label == CircuitLabel::Custom) {
        throw Error(Errc::ParseError, "circuit must be ghz or qft, got '" + name + "'");
    }
    return *label;
}

std::vector<TrialStats> load_results(const std::vector<std::string> &paths) {
    std::vector<TrialRecord> records;
    for (const auto &p : paths) {
        auto part = load_results_file(p);
        records.insert(records.end(), part.begin(), part.end());
    }
    if (records.empty()) {
        throw Error(Errc::EmptySeries, "results files contain no rows");
    }
    return stats_from_records(records);
}

std::pair<std::string, std::string> split_pair(const std::string &text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == text.size()) {
        throw Error(Errc::ParseError, "expected A/B, got '" + text + "'");
    }
    return {text.substr(0, slash), text.substr(slash + 1)};
}

std::string transition(unsigned n) {
    return std::to_string(n) + "q/" + std::to_string(n - 1) + "q";
}

// ---- simulate --------------------------------------------------------------

struct SimulateArgs {
    std::string circuit = "ghz";
    unsigned qubits = 0;
    std::string circuit_file;
    std::string strategy = "direct_index";
    unsigned threads = 0;
    unsigned dense_cap = kDefaultDenseCap;
    unsigned top = 8;
    std::string format = "table";
};

int run_simulate(const SimulateArgs &a, std::ostream &out) {
    Circuit c;
    if (!a.circuit_file.empty()) {
        c = load_circuit_file(a.circuit_file);
    } else {
        if (a.qubits == 0) {
            throw Error(Errc::ParseError, "--qubits is required without --circuit-file");
        }
        c = build_circuit(require_label(a.circuit), a.qubits);
    }
    KernelStrategy k = KernelStrategy::parse(a.strategy);
    k.dispatch.threads = a.threads;
    k.dense_cap = a.dense_cap;

    StateVector s = init_zero_state(c.n);
    const auto t0 = std::chrono::steady_clock::now();
    run_circuit(s, c, k);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::vector<Index> order;
    Index nonzero = 0;
    for (Index i = 0; i < s.size(); ++i) {
        if (std::norm(s[i]) > 0.0F) {
            ++nonzero;
            order.push_back(i);
        }
    }
    const auto by_probability = [&](Index x, Index y) {
        const double px = std::norm(std::complex<double>(s[x]));
        const double py = std::norm(std::complex<double>(s[y]));
        return px != py ? px > py : x < y;
    };
    const std::size_t shown = std::min<std::size_t>(a.top, order.size());
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(shown),
                      order.end(), by_probability);
    order.resize(shown);

    Table summary{{"circuit", "n", "gates", "strategy", "seconds", "norm", "nonzero"}, {}};
    summary.rows.push_back({cell(circuit_label_name(c.label)), cell(c.n), cell(c.ops.size()),
                            cell(k.name()), cell(seconds, 6), cell(state_norm(s), 9),
                            cell(nonzero)});
    Table amps{{"index", "basis", "re", "im", "probability"}, {}};
    for (Index i : order) {
        std::string bits(c.n, '0');
        for (unsigned q = 0; q < c.n; ++q) {
            bits[c.n - 1 - q] = ((i >> q) & 1U) ? '1' : '0';
        }
        amps.rows.push_back({cell(i), cell(bits), cell(double(s[i].real()), 8),
                             cell(double(s[i].imag()), 8),
                             cell(std::norm(std::complex<double>(s[i])), 8)});
    }

    const Format f = kFormats.at(a.format);
    if (f == Format::Json) {
        Json doc = summary.to_json()[0];
        doc["amplitudes"] = amps.to_json();
        out << doc.dump(2) << '\n';
    } else if (f == Format::Csv) {
        for (std::size_t col = 0; col < summary.headers.size(); ++col) {
            out << "# " << summary.headers[col] << '=' << summary.rows[0][col].text << '\n';
        }
        amps.print(out, f);
    } else {
        summary.print(out, f);
        out << '\n';
        amps.print(out, f);
    }
    return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
    std::string circuit = "all";
    std::string qubits = "3..8";
    std::vector<std::string> strategies;
    std::string reference = "kron_dense";
    unsigned dense_cap = kDefaultDenseCap;
    std::string format = "table";
};

int run_verify(const VerifyArgs &a, std::ostream &out) {
    std::vector<CircuitLabel> labels;
    if (a.circuit == "all") {
        labels = {CircuitLabel::GHZ, CircuitLabel::QFT};
    } else {
        labels = {require_label(a.circuit)};
    }
    const auto [lo, hi] = parse_qubit_range(a.qubits);
    KernelStrategy ref = KernelStrategy::parse(a.reference);
    ref.dense_cap = a.dense_cap;
    std::vector<KernelStrategy> strategies;
    if (a.strategies.empty()) {
        for (StrategyId id : kAllStrategyIds) {
            strategies.push_back(KernelStrategy{id, {}, a.dense_cap});
        }
    } else {
        for (const auto &name : a.strategies) {
            KernelStrategy k = KernelStrategy::parse(name);
            k.dense_cap = a.dense_cap;
            strategies.push_back(k);
        }
    }

    Table t{{"circuit", "n", "strategy", "reference", "max_abs_deviation", "result"}, {}};
    bool all_pass = true;
    for (CircuitLabel label : labels) {
        for (unsigned n = lo; n <= hi; ++n) {
            const Circuit c = build_circuit(label, n);
            for (const auto &k : strategies) {
                const VerificationReport r = verify_strategy(c, k, ref);
                all_pass = all_pass && r.pass;
                t.rows.push_back({cell(circuit_label_name(label)), cell(n), cell(r.strategy),
                                  cell(r.reference), cell_sci(r.max_abs_deviation),
                                  cell(r.pass ? "PASS" : "FAIL")});
            }
        }
    }
    t.print(out, kFormats.at(a.format));
    return all_pass ? kExitOk : kExitFailure;
}

// ---- bench -----------------------------------------------------------------

struct BenchArgs {
    std::string plan_file;
    std::string circuit = "ghz";
    std::vector<std::string> strategies;
    std::string qubits;
    unsigned trials = 5;
    unsigned warmup = 1;
    double recovery = 90.0;
    std::string isolation = "in_process";
    std::string out_csv;
    std::string out_json;
    std::string format = "table";
};

int run_bench(const BenchArgs &a, std::ostream &out, std::ostream &err) {
    ExperimentPlan plan;
    if (!a.plan_file.empty()) {
        plan = load_plan_file(a.plan_file);
    } else {
        if (a.qubits.empty() || a.strategies.empty()) {
            throw Error(Errc::ParseError,
                        "bench needs --plan or both --strategies and --qubits");
        }
        plan.circuit = require_label(a.circuit);
        for (const auto &name : a.strategies) {
            plan.strategies.push_back(KernelStrategy::parse(name));
        }
        std::tie(plan.n_min, plan.n_max) = parse_qubit_range(a.qubits);
        plan.trials = a.trials;
        plan.warmup = a.warmup;
        plan.recovery_seconds = a.recovery;
        plan.isolation = a.isolation == "subprocess" ? Isolation::Subprocess
                                                     : Isolation::InProcess;
    }
    apply_environment(plan);
    plan.validate();

    std::ofstream csv;
    if (!a.out_csv.empty()) {
        csv.open(a.out_csv);
        if (!csv) {
            throw Error(Errc::Io, "cannot write " + a.out_csv);
        }
        write_results_csv_header(csv);
    }
    const auto sink = [&](const TrialStats &cell) {
        err << "[bench] " << cell.strategy << " n=" << cell.n << ' '
            << cell_status_name(cell.status);
        if (cell.status == CellStatus::Ok) {
            err << " mean=" << sci(cell.mean_s) << "s cov=" << fixed(cell.cov, 4);
        } else {
            err << ": " << cell.error;
        }
        err << '\n';
        if (csv.is_open()) {
            write_results_csv_rows(csv, cell);
            csv.flush();
        }
    };
    const std::vector<TrialStats> results = run_experiment(plan, sink);

    if (!a.out_json.empty()) {
        std::ofstream js(a.out_json);
        if (!js) {
            throw Error(Errc::Io, "cannot write " + a.out_json);
        }
        js << summary_json(results) << '\n';
    }

    Table t{{"strategy", "n", "trials", "mean_s", "sigma_s", "cov", "state_bytes", "status"}, {}};
    bool failed = false;
    for (const auto &c : results) {
        failed = failed || c.status == CellStatus::Failed;
        t.rows.push_back({cell(c.strategy), cell(c.n), cell(c.trial_seconds.size()),
                          cell_sci(c.mean_s), cell_sci(c.sigma_s), cell(c.cov, 4),
                          cell(c.state_bytes), cell(cell_status_name(c.status))});
    }
    t.print(out, kFormats.at(a.format));
    return failed ? kExitFailure : kExitOk;
}

// ---- stream ----------------------------------------------------------------

struct StreamArgs {
    std::uint64_t mb = 512;
    unsigned warmup = 10;
    unsigned trials = 5;
    std::vector<unsigned> exclude;
    std::optional<double> peak_gbs;
    bool parallel = false;
    unsigned threads = 0;
    std::string format = "table";
};

int run_stream(const StreamArgs &a, std::ostream &out) {
    StreamConfig cfg;
    cfg.buffer_bytes = a.mb << 20;
    cfg.warmup = a.warmup;
    cfg.trials = a.trials;
    cfg.exclude = a.exclude;
    cfg.peak_gbs = a.peak_gbs;
    cfg.parallel = a.parallel;
    cfg.threads = a.threads;
    const BandwidthReport r = stream_probe(cfg);

    Table trials{{"trial", "seconds", "gb_per_s", "excluded"}, {}};
    for (std::size_t i = 0; i < r.trial_seconds.size(); ++i) {
        const bool ex = std::find(r.excluded.begin(), r.excluded.end(), i + 1) != r.excluded.end();
        trials.rows.push_back(
            {cell(i + 1), cell(r.trial_seconds[i], 6), cell(r.trial_gbs[i], 1), cell(ex)});
    }
    const std::size_t kept = r.timed_passes - r.excluded.size();
    Table summary{{"buffer_bytes", "warmup", "trials_used", "mean_gb_per_s", "sigma_gb_per_s",
                   "percent_of_peak", "checksum_ok"},
                  {}};
    summary.rows.push_back(
        {cell(r.buffer_bytes), cell(r.warmup_passes), cell(kept), cell(r.mean_gbs, 1),
         cell(r.sigma_gbs, 1),
         r.percent_of_peak ? cell(*r.percent_of_peak, 1) : Cell{"-", Json(nullptr)},
         cell(r.checksum_ok)});

    const Format f = kFormats.at(a.format);
    if (f == Format::Json) {
        Json doc = summary.to_json()[0];
        doc["trials"] = trials.to_json();
        out << doc.dump(2) << '\n';
    } else {
        trials.print(out, f);
        out << '\n';
        summary.print(out, f);
    }
    return r.checksum_ok ? kExitOk : kExitFailure;
}

// ---- roofline --------------------------------------------------------------

struct RooflineArgs {
    std::string gate;
    std::optional<double> p_peak;
    std::optional<double> b_peak;
    std::vector<double> ai;
    std::string circuit;
    unsigned qubits = 0;
    std::string format = "table";
};

int run_roofline(const RooflineArgs &a, std::ostream &out) {
    if (a.p_peak.has_value() != a.b_peak.has_value()) {
        throw Error(Errc::ParseError, "--p-peak and --b-peak go together");
    }
    const bool eval = a.p_peak.has_value();
    std::vector<std::string> headers{"gate", "type", "flops", "bytes", "ai"};
    if (eval) {
        headers.insert(headers.end(), {"predicted_gflops", "ridge_ai", "regime"});
    }
    Table t{headers, {}};
    const auto add = [&](std::vector<Cell> row, double ai) {
        if (eval) {
            const RooflinePoint p = roofline_eval(ai, *a.p_peak, *a.b_peak);
            row.push_back(cell(p.predicted, 3));
            row.push_back(cell(p.ridge, 3));
            row.push_back(cell(regime_name(p.regime)));
        }
        t.rows.push_back(std::move(row));
    };

    if (!a.ai.empty()) {
        for (double ai : a.ai) {
            add({cell("-"), cell("-"), cell("-"), cell("-"), cell(ai, 3)}, ai);
        }
    } else if (!a.circuit.empty()) {
        if (a.qubits == 0) {
            throw Error(Errc::ParseError, "--circuit needs --qubits");
        }
        const Circuit c = build_circuit(require_label(a.circuit), a.qubits);
        const CircuitAiProfile p = circuit_ai_profile(c);
        add({cell(std::string(circuit_label_name(c.label)) + "(" + std::to_string(c.n) + ")"),
             cell("circuit"), cell(p.flops), cell(p.bytes), cell(p.weighted_ai(), 5)},
            p.weighted_ai());
    } else if (!a.gate.empty()) {
        const GateCostModel m = gate_ai(a.gate);
        add({cell(m.row), cell(gate_arity(m.kind) == 1 ? "1-qubit" : "2-qubit"),
             cell(m.flops_per_unit), cell(m.bytes_per_unit), cell(m.ai, 3)},
            m.ai);
    } else {
        for (const CostTableRow &row : cost_table()) {
            add({cell(row.gate), cell(row.type), cell(row.flops), cell(row.bytes),
                 cell(row.ai, 3)},
                row.ai);
        }
    }
    t.print(out, kFormats.at(a.format));
    return kExitOk;
}

// ---- analyze ---------------------------------------------------------------

struct AnalyzeArgs {
    std::vector<std::string> results;
    bool step_ratios = false;
    bool cliff = false;
    double threshold = kDefaultCliffThreshold;
    std::vector<std::string> speedups;
    std::string format = "table";
};

int run_analyze(const AnalyzeArgs &a, std::ostream &out) {
    const std::vector<TrialStats> stats = load_results(a.results);
    const bool default_view = !a.step_ratios && !a.cliff && a.speedups.empty();
    const Format f = kFormats.at(a.format);
    Json doc = Json::object();
    bool first = true;
    const auto emit = [&](const char *name, const Table &t) {
        if (f == Format::Json) {
            doc[name] = t.to_json();
            return;
        }
        if (!first) {
            out << '\n';
        }
        first = false;
        if (f == Format::Table) {
            out << "== " << name << " ==\n";
        }
        t.print(out, f);
    };

    if (a.step_ratios || default_view) {
        Table t{{"strategy", "transition", "n", "ratio", "cliff"}, {}};
        for (const auto &name : strategy_names(stats)) {
            const MeanSeries means = mean_series(stats, name);
            if (means.size() < 2) {
                continue;
            }
            for (const StepRatio &r : step_ratios(means)) {
                t.rows.push_back({cell(name), cell(transition(r.n)), cell(r.n),
                                  cell(r.ratio, 2), cell(r.ratio >= a.threshold)});
            }
        }
        emit("step_ratios", t);
    }
    if (a.cliff || default_view) {
        Table t{{"strategy", "transition", "n", "ratio"}, {}};
        for (const auto &name : strategy_names(stats)) {
            const MeanSeries means = mean_series(stats, name);
            if (means.size() < 2) {
                continue;
            }
            for (const StepRatio &r : detect_cliff(step_ratios(means), a.threshold)) {
                t.rows.push_back({cell(name), cell(transition(r.n)), cell(r.n), cell(r.ratio, 2)});
            }
        }
        emit("cliffs", t);
    }
    if (!a.speedups.empty()) {
        Table t{{"a", "b", "n", "speedup"}, {}};
        for (const auto &spec : a.speedups) {
            const auto [x, y] = split_pair(spec);
            for (const StepRatio &r : speedup_table(mean_series(stats, x), mean_series(stats, y))) {
                t.rows.push_back({cell(x), cell(y), cell(r.n), cell(r.ratio, 2)});
            }
        }
        emit("speedups", t);
    }
    if (f == Format::Json) {
        out << doc.dump(2) << '\n';
    }
    return kExitOk;
}

// ---- plot ------------------------------------------------------------------

struct PlotArgs {
    std::vector<std::string> results;
    std::string kind = "time";
    std::string out_path;
    std::string band;
    std::string band_label = "DRAM cliff";
    std::vector<double> references;
    std::string reference_label;
    std::vector<std::string> speedups;
    std::string title;
    bool log_y = false;
};

int run_plot(const PlotArgs &a, std::ostream &out) {
    const std::vector<TrialStats> stats = load_results(a.results);
    const auto kind = parse_plot_kind(a.kind);
    if (!kind) {
        throw Error(Errc::ParseError, "unknown plot kind '" + a.kind + "'");
    }
    PlotSpec spec;
    switch (*kind) {
    case PlotKind::TimeVsQubitsLog:
        spec = time_plot(stats);
        break;
    case PlotKind::SpeedupVsQubits: {
        if (a.speedups.empty()) {
            throw Error(Errc::ParseError, "speedup plots need at least one --speedup A/B");
        }
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const auto &s : a.speedups) {
            pairs.push_back(split_pair(s));
        }
        spec = speedup_plot(stats, pairs);
        break;
    }
    case PlotKind::CliffBars:
        spec = cliff_bars_plot(stats);
        break;
    }
    if (!a.title.empty()) {
        spec.title = a.title;
    }
    spec.log_y = spec.log_y || a.log_y;
    if (!a.band.empty()) {
        const auto [x0, x1] = parse_qubit_range(a.band);
        spec.band = PlotBand{static_cast<double>(x0), static_cast<double>(x1), a.band_label};
    }
    for (double y : a.references) {
        std::string label = a.reference_label;
        if (label.empty()) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%gx", y);
            label = buf;
        }
        spec.reference_lines.push_back({y, label});
    }
    const std::string svg = emit_plot(spec);
    if (a.out_path.empty()) {
        out << svg;
    } else {
        std::ofstream file(a.out_path);
        if (!file || !(file << svg)) {
            throw Error(Errc::Io, "cannot write " + a.out_path);
        }
    }
    return kExitOk;
}

void add_format(CLI::App *cmd, std::string &format) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
}

} // namespace

int cli_main(std::span<const std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"State-vector simulation kernels and memory-bound performance measurement",
                 "svbench"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "svbench 1.0.0");

    const auto circuit_check = CLI::IsMember({"ghz", "qft"}, CLI::ignore_case);

    SimulateArgs sim;
    auto *simulate = app.add_subcommand("simulate", "Run one circuit and summarize the final state");
    simulate->add_option("--circuit", sim.circuit, "ghz or qft")->check(circuit_check)
        ->capture_default_str();
    simulate->add_option("--qubits,-n", sim.qubits, "Qubit count");
    simulate->add_option("--circuit-file", sim.circuit_file, "Circuit text file")
        ->check(CLI::ExistingFile);
    simulate->add_option("--strategy", sim.strategy, "Kernel strategy[:parallel]")
        ->capture_default_str();
    simulate->add_option("--threads", sim.threads, "Worker threads for parallel dispatch");
    simulate->add_option("--dense-cap", sim.dense_cap, "Largest n for kron_dense")
        ->capture_default_str();
    simulate->add_option("--top", sim.top, "Largest-probability amplitudes to print")
        ->capture_default_str();
    add_format(simulate, sim.format);

    VerifyArgs ver;
    auto *verify = app.add_subcommand("verify", "Compare kernels against a reference strategy");
    verify->add_option("--circuit", ver.circuit, "ghz, qft or all")
        ->check(CLI::IsMember({"ghz", "qft", "all"}, CLI::ignore_case))
        ->capture_default_str();
    verify->add_option("--qubits,-n", ver.qubits, "N or MIN..MAX")->capture_default_str();
    verify->add_option("--strategies", ver.strategies, "Strategies to check (default: all)")
        ->delimiter(',');
    verify->add_option("--reference", ver.reference, "Reference strategy")->capture_default_str();
    verify->add_option("--dense-cap", ver.dense_cap, "Largest n for kron_dense")
        ->capture_default_str();
    add_format(verify, ver.format);

    BenchArgs ben;
    auto *bench = app.add_subcommand("bench", "Run a timed experiment sweep");
    bench->add_option("--plan", ben.plan_file, "Plan file (key=value)")->check(CLI::ExistingFile);
    bench->add_option("--circuit", ben.circuit, "ghz or qft")->check(circuit_check)
        ->capture_default_str();
    bench->add_option("--strategies", ben.strategies, "Comma-separated strategies")
        ->delimiter(',');
    bench->add_option("--qubits,-n", ben.qubits, "N or MIN..MAX");
    bench->add_option("--trials,-N", ben.trials, "Timed trials per cell")->capture_default_str();
    bench->add_option("--warmup", ben.warmup, "Discarded warm-up trials per cell")
        ->capture_default_str();
    bench->add_option("--recovery", ben.recovery, "Idle seconds between strategies")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    bench->add_option("--isolation", ben.isolation, "in_process or subprocess")
        ->check(CLI::IsMember({"in_process", "subprocess"}))
        ->capture_default_str();
    bench->add_option("--out", ben.out_csv, "Write per-trial results CSV");
    bench->add_option("--json", ben.out_json, "Write per-cell JSON summary");
    add_format(bench, ben.format);

    StreamArgs str;
    auto *stream = app.add_subcommand("stream", "Measure sustained copy bandwidth");
    stream->add_option("--mb", str.mb, "Buffer size in MiB")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    stream->add_option("--warmup", str.warmup, "Untimed passes")->capture_default_str();
    stream->add_option("--trials", str.trials, "Timed passes")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    stream->add_option("--exclude", str.exclude, "1-based trials left out of the mean")
        ->delimiter(',');
    stream->add_option("--peak-gbs", str.peak_gbs, "Theoretical peak for percent-of-peak")
        ->check(CLI::PositiveNumber);
    stream->add_flag("--parallel", str.parallel, "Data-parallel copy");
    stream->add_option("--threads", str.threads, "Worker threads with --parallel");
    add_format(stream, str.format);

    RooflineArgs roof;
    auto *roofline = app.add_subcommand("roofline", "Gate arithmetic intensity and roofline bound");
    roofline->add_option("--gate", roof.gate, "One gate kind (default: whole table)");
    roofline->add_option("--p-peak", roof.p_peak, "Peak compute, GFLOP/s");
    roofline->add_option("--b-peak", roof.b_peak, "Peak bandwidth, GB/s");
    roofline->add_option("--ai", roof.ai, "Evaluate explicit intensities")->delimiter(',');
    roofline->add_option("--circuit", roof.circuit, "Profile a circuit (ghz or qft)")
        ->check(circuit_check);
    roofline->add_option("--qubits,-n", roof.qubits, "Qubit count for --circuit");
    add_format(roofline, roof.format);

    AnalyzeArgs ana;
    auto *analyze = app.add_subcommand("analyze", "Step ratios, cliffs and speedups from results");
    analyze->add_option("--results", ana.results, "Results CSV (repeatable)")
        ->required()
        ->check(CLI::ExistingFile);
    analyze->add_flag("--step-ratios", ana.step_ratios, "Print t(n)/t(n-1)");
    analyze->add_flag("--cliff", ana.cliff, "Print transitions at or above the threshold");
    analyze->add_option("--threshold", ana.threshold, "Cliff threshold")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    analyze->add_option("--speedup", ana.speedups, "A/B: mean time of A over B (repeatable)");
    add_format(analyze, ana.format);

    PlotArgs plo;
    auto *plot = app.add_subcommand("plot", "SVG chart from results");
    plot->add_option("--results", plo.results, "Results CSV (repeatable)")
        ->required()
        ->check(CLI::ExistingFile);
    plot->add_option("--kind", plo.kind, "time, speedup or cliff")
        ->check(CLI::IsMember({"time", "speedup", "cliff"}))
        ->capture_default_str();
    plot->add_option("--out", plo.out_path, "SVG path (default: standard output)");
    plot->add_option("--band", plo.band, "Shaded qubit interval MIN..MAX");
    plot->add_option("--band-label", plo.band_label, "Band caption")->capture_default_str();
    plot->add_option("--reference", plo.references, "Horizontal reference line (repeatable)");
    plot->add_option("--reference-label", plo.reference_label, "Reference line caption");
    plot->add_option("--speedup", plo.speedups, "A/B series for --kind speedup (repeatable)");
    plot->add_option("--title", plo.title, "Chart title");
    plot->add_flag("--log-y", plo.log_y, "Logarithmic y axis");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*simulate) {
            return run_simulate(sim, out);
        }
        if (*verify) {
            return run_verify(ver, out);
        }
        if (*bench) {
            return run_bench(ben, out, err);
        }
        if (*stream) {
            return run_stream(str, out);
        }
        if (*roofline) {
            return run_roofline(roof, out);
        }
        if (*analyze) {
            return run_analyze(ana, out);
        }
        if (*plot) {
            return run_plot(plo, out);
        }
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        const int code = exit_code_for(e);
        if (code == kExitUsage) {
            err << "run with --help for usage\n";
        }
        return code;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

int cli_main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cli_main(args, std::cout, std::cerr);
}

} // namespace svbench
