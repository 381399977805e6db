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
#include "svbench/harness.hpp"

#include "svbench/error.hpp"
#include "svbench/stats.hpp"

#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include <sys/wait.h>
#include <unistd.h>

namespace svbench {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

template <typename T>
std::optional<T> parse_number(std::string_view s) {
    s = trim(s);
    T value{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        return std::nullopt;
    }
    return value;
}

unsigned parse_count(std::string_view key, std::string_view value) {
    const auto v = parse_number<unsigned>(value);
    if (!v) {
        throw Error(Errc::ParseError,
                    std::string(key) + ": expected a non-negative integer, got '" +
                        std::string(value) + "'");
    }
    return *v;
}

double parse_seconds(std::string_view key, std::string_view value) {
    const auto v = parse_number<double>(value);
    if (!v || !std::isfinite(*v) || *v < 0.0) {
        throw Error(Errc::ParseError, std::string(key) + ": expected seconds >= 0, got '" +
                                          std::string(value) + "'");
    }
    return *v;
}

} // namespace

std::string_view isolation_name(Isolation i) noexcept {
    return i == Isolation::InProcess ? "in_process" : "subprocess";
}

std::string_view cell_status_name(CellStatus s) noexcept {
    switch (s) {
    case CellStatus::Ok:
        return "ok";
    case CellStatus::MemoryBudgetExceeded:
        return "memory_budget_exceeded";
    case CellStatus::Failed:
        return "failed";
    }
    return "failed";
}

void ExperimentPlan::validate() const {
    const auto fail = [](const std::string &what) { throw Error(Errc::InvalidPlan, what); };
    if (circuit == CircuitLabel::Custom) {
        fail("plan circuit must be ghz or qft");
    }
    if (strategies.empty()) {
        fail("plan lists no strategies");
    }
    if (trials < 1) {
        fail("plan needs at least one timed trial");
    }
    const unsigned max_qubits = budget ? budget->max_qubits : kDefaultMaxQubits;
    if (n_min < 1 || n_min > n_max || n_max > max_qubits) {
        fail("qubit range " + std::to_string(n_min) + ".." + std::to_string(n_max) +
             " is outside 1.." + std::to_string(max_qubits));
    }
    if (!std::isfinite(recovery_seconds) || recovery_seconds < 0.0) {
        fail("recovery_seconds must be >= 0");
    }
}

std::pair<unsigned, unsigned> parse_qubit_range(std::string_view text) {
    text = trim(text);
    const auto dots = text.find("..");
    std::optional<unsigned> lo;
    std::optional<unsigned> hi;
    if (dots == std::string_view::npos) {
        lo = hi = parse_number<unsigned>(text);
    } else {
        lo = parse_number<unsigned>(text.substr(0, dots));
        hi = parse_number<unsigned>(text.substr(dots + 2));
    }
    if (!lo || !hi || *lo < 1 || *lo > *hi) {
        throw Error(Errc::ParseError, "bad qubit range '" + std::string(text) +
                                          "' (expected N or MIN..MAX with 1 <= MIN <= MAX)");
    }
    return {*lo, *hi};
}

ExperimentPlan parse_plan(std::string_view text) {
    ExperimentPlan plan;
    bool have_qubits = false;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw Error(Errc::ParseError,
                        "plan line " + std::to_string(line_no) + ": expected key=value");
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key == "circuit") {
            const auto label = parse_circuit_label(value);
            if (!label) {
                throw Error(Errc::ParseError, "unknown circuit '" + std::string(value) + "'");
            }
            plan.circuit = *label;
        } else if (key == "strategies") {
            plan.strategies.clear();
            for (std::string_view item : split(value, ',')) {
                if (!item.empty()) {
                    plan.strategies.push_back(KernelStrategy::parse(item));
                }
            }
        } else if (key == "qubits") {
            std::tie(plan.n_min, plan.n_max) = parse_qubit_range(value);
            have_qubits = true;
        } else if (key == "trials") {
            plan.trials = parse_count(key, value);
        } else if (key == "warmup") {
            plan.warmup = parse_count(key, value);
        } else if (key == "recovery_seconds") {
            plan.recovery_seconds = parse_seconds(key, value);
        } else if (key == "isolation") {
            if (value == "in_process") {
                plan.isolation = Isolation::InProcess;
            } else if (value == "subprocess") {
                plan.isolation = Isolation::Subprocess;
            } else {
                throw Error(Errc::ParseError, "unknown isolation '" + std::string(value) + "'");
            }
        } else {
            throw Error(Errc::ParseError, "plan line " + std::to_string(line_no) +
                                              ": unknown key '" + std::string(key) + "'");
        }
    }
    if (!have_qubits) {
        throw Error(Errc::InvalidPlan, "plan has no qubits= line");
    }
    plan.validate();
    return plan;
}

ExperimentPlan load_plan_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(Errc::Io, "cannot open plan file " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_plan(ss.str());
}

std::string format_plan(const ExperimentPlan &plan) {
    std::ostringstream out;
    out << "circuit=" << circuit_label_name(plan.circuit) << '\n' << "strategies=";
    for (std::size_t i = 0; i < plan.strategies.size(); ++i) {
        out << (i ? "," : "") << plan.strategies[i].name();
    }
    out << '\n'
        << "qubits=" << plan.n_min << ".." << plan.n_max << '\n'
        << "trials=" << plan.trials << '\n'
        << "warmup=" << plan.warmup << '\n'
        << "recovery_seconds=" << plan.recovery_seconds << '\n'
        << "isolation=" << isolation_name(plan.isolation) << '\n';
    return out.str();
}

void apply_environment(ExperimentPlan &plan) {
    if (const char *value = std::getenv(kRecoveryEnvVar)) {
        plan.recovery_seconds = parse_seconds(kRecoveryEnvVar, value);
    }
}

void TrialStats::finalize() {
    state_bytes = svbench::state_bytes(n);
    if (trial_seconds.empty()) {
        mean_s = sigma_s = cov = 0.0;
        return;
    }
    const SampleStats s = summarize(trial_seconds);
    mean_s = s.mean;
    sigma_s = s.sigma;
    cov = s.cov;
}

namespace {

struct CellOutcome {
    CellStatus status = CellStatus::Ok;
    std::vector<double> seconds;
    std::string error;
};

// Allocation and circuit construction stay outside the timed region.
CellOutcome time_cell(const ExperimentPlan &plan, const KernelStrategy &strategy, unsigned n,
                      const MemoryBudget &budget, Clock &clock) {
    CellOutcome out;
    try {
        const Circuit c = build_circuit(plan.circuit, n);
        StateVector s = init_zero_state(n, budget);
        for (unsigned i = 0; i < plan.warmup + plan.trials; ++i) {
            if (i > 0) {
                s.reset_zero();
            }
            const std::int64_t t0 = clock.now_ns();
            run_circuit(s, c, strategy);
            const std::int64_t t1 = clock.now_ns();
            if (i >= plan.warmup) {
                out.seconds.push_back(static_cast<double>(t1 - t0) / 1e9);
            }
        }
    } catch (const Error &e) {
        out.status = e.code() == Errc::MemoryBudgetExceeded ? CellStatus::MemoryBudgetExceeded
                                                            : CellStatus::Failed;
        out.error = e.what();
        out.seconds.clear();
    } catch (const std::exception &e) {
        out.status = CellStatus::Failed;
        out.error = e.what();
        out.seconds.clear();
    }
    return out;
}

void write_all(int fd, const void *data, std::size_t size) {
    const auto *p = static_cast<const char *>(data);
    while (size > 0) {
        const ssize_t w = ::write(fd, p, size);
        if (w <= 0) {
            return;
        }
        p += w;
        size -= static_cast<std::size_t>(w);
    }
}

// Frame: status byte, uint64 count, count doubles, then the error text.
CellOutcome time_cell_subprocess(const ExperimentPlan &plan, const KernelStrategy &strategy,
                                 unsigned n, const MemoryBudget &budget, Clock &clock) {
    int fds[2];
    if (::pipe(fds) != 0) {
        throw Error(Errc::Io, std::string("pipe: ") + std::strerror(errno));
    }
    const pid_t pid = ::fork();
    if (pid < 0) {
        ::close(fds[0]);
        ::close(fds[1]);
        throw Error(Errc::Io, std::string("fork: ") + std::strerror(errno));
    }
    if (pid == 0) {
        ::close(fds[0]);
        const CellOutcome r = time_cell(plan, strategy, n, budget, clock);
        const auto status = static_cast<unsigned char>(r.status);
        const std::uint64_t count = r.seconds.size();
        write_all(fds[1], &status, 1);
        write_all(fds[1], &count, sizeof count);
        write_all(fds[1], r.seconds.data(), count * sizeof(double));
        write_all(fds[1], r.error.data(), r.error.size());
        ::close(fds[1]);
        ::_exit(0);
    }
    ::close(fds[1]);
    std::string frame;
    char buf[4096];
    ssize_t got = 0;
    while ((got = ::read(fds[0], buf, sizeof buf)) > 0) {
        frame.append(buf, static_cast<std::size_t>(got));
    }
    ::close(fds[0]);
    int wstatus = 0;
    ::waitpid(pid, &wstatus, 0);

    CellOutcome out;
    constexpr std::size_t header = 1 + sizeof(std::uint64_t);
    if (!WIFEXITED(wstatus) || WEXITSTATUS(wstatus) != 0 || frame.size() < header) {
        out.status = CellStatus::Failed;
        out.error = WIFSIGNALED(wstatus)
                        ? "worker killed by signal " + std::to_string(WTERMSIG(wstatus))
                        : "worker exited without a result";
        return out;
    }
    out.status = static_cast<CellStatus>(static_cast<unsigned char>(frame[0]));
    std::uint64_t count = 0;
    std::memcpy(&count, frame.data() + 1, sizeof count);
    if (frame.size() < header + count * sizeof(double)) {
        out.status = CellStatus::Failed;
        out.error = "truncated worker result";
        return out;
    }
    out.seconds.resize(count);
    std::memcpy(out.seconds.data(), frame.data() + header, count * sizeof(double));
    out.error = frame.substr(header + count * sizeof(double));
    return out;
}

} // namespace

std::vector<TrialStats> run_experiment(const ExperimentPlan &plan, const ResultSink &sink,
                                       HarnessHooks hooks) {
    plan.validate();
    const MemoryBudget budget = plan.budget ? *plan.budget : MemoryBudget::detect();
    SteadyClock steady;
    Clock &clock = hooks.clock ? *hooks.clock : steady;
    const auto sleep = hooks.sleep ? hooks.sleep : [](double seconds) {
        std::this_thread::sleep_for(std::chrono::duration<double>(seconds));
    };

    std::vector<TrialStats> results;
    for (std::size_t si = 0; si < plan.strategies.size(); ++si) {
        const KernelStrategy &strategy = plan.strategies[si];
        if (si > 0 && plan.recovery_seconds > 0.0) {
            sleep(plan.recovery_seconds);
        }
        for (unsigned n = plan.n_min; n <= plan.n_max; ++n) {
            TrialStats cell;
            cell.strategy = strategy.name();
            cell.n = n;
            CellOutcome outcome;
            try {
                budget.admit(n);
                outcome = plan.isolation == Isolation::InProcess
                              ? time_cell(plan, strategy, n, budget, clock)
                              : time_cell_subprocess(plan, strategy, n, budget, clock);
            } catch (const Error &e) {
                outcome.status = e.code() == Errc::MemoryBudgetExceeded ||
                                         e.code() == Errc::QubitCountOutOfRange
                                     ? CellStatus::MemoryBudgetExceeded
                                     : CellStatus::Failed;
                outcome.error = e.what();
            }
            cell.status = outcome.status;
            cell.trial_seconds = std::move(outcome.seconds);
            cell.error = std::move(outcome.error);
            cell.finalize();
            if (sink) {
                sink(cell);
            }
            results.push_back(std::move(cell));
        }
    }
    return results;
}

MeanSeries mean_series(std::span<const TrialStats> stats, const std::string &strategy) {
    MeanSeries out;
    for (const auto &cell : stats) {
        if (cell.strategy == strategy && cell.status == CellStatus::Ok &&
            !cell.trial_seconds.empty()) {
            out[cell.n] = cell.mean_s;
        }
    }
    return out;
}

std::vector<std::string> strategy_names(std::span<const TrialStats> stats) {
    std::vector<std::string> out;
    for (const auto &cell : stats) {
        if (std::find(out.begin(), out.end(), cell.strategy) == out.end()) {
            out.push_back(cell.strategy);
        }
    }
    return out;
}

std::vector<StepRatio> step_ratios(const MeanSeries &means) {
    if (means.empty()) {
        throw Error(Errc::EmptySeries, "no mean timings to take ratios of");
    }
    std::vector<StepRatio> out;
    for (auto it = std::next(means.begin()); it != means.end(); ++it) {
        const auto prev = std::prev(it);
        if (it->first != prev->first + 1) {
            throw Error(Errc::MissingQubitCount,
                        "no timing for " + std::to_string(prev->first + 1) + " qubits");
        }
        out.push_back({it->first, it->second / prev->second});
    }
    return out;
}

std::vector<StepRatio> detect_cliff(std::span<const StepRatio> ratios, double threshold) {
    std::vector<StepRatio> out;
    std::copy_if(ratios.begin(), ratios.end(), std::back_inserter(out),
                 [&](const StepRatio &r) { return r.ratio >= threshold; });
    return out;
}

std::vector<StepRatio> speedup_table(const MeanSeries &a, const MeanSeries &b) {
    if (a.empty() || b.empty()) {
        throw Error(Errc::EmptySeries, "speedup needs timings on both sides");
    }
    for (const auto &[n, t] : a) {
        if (!b.contains(n)) {
            throw Error(Errc::MissingQubitCount,
                        "second series has no timing for " + std::to_string(n) + " qubits");
        }
    }
    for (const auto &[n, t] : b) {
        if (!a.contains(n)) {
            throw Error(Errc::MissingQubitCount,
                        "first series has no timing for " + std::to_string(n) + " qubits");
        }
    }
    std::vector<StepRatio> out;
    for (const auto &[n, t] : a) {
        out.push_back({n, t / b.at(n)});
    }
    return out;
}

void write_results_csv_header(std::ostream &out) { out << kResultsHeader << '\n'; }

void write_results_csv_rows(std::ostream &out, const TrialStats &cell) {
    const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
    for (std::size_t i = 0; i < cell.trial_seconds.size(); ++i) {
        out << cell.strategy << ',' << cell.n << ',' << (i + 1) << ',' << cell.trial_seconds[i]
            << '\n';
    }
    out.precision(old_precision);
}

void write_results_csv(std::ostream &out, std::span<const TrialStats> stats) {
    write_results_csv_header(out);
    for (const auto &cell : stats) {
        write_results_csv_rows(out, cell);
    }
}

std::vector<TrialRecord> read_results_csv(std::istream &in) {
    std::vector<TrialRecord> out;
    std::string raw;
    std::size_t line_no = 0;
    const auto fail = [&](const std::string &what) {
        throw Error(Errc::ParseError, "results line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#' || line == kResultsHeader) {
            continue;
        }
        const auto fields = split(line, ',');
        if (fields.size() != 4) {
            fail("expected 4 fields (" + std::string(kResultsHeader) + ")");
        }
        TrialRecord r;
        r.strategy = std::string(fields[0]);
        const auto n = parse_number<unsigned>(fields[1]);
        const auto idx = parse_number<unsigned>(fields[2]);
        const auto secs = parse_number<double>(fields[3]);
        if (r.strategy.empty()) {
            fail("empty strategy");
        }
        if (!n || *n < 1) {
            fail("bad qubit count '" + std::string(fields[1]) + "'");
        }
        if (!idx || *idx < 1) {
            fail("bad trial index '" + std::string(fields[2]) + "'");
        }
        if (!secs || !std::isfinite(*secs) || *secs < 0.0) {
            fail("bad seconds '" + std::string(fields[3]) + "'");
        }
        r.n = *n;
        r.trial_index = *idx;
        r.seconds = *secs;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<TrialRecord> load_results_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(Errc::Io, "cannot open results file " + path);
    }
    return read_results_csv(in);
}

std::vector<TrialStats> stats_from_records(std::span<const TrialRecord> records) {
    std::vector<std::string> order;
    std::map<std::string, std::map<unsigned, std::map<unsigned, double>>> grouped;
    for (const auto &r : records) {
        if (!grouped.contains(r.strategy)) {
            order.push_back(r.strategy);
        }
        grouped[r.strategy][r.n][r.trial_index] = r.seconds;
    }
    std::vector<TrialStats> out;
    for (const auto &name : order) {
        for (const auto &[n, trials] : grouped[name]) {
            TrialStats cell;
            cell.strategy = name;
            cell.n = n;
            for (const auto &[index, seconds] : trials) {
                cell.trial_seconds.push_back(seconds);
            }
            cell.finalize();
            out.push_back(std::move(cell));
        }
    }
    return out;
}

std::string summary_json(std::span<const TrialStats> stats, int indent) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto &cell : stats) {
        nlohmann::ordered_json row;
        row["strategy"] = cell.strategy;
        row["n"] = cell.n;
        row["mean_s"] = cell.mean_s;
        row["sigma_s"] = cell.sigma_s;
        row["cov"] = cell.cov;
        row["state_bytes"] = cell.state_bytes;
        row["status"] = cell_status_name(cell.status);
        if (!cell.error.empty()) {
            row["error"] = cell.error;
        }
        rows.push_back(std::move(row));
    }
    return rows.dump(indent);
}

} // namespace svbench
