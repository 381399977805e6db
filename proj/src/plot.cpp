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
#include "svbench/plot.hpp"

#include "svbench/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace svbench {
namespace {

constexpr double kWidth = 800;
constexpr double kHeight = 500;
constexpr double kLeft = 80;
constexpr double kRight = 170; // legend column
constexpr double kTop = 50;
constexpr double kBottom = 60;

constexpr std::array<const char *, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                               "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

struct Axis {
    double lo = 0.0;
    double hi = 1.0;
    bool log = false;

    [[nodiscard]] double frac(double v) const {
        if (log) {
            return (std::log10(v) - std::log10(lo)) / (std::log10(hi) - std::log10(lo));
        }
        return (v - lo) / (hi - lo);
    }
};

double nice_step(double span) {
    const double raw = span / 6.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (raw <= m * mag) {
            return m * mag;
        }
    }
    return 10.0 * mag;
}

std::vector<double> ticks(const Axis &a) {
    std::vector<double> out;
    if (a.log) {
        for (double e = std::floor(std::log10(a.lo)); e <= std::ceil(std::log10(a.hi)); ++e) {
            const double v = std::pow(10.0, e);
            if (v >= a.lo * (1 - 1e-9) && v <= a.hi * (1 + 1e-9)) {
                out.push_back(v);
            }
        }
        return out;
    }
    const double step = nice_step(a.hi - a.lo);
    for (double v = std::ceil(a.lo / step) * step; v <= a.hi + step * 1e-9; v += step) {
        out.push_back(std::abs(v) < step * 1e-9 ? 0.0 : v);
    }
    return out;
}

void check(const PlotSpec &spec) {
    if (spec.series.empty()) {
        throw Error(Errc::EmptySeries, "plot has no series");
    }
    for (const auto &s : spec.series) {
        if (s.points.empty()) {
            throw Error(Errc::EmptySeries, "series '" + s.label + "' has no points");
        }
        for (const auto &p : s.points) {
            if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
                throw Error(Errc::ParseError, "series '" + s.label + "' has a non-finite point");
            }
            if (spec.uses_log_y() && p.y <= 0.0) {
                throw Error(Errc::NonPositiveLogValue,
                            "series '" + s.label + "' has y = " + tick_label(p.y) +
                                " on a log axis");
            }
        }
    }
    if (spec.uses_log_y()) {
        for (const auto &r : spec.reference_lines) {
            if (r.y <= 0.0) {
                throw Error(Errc::NonPositiveLogValue, "reference line at y <= 0 on a log axis");
            }
        }
    }
}

} // namespace

std::string_view plot_kind_name(PlotKind k) noexcept {
    switch (k) {
    case PlotKind::TimeVsQubitsLog:
        return "time";
    case PlotKind::SpeedupVsQubits:
        return "speedup";
    case PlotKind::CliffBars:
        return "cliff";
    }
    return "time";
}

std::optional<PlotKind> parse_plot_kind(std::string_view s) {
    for (PlotKind k : {PlotKind::TimeVsQubitsLog, PlotKind::SpeedupVsQubits, PlotKind::CliffBars}) {
        if (s == plot_kind_name(k)) {
            return k;
        }
    }
    return std::nullopt;
}

std::string emit_plot(const PlotSpec &spec) {
    check(spec);
    const bool bars = spec.kind == PlotKind::CliffBars;

    Axis x;
    Axis y;
    y.log = spec.uses_log_y();
    x.lo = y.lo = std::numeric_limits<double>::infinity();
    x.hi = y.hi = -std::numeric_limits<double>::infinity();
    for (const auto &s : spec.series) {
        for (const auto &p : s.points) {
            x.lo = std::min(x.lo, p.x);
            x.hi = std::max(x.hi, p.x);
            y.lo = std::min(y.lo, p.y);
            y.hi = std::max(y.hi, p.y);
        }
    }
    for (const auto &r : spec.reference_lines) {
        y.lo = std::min(y.lo, r.y);
        y.hi = std::max(y.hi, r.y);
    }
    if (spec.band) {
        x.lo = std::min({x.lo, spec.band->x0, spec.band->x1});
        x.hi = std::max({x.hi, spec.band->x0, spec.band->x1});
    }
    if (bars) {
        x.lo -= 0.5;
        x.hi += 0.5;
        y.lo = y.log ? y.lo : std::min(0.0, y.lo);
    }
    if (x.hi - x.lo < 1e-12) {
        x.lo -= 0.5;
        x.hi += 0.5;
    }
    if (y.log) {
        y.lo = std::pow(10.0, std::floor(std::log10(y.lo)));
        y.hi = std::pow(10.0, std::ceil(std::log10(y.hi)));
        if (y.hi <= y.lo) {
            y.hi = y.lo * 10.0;
        }
    } else {
        if (y.hi - y.lo < 1e-12) {
            y.lo -= 0.5;
            y.hi += 0.5;
        }
        const double pad = 0.05 * (y.hi - y.lo);
        y.hi += pad;
        if (!bars) {
            y.lo -= pad;
        }
    }

    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    const auto px = [&](double v) { return kLeft + x.frac(v) * pw; };
    const auto py = [&](double v) { return kTop + (1.0 - y.frac(v)) * ph; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 500\" width=\"800\" "
           "height=\"500\" font-family=\"sans-serif\" font-size=\"12\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"white\"/>\n";
    if (!spec.title.empty()) {
        svg << "<text class=\"title\" x=\"" << num(kLeft + pw / 2) << "\" y=\"28\" "
            << "text-anchor=\"middle\" font-size=\"16\">" << escape(spec.title) << "</text>\n";
    }

    if (spec.band) {
        const double a = px(std::min(spec.band->x0, spec.band->x1));
        const double b = px(std::max(spec.band->x0, spec.band->x1));
        svg << "<rect class=\"band\" x=\"" << num(a) << "\" y=\"" << num(kTop) << "\" width=\""
            << num(b - a) << "\" height=\"" << num(ph)
            << "\" fill=\"#999999\" fill-opacity=\"0.2\"/>\n";
        if (!spec.band->label.empty()) {
            svg << "<text class=\"band-label\" x=\"" << num((a + b) / 2) << "\" y=\""
                << num(kTop + 14) << "\" text-anchor=\"middle\">" << escape(spec.band->label)
                << "</text>\n";
        }
    }

    svg << "<g class=\"axes\" stroke=\"black\">\n"
        << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop + ph) << "\" x2=\""
        << num(kLeft + pw) << "\" y2=\"" << num(kTop + ph) << "\"/>\n"
        << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(kLeft)
        << "\" y2=\"" << num(kTop + ph) << "\"/>\n"
        << "</g>\n";

    svg << "<g class=\"ticks\" font-size=\"11\">\n";
    std::vector<double> xticks;
    if (x.hi - x.lo <= 40) {
        for (double v = std::ceil(x.lo); v <= x.hi; v += 1.0) {
            xticks.push_back(v);
        }
    } else {
        xticks = ticks(x);
    }
    for (double v : xticks) {
        svg << "<line x1=\"" << num(px(v)) << "\" y1=\"" << num(kTop + ph) << "\" x2=\""
            << num(px(v)) << "\" y2=\"" << num(kTop + ph + 5) << "\" stroke=\"black\"/>"
            << "<text x=\"" << num(px(v)) << "\" y=\"" << num(kTop + ph + 18)
            << "\" text-anchor=\"middle\">" << tick_label(v) << "</text>\n";
    }
    for (double v : ticks(y)) {
        svg << "<line x1=\"" << num(kLeft - 5) << "\" y1=\"" << num(py(v)) << "\" x2=\""
            << num(kLeft + pw) << "\" y2=\"" << num(py(v))
            << "\" stroke=\"#dddddd\"/><text x=\"" << num(kLeft - 8) << "\" y=\""
            << num(py(v) + 4) << "\" text-anchor=\"end\">" << tick_label(v) << "</text>\n";
    }
    svg << "</g>\n";
    svg << "<text class=\"xlabel\" x=\"" << num(kLeft + pw / 2) << "\" y=\"" << num(kHeight - 15)
        << "\" text-anchor=\"middle\">" << escape(spec.x_label) << "</text>\n"
        << "<text class=\"ylabel\" x=\"20\" y=\"" << num(kTop + ph / 2)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " << num(kTop + ph / 2) << ")\">"
        << escape(spec.y_label) << "</text>\n";

    for (const auto &r : spec.reference_lines) {
        svg << "<line class=\"reference\" x1=\"" << num(kLeft) << "\" y1=\"" << num(py(r.y))
            << "\" x2=\"" << num(kLeft + pw) << "\" y2=\"" << num(py(r.y))
            << "\" stroke=\"#555555\" stroke-dasharray=\"6 4\" data-y=\"" << tick_label(r.y)
            << "\"/>\n";
        if (!r.label.empty()) {
            svg << "<text class=\"reference-label\" x=\"" << num(kLeft + pw - 4) << "\" y=\""
                << num(py(r.y) - 4) << "\" text-anchor=\"end\">" << escape(r.label)
                << "</text>\n";
        }
    }

    const std::size_t count = spec.series.size();
    const double slot = std::min(0.8 / static_cast<double>(count), 0.3) * pw / (x.hi - x.lo);
    for (std::size_t i = 0; i < count; ++i) {
        const auto &s = spec.series[i];
        const char *color = kPalette[i % kPalette.size()];
        svg << "<g class=\"series\" data-label=\"" << escape(s.label) << "\">\n";
        if (bars) {
            const double base = py(y.log ? y.lo : 0.0);
            svg << "<path fill=\"" << color << "\" d=\"";
            for (const auto &p : s.points) {
                const double left =
                    px(p.x) + (static_cast<double>(i) - static_cast<double>(count) / 2.0) * slot;
                svg << 'M' << num(left) << ' ' << num(base) << " V" << num(py(p.y)) << " H"
                    << num(left + slot) << " V" << num(base) << " Z ";
            }
            svg << "\"/>\n";
        } else {
            svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
            for (std::size_t k = 0; k < s.points.size(); ++k) {
                svg << (k ? " " : "") << num(px(s.points[k].x)) << ',' << num(py(s.points[k].y));
            }
            svg << "\"/>\n";
            for (const auto &p : s.points) {
                svg << "<circle cx=\"" << num(px(p.x)) << "\" cy=\"" << num(py(p.y))
                    << "\" r=\"3\" fill=\"" << color << "\"/>\n";
            }
        }
        svg << "</g>\n";
    }

    svg << "<g class=\"legend\">\n";
    for (std::size_t i = 0; i < count; ++i) {
        const double ly = kTop + 10 + 20 * static_cast<double>(i);
        const double lx = kWidth - kRight + 15;
        svg << "<rect x=\"" << num(lx) << "\" y=\"" << num(ly - 9) << "\" width=\"14\" "
            << "height=\"10\" fill=\"" << kPalette[i % kPalette.size()] << "\"/><text x=\""
            << num(lx + 20) << "\" y=\"" << num(ly) << "\">" << escape(spec.series[i].label)
            << "</text>\n";
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

PlotSpec time_plot(std::span<const TrialStats> stats) {
    PlotSpec spec;
    spec.kind = PlotKind::TimeVsQubitsLog;
    spec.title = "Wall-clock time vs qubit count";
    spec.y_label = "mean time (s)";
    for (const auto &name : strategy_names(stats)) {
        PlotSeries s{name, {}};
        for (const auto &[n, t] : mean_series(stats, name)) {
            s.points.push_back({static_cast<double>(n), t});
        }
        spec.series.push_back(std::move(s));
    }
    return spec;
}

PlotSpec speedup_plot(std::span<const TrialStats> stats,
                      std::span<const std::pair<std::string, std::string>> pairs) {
    PlotSpec spec;
    spec.kind = PlotKind::SpeedupVsQubits;
    spec.title = "Speedup vs qubit count";
    spec.y_label = "speedup (x)";
    for (const auto &[a, b] : pairs) {
        PlotSeries s{a + " / " + b, {}};
        for (const auto &r : speedup_table(mean_series(stats, a), mean_series(stats, b))) {
            s.points.push_back({static_cast<double>(r.n), r.ratio});
        }
        spec.series.push_back(std::move(s));
    }
    return spec;
}

PlotSpec cliff_bars_plot(std::span<const TrialStats> stats) {
    PlotSpec spec;
    spec.kind = PlotKind::CliffBars;
    spec.title = "Step ratio t(q)/t(q-1)";
    spec.y_label = "step ratio (x)";
    spec.reference_lines.push_back({2.0, "ideal 2x"});
    for (const auto &name : strategy_names(stats)) {
        const MeanSeries means = mean_series(stats, name);
        if (means.size() < 2) {
            continue;
        }
        PlotSeries s{name, {}};
        for (const auto &r : step_ratios(means)) {
            s.points.push_back({static_cast<double>(r.n), r.ratio});
        }
        spec.series.push_back(std::move(s));
    }
    return spec;
}

} // namespace svbench
