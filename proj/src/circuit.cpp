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
#include "svbench/circuit.hpp"

#include "svbench/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>

namespace svbench {

GateOp GateOp::single(GateKind kind, Qubit target, std::optional<double> theta) {
    GateOp op;
    op.kind = kind;
    op.target = target;
    op.theta = theta;
    return op;
}

GateOp GateOp::controlled(GateKind kind, Qubit control, Qubit target,
                          std::optional<double> theta) {
    GateOp op;
    op.kind = kind;
    op.target = target;
    op.control = control;
    op.theta = theta;
    return op;
}

GateOp GateOp::swap(Qubit a, Qubit b) {
    GateOp op;
    op.kind = GateKind::SWAP;
    op.target = a;
    op.second = b;
    return op;
}

GateOp GateOp::general(Qubit target, const Matrix2 &matrix) {
    GateOp op;
    op.kind = GateKind::General2x2;
    op.target = target;
    op.matrix = matrix;
    return op;
}

std::vector<Qubit> GateOp::qubits() const {
    std::vector<Qubit> qs;
    if (control) {
        qs.push_back(*control);
    }
    qs.push_back(target);
    if (second) {
        qs.push_back(*second);
    }
    return qs;
}

LoweredGate lower(const GateOp &op) {
    switch (op.kind) {
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::CP: {
        if (!op.control) {
            throw Error(Errc::MissingParameter,
                        std::string(gate_name(op.kind)) + " needs a control qubit");
        }
        const GateKind core = op.kind == GateKind::CNOT ? GateKind::X
                              : op.kind == GateKind::CZ ? GateKind::Z
                                                        : GateKind::P;
        return {gate_matrix(core, op.theta), {op.target}, {*op.control}};
    }
    case GateKind::SWAP:
        if (!op.second) {
            throw Error(Errc::MissingParameter, "SWAP needs a second qubit");
        }
        return {gate_matrix(GateKind::SWAP), {op.target, *op.second}, {}};
    case GateKind::General2x2:
        if (!op.matrix) {
            throw Error(Errc::MissingParameter, "General2x2 needs matrix entries");
        }
        return {general_gate(*op.matrix), {op.target}, {}};
    default:
        return {gate_matrix(op.kind, op.theta), {op.target}, {}};
    }
}

std::string_view circuit_label_name(CircuitLabel label) noexcept {
    switch (label) {
    case CircuitLabel::GHZ:
        return "ghz";
    case CircuitLabel::QFT:
        return "qft";
    case CircuitLabel::Custom:
        return "custom";
    }
    return "custom";
}

std::optional<CircuitLabel> parse_circuit_label(std::string_view s) {
    std::string key(s);
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (key == "ghz") {
        return CircuitLabel::GHZ;
    }
    if (key == "qft") {
        return CircuitLabel::QFT;
    }
    if (key == "custom") {
        return CircuitLabel::Custom;
    }
    return std::nullopt;
}

void Circuit::validate() const {
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const auto qs = ops[i].qubits();
        for (std::size_t a = 0; a < qs.size(); ++a) {
            if (qs[a] >= n) {
                throw Error(Errc::QubitIndexOutOfRange,
                            "gate " + std::to_string(i) + " uses qubit " +
                                std::to_string(qs[a]) + " on " + std::to_string(n) +
                                " qubits");
            }
            for (std::size_t b = a + 1; b < qs.size(); ++b) {
                if (qs[a] == qs[b]) {
                    throw Error(Errc::DuplicateQubit,
                                "gate " + std::to_string(i) + " repeats qubit " +
                                    std::to_string(qs[a]));
                }
            }
        }
        if (is_parameterized(ops[i].kind) && !ops[i].theta) {
            throw Error(Errc::MissingParameter,
                        "gate " + std::to_string(i) + " lacks an angle");
        }
        if (ops[i].kind == GateKind::General2x2) {
            if (!ops[i].matrix) {
                throw Error(Errc::MissingParameter,
                            "gate " + std::to_string(i) + " lacks matrix entries");
            }
            (void)general_gate(*ops[i].matrix);
        }
    }
}

Circuit build_ghz(unsigned n) {
    if (n < 1) {
        throw Error(Errc::QubitCountOutOfRange, "GHZ needs at least one qubit");
    }
    Circuit c{n, {}, CircuitLabel::GHZ};
    c.ops.reserve(n);
    c.ops.push_back(GateOp::single(GateKind::H, 0));
    for (Qubit k = 0; k + 1 < n; ++k) {
        c.ops.push_back(GateOp::controlled(GateKind::CNOT, k, k + 1));
    }
    return c;
}

Circuit build_qft(unsigned n) {
    if (n < 1) {
        throw Error(Errc::QubitCountOutOfRange, "QFT needs at least one qubit");
    }
    Circuit c{n, {}, CircuitLabel::QFT};
    c.ops.reserve(qft_gate_count(n));
    for (Qubit k = 0; k < n; ++k) {
        c.ops.push_back(GateOp::single(GateKind::H, k));
        for (Qubit j = k + 1; j < n; ++j) {
            const double angle = std::numbers::pi / std::ldexp(1.0, static_cast<int>(j - k));
            c.ops.push_back(GateOp::controlled(GateKind::CP, j, k, angle));
        }
    }
    for (Qubit k = 0; k < n / 2; ++k) {
        c.ops.push_back(GateOp::swap(k, n - 1 - k));
    }
    return c;
}

Circuit build_circuit(CircuitLabel label, unsigned n) {
    switch (label) {
    case CircuitLabel::GHZ:
        return build_ghz(n);
    case CircuitLabel::QFT:
        return build_qft(n);
    case CircuitLabel::Custom:
        break;
    }
    throw Error(Errc::InvalidPlan, "custom circuits cannot be generated");
}

GateCensus gate_count(const Circuit &c) {
    GateCensus census;
    census.total = c.ops.size();
    for (const auto &op : c.ops) {
        ++census.by_kind[op.kind];
    }
    return census;
}

void write_circuit(std::ostream &out, const Circuit &c) {
    const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
    out << "qubits " << c.n << '\n';
    for (const auto &op : c.ops) {
        out << gate_name(op.kind) << ' ' << op.target;
        if (op.control) {
            out << ' ' << *op.control;
        }
        if (op.second) {
            out << ' ' << *op.second;
        }
        if (op.theta) {
            out << ' ' << *op.theta;
        }
        if (op.matrix) {
            for (const auto &a : *op.matrix) {
                out << ' ' << a.real() << ' ' << a.imag();
            }
        }
        out << '\n';
    }
    out.precision(old_precision);
}

std::string format_circuit(const Circuit &c) {
    std::ostringstream os;
    write_circuit(os, c);
    return os.str();
}

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string &what) {
    throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

Qubit read_qubit(std::istringstream &is, std::size_t line_no, const char *what) {
    long long v = -1;
    if (!(is >> v) || v < 0) {
        parse_fail(line_no, std::string("expected ") + what + " qubit index");
    }
    return static_cast<Qubit>(v);
}

double read_real(std::istringstream &is, std::size_t line_no, const char *what) {
    double v = 0.0;
    if (!(is >> v)) {
        parse_fail(line_no, std::string("expected ") + what);
    }
    return v;
}

} // namespace

Circuit read_circuit(std::istream &in) {
    Circuit c;
    std::optional<unsigned> declared;
    unsigned highest = 0;
    bool any = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream is(line);
        std::string word;
        if (!(is >> word)) {
            continue;
        }
        if (word == "qubits") {
            long long n = 0;
            if (!(is >> n) || n < 1) {
                parse_fail(line_no, "bad qubit count");
            }
            declared = static_cast<unsigned>(n);
            continue;
        }
        const auto kind = parse_gate_kind(word);
        if (!kind) {
            throw Error(Errc::UnknownGateKind,
                        "line " + std::to_string(line_no) + ": '" + word + "'");
        }
        GateOp op;
        op.kind = *kind;
        op.target = read_qubit(is, line_no, "target");
        if (is_controlled(*kind)) {
            op.control = read_qubit(is, line_no, "control");
        } else if (*kind == GateKind::SWAP) {
            op.second = read_qubit(is, line_no, "second");
        }
        if (is_parameterized(*kind)) {
            op.theta = read_real(is, line_no, "angle in radians");
        }
        if (*kind == GateKind::General2x2) {
            Matrix2 m;
            for (auto &a : m) {
                const double re = read_real(is, line_no, "matrix entry");
                const double im = read_real(is, line_no, "matrix entry");
                a = Amplitude(static_cast<Real>(re), static_cast<Real>(im));
            }
            op.matrix = m;
        }
        if (is >> word) {
            parse_fail(line_no, "unexpected trailing '" + word + "'");
        }
        for (Qubit q : op.qubits()) {
            highest = std::max(highest, q);
        }
        any = true;
        c.ops.push_back(op);
    }
    c.n = declared ? *declared : (any ? highest + 1 : 1);
    c.validate();
    return c;
}

Circuit parse_circuit(std::string_view text) {
    std::istringstream is{std::string(text)};
    return read_circuit(is);
}

Circuit load_circuit_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(Errc::Io, "cannot open circuit file " + path);
    }
    return read_circuit(in);
}

} // namespace svbench
