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
#include "svbench/gates.hpp"

#include "svbench/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

namespace svbench {
namespace {

using C = std::complex<double>;

GateMatrix make2(GateKind kind, C a, C b, C c, C d) {
    GateMatrix m{kind, 2};
    m.entries[0] = Amplitude(a);
    m.entries[1] = Amplitude(b);
    m.entries[2] = Amplitude(c);
    m.entries[3] = Amplitude(d);
    return m;
}

// Embeds a 2x2 core as the |1x> block of a 4x4 controlled matrix.
GateMatrix controlled(GateKind kind, const GateMatrix &core) {
    GateMatrix m{kind, 4};
    m.at(0, 0) = Amplitude{1, 0};
    m.at(1, 1) = Amplitude{1, 0};
    m.at(2, 2) = core(0, 0);
    m.at(2, 3) = core(0, 1);
    m.at(3, 2) = core(1, 0);
    m.at(3, 3) = core(1, 1);
    return m;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return out;
}

} // namespace

std::string_view gate_name(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::H:
        return "H";
    case GateKind::X:
        return "X";
    case GateKind::Y:
        return "Y";
    case GateKind::Z:
        return "Z";
    case GateKind::S:
        return "S";
    case GateKind::T:
        return "T";
    case GateKind::P:
        return "P";
    case GateKind::Rx:
        return "RX";
    case GateKind::Ry:
        return "RY";
    case GateKind::Rz:
        return "RZ";
    case GateKind::General2x2:
        return "U";
    case GateKind::CNOT:
        return "CNOT";
    case GateKind::CZ:
        return "CZ";
    case GateKind::CP:
        return "CP";
    case GateKind::SWAP:
        return "SWAP";
    }
    return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) {
    const std::string key = lower(name);
    for (GateKind k : kAllGateKinds) {
        if (key == lower(gate_name(k))) {
            return k;
        }
    }
    static const std::pair<const char *, GateKind> aliases[] = {
        {"hadamard", GateKind::H},  {"pauli-x", GateKind::X},
        {"pauli-y", GateKind::Y},   {"pauli-z", GateKind::Z},
        {"phase", GateKind::P},     {"cx", GateKind::CNOT},
        {"cphase", GateKind::CP},   {"ctrl-phase", GateKind::CP},
        {"general", GateKind::General2x2},
        {"general2x2", GateKind::General2x2},
    };
    for (const auto &[alias, kind] : aliases) {
        if (key == alias) {
            return kind;
        }
    }
    return std::nullopt;
}

bool is_parameterized(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::P:
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rz:
    case GateKind::CP:
        return true;
    default:
        return false;
    }
}

unsigned gate_arity(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::CP:
    case GateKind::SWAP:
        return 2;
    default:
        return 1;
    }
}

bool is_controlled(GateKind kind) noexcept {
    return kind == GateKind::CNOT || kind == GateKind::CZ || kind == GateKind::CP;
}

GateMatrix gate_matrix(GateKind kind, std::optional<double> theta) {
    if (kind == GateKind::General2x2) {
        throw Error(Errc::MissingParameter, "General2x2 requires explicit entries");
    }
    if (is_parameterized(kind) && !theta) {
        throw Error(Errc::MissingParameter,
                    std::string(gate_name(kind)) + " requires an angle");
    }
    if (!is_parameterized(kind) && theta) {
        throw Error(Errc::MissingParameter,
                    std::string(gate_name(kind)) + " takes no angle");
    }
    const double th = theta.value_or(0.0);
    const double r = 1.0 / std::numbers::sqrt2;
    const C i{0.0, 1.0};
    switch (kind) {
    case GateKind::H:
        return make2(kind, r, r, r, -r);
    case GateKind::X:
        return make2(kind, 0, 1, 1, 0);
    case GateKind::Y:
        return make2(kind, 0, -i, i, 0);
    case GateKind::Z:
        return make2(kind, 1, 0, 0, -1);
    case GateKind::S:
        return make2(kind, 1, 0, 0, i);
    case GateKind::T:
        return make2(kind, 1, 0, 0, std::polar(1.0, std::numbers::pi / 4));
    case GateKind::P:
        return make2(kind, 1, 0, 0, std::polar(1.0, th));
    case GateKind::Rx:
        return make2(kind, std::cos(th / 2), -i * std::sin(th / 2),
                     -i * std::sin(th / 2), std::cos(th / 2));
    case GateKind::Ry:
        return make2(kind, std::cos(th / 2), -std::sin(th / 2), std::sin(th / 2),
                     std::cos(th / 2));
    case GateKind::Rz:
        return make2(kind, std::polar(1.0, -th / 2), 0, 0, std::polar(1.0, th / 2));
    case GateKind::CNOT:
        return controlled(kind, gate_matrix(GateKind::X));
    case GateKind::CZ:
        return controlled(kind, gate_matrix(GateKind::Z));
    case GateKind::CP:
        return controlled(kind, gate_matrix(GateKind::P, th));
    case GateKind::SWAP: {
        GateMatrix m{kind, 4};
        m.at(0, 0) = Amplitude{1, 0};
        m.at(1, 2) = Amplitude{1, 0};
        m.at(2, 1) = Amplitude{1, 0};
        m.at(3, 3) = Amplitude{1, 0};
        return m;
    }
    case GateKind::General2x2:
        break;
    }
    throw Error(Errc::UnknownGateKind, "unhandled gate kind");
}

GateMatrix general_gate(const Matrix2 &entries) {
    GateMatrix m{GateKind::General2x2, 2};
    std::copy(entries.begin(), entries.end(), m.entries.begin());
    if (const double err = unitarity_error(m); !(err <= 1e-6)) {
        throw Error(Errc::NonUnitaryMatrix,
                    "2x2 matrix deviates from unitary by " + std::to_string(err));
    }
    return m;
}

double unitarity_error(const GateMatrix &m) noexcept {
    double worst = 0.0;
    for (unsigned r = 0; r < m.dim; ++r) {
        for (unsigned c = 0; c < m.dim; ++c) {
            C acc{};
            for (unsigned k = 0; k < m.dim; ++k) {
                acc += C(m(r, k)) * std::conj(C(m(c, k)));
            }
            const C expected = r == c ? C{1.0, 0.0} : C{};
            worst = std::max(worst, std::abs(acc - expected));
        }
    }
    return worst;
}

} // namespace svbench
