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
#include "kernel_common.hpp"

#include "svbench/error.hpp"

#include <string>

namespace svbench::detail {
namespace {

Matrix2 elementary(unsigned row, unsigned col) {
    Matrix2 e{};
    e[row * 2 + col] = Amplitude{1, 0};
    return e;
}

} // namespace

GateLayout::GateLayout(unsigned n, const GateMatrix &g, std::span<const Qubit> targets,
                       std::span<const Qubit> controls) {
    const unsigned expected = g.dim == 4 ? 2 : 1;
    if (targets.size() != expected) {
        throw Error(Errc::QubitIndexOutOfRange,
                    std::string(gate_name(g.kind)) + " expects " + std::to_string(expected) +
                        " target qubit(s), got " + std::to_string(targets.size()));
    }
    num_targets = expected;
    sorted.assign(targets.begin(), targets.end());
    sorted.insert(sorted.end(), controls.begin(), controls.end());
    for (Qubit q : sorted) {
        if (q >= n) {
            throw Error(Errc::QubitIndexOutOfRange,
                        "qubit " + std::to_string(q) + " on a " + std::to_string(n) +
                            "-qubit state");
        }
    }
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(Errc::DuplicateQubit, "gate qubits must be distinct");
    }
    for (unsigned k = 0; k < num_targets; ++k) {
        target_mask[k] = Index{1} << targets[k];
    }
    for (Qubit c : controls) {
        control_mask |= Index{1} << c;
    }
    free_count = dimension(n) >> sorted.size();
}

ExpandedGate expand_controls(const GateMatrix &g, std::span<const Qubit> targets,
                             std::span<const Qubit> controls) {
    ExpandedGate e;
    e.qubits.assign(controls.begin(), controls.end());
    e.qubits.insert(e.qubits.end(), targets.begin(), targets.end());
    e.dim = 1U << e.qubits.size();
    e.m.assign(static_cast<std::size_t>(e.dim) * e.dim, Amplitude{});
    for (unsigned i = 0; i < e.dim; ++i) {
        e.m[i * e.dim + i] = Amplitude{1, 0};
    }
    const unsigned top = e.dim - g.dim; // all control bits set
    for (unsigned r = 0; r < g.dim; ++r) {
        for (unsigned c = 0; c < g.dim; ++c) {
            e.m[(top + r) * e.dim + top + c] = g(r, c);
        }
    }
    return e;
}

std::vector<KronTerm> kronecker_terms(const GateMatrix &g, std::span<const Qubit> targets,
                                      std::span<const Qubit> controls) {
    std::vector<KronTerm> terms;
    std::vector<KronFactor> prefix;
    GateMatrix body = g;
    if (!controls.empty()) {
        terms.push_back(KronTerm{});
        for (Qubit c : controls) {
            prefix.push_back({c, elementary(1, 1)});
        }
        for (unsigned i = 0; i < g.dim; ++i) {
            body.at(i, i) -= Amplitude{1, 0};
        }
    }
    if (g.dim == 2) {
        KronTerm t{{1, 0}, prefix};
        t.factors.push_back({targets[0], {body(0, 0), body(0, 1), body(1, 0), body(1, 1)}});
        terms.push_back(std::move(t));
        return terms;
    }
    for (unsigned r = 0; r < 4; ++r) {
        for (unsigned c = 0; c < 4; ++c) {
            if (body(r, c) == Amplitude{}) {
                continue;
            }
            KronTerm t{body(r, c), prefix};
            t.factors.push_back({targets[0], elementary(r >> 1, c >> 1)});
            t.factors.push_back({targets[1], elementary(r & 1, c & 1)});
            terms.push_back(std::move(t));
        }
    }
    return terms;
}

} // namespace svbench::detail
