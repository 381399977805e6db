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

#include <utility>

namespace svbench {
namespace {

using detail::cadd;
using detail::cmul;
using detail::GateLayout;

constexpr Amplitude kOne{1, 0};
constexpr Amplitude kZero{};

bool is_pauli_x(const GateMatrix &g) {
    return g(0, 0) == kZero && g(1, 1) == kZero && g(0, 1) == kOne && g(1, 0) == kOne;
}

bool is_diagonal(const GateMatrix &g) { return g(0, 1) == kZero && g(1, 0) == kZero; }

bool is_swap(const GateMatrix &g) {
    for (unsigned r = 0; r < 4; ++r) {
        for (unsigned c = 0; c < 4; ++c) {
            const bool one = (r == 0 && c == 0) || (r == 3 && c == 3) || (r == 1 && c == 2) ||
                             (r == 2 && c == 1);
            if (g(r, c) != (one ? kOne : kZero)) {
                return false;
            }
        }
    }
    return true;
}

// One target: pairs (a, b = a | mask) with every control bit forced to 1.
// Permutations and phases touch only what they must, so the DRAM traffic
// per pair is what the cost model counts.
void apply_one_target(Amplitude *psi, const GateMatrix &g, const GateLayout &layout,
                      const DispatchOptions &dispatch) {
    const Index mask = layout.target_mask[0];
    const Index cmask = layout.control_mask;

    if (is_pauli_x(g)) {
        detail::parallel_for(layout.free_count, dispatch, [&](Index begin, Index end) {
            for (Index i = begin; i < end; ++i) {
                const Index a = layout.base(i) | cmask;
                std::swap(psi[a], psi[a | mask]);
            }
        });
        return;
    }
    if (is_diagonal(g)) {
        const Amplitude d0 = g(0, 0);
        const Amplitude d1 = g(1, 1);
        if (d0 == kOne) {
            detail::parallel_for(layout.free_count, dispatch, [&](Index begin, Index end) {
                for (Index i = begin; i < end; ++i) {
                    const Index b = layout.base(i) | cmask | mask;
                    psi[b] = cmul(d1, psi[b]);
                }
            });
            return;
        }
        detail::parallel_for(layout.free_count, dispatch, [&](Index begin, Index end) {
            for (Index i = begin; i < end; ++i) {
                const Index a = layout.base(i) | cmask;
                psi[a] = cmul(d0, psi[a]);
                psi[a | mask] = cmul(d1, psi[a | mask]);
            }
        });
        return;
    }
    const Amplitude u00 = g(0, 0), u01 = g(0, 1), u10 = g(1, 0), u11 = g(1, 1);
    detail::parallel_for(layout.free_count, dispatch, [&](Index begin, Index end) {
        for (Index i = begin; i < end; ++i) {
            const Index a = layout.base(i) | cmask;
            const Index b = a | mask;
            const Amplitude v0 = psi[a];
            const Amplitude v1 = psi[b];
            psi[a] = cadd(cmul(u00, v0), cmul(u01, v1));
            psi[b] = cadd(cmul(u10, v0), cmul(u11, v1));
        }
    });
}

void apply_two_targets(Amplitude *psi, const GateMatrix &g, const GateLayout &layout,
                       const DispatchOptions &dispatch) {
    const Index cmask = layout.control_mask;
    const Index m0 = layout.target_mask[0];
    const Index m1 = layout.target_mask[1];

    if (is_swap(g)) {
        detail::parallel_for(layout.free_count, dispatch, [&](Index begin, Index end) {
            for (Index i = begin; i < end; ++i) {
                const Index base = layout.base(i) | cmask;
                std::swap(psi[base | m1], psi[base | m0]);
            }
        });
        return;
    }
    detail::parallel_for(layout.free_count, dispatch, [&](Index begin, Index end) {
        for (Index i = begin; i < end; ++i) {
            const Index base = layout.base(i) | cmask;
            const std::array<Index, 4> idx{base, base | m1, base | m0, base | m0 | m1};
            const std::array<Amplitude, 4> v{psi[idx[0]], psi[idx[1]], psi[idx[2]],
                                             psi[idx[3]]};
            for (unsigned r = 0; r < 4; ++r) {
                Amplitude acc = cmul(g(r, 0), v[0]);
                for (unsigned c = 1; c < 4; ++c) {
                    acc = cadd(acc, cmul(g(r, c), v[c]));
                }
                psi[idx[r]] = acc;
            }
        }
    });
}

} // namespace

void apply_gate_direct(StateVector &s, const GateMatrix &g, std::span<const Qubit> targets,
                       std::span<const Qubit> controls, const DispatchOptions &dispatch) {
    const GateLayout layout(s.num_qubits(), g, targets, controls);
    if (layout.num_targets == 1) {
        apply_one_target(s.data(), g, layout, dispatch);
    } else {
        apply_two_targets(s.data(), g, layout, dispatch);
    }
}

} // namespace svbench
