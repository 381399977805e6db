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

namespace svbench {

// The state is a row-major tensor of shape [2]*n whose axis k is qubit
// n-1-k. Dropping the gate axes keeps the remaining axes in order, which on
// the flat array is "remove the gate bits", so the rest index r maps back
// through GateLayout::base.
//
//   front = moveaxis(psi, gate_axes, [0..k))      -> shape [D, rest]
//   out   = tensordot(M, front, axes=(1, 0))      -> shape [D, rest]
//   psi   = moveaxis(out, [0..k), gate_axes)
void apply_gate_tensordot(StateVector &s, const GateMatrix &g,
                          std::span<const Qubit> targets, std::span<const Qubit> controls,
                          const DispatchOptions &dispatch) {
    const detail::GateLayout layout(s.num_qubits(), g, targets, controls);
    const detail::ExpandedGate gate = detail::expand_controls(g, targets, controls);
    const unsigned d = gate.dim;
    const auto width = static_cast<unsigned>(gate.qubits.size());
    const Index rest = layout.free_count;
    Amplitude *psi = s.data();

    std::vector<Index> offset(d, 0);
    for (unsigned l = 0; l < d; ++l) {
        for (unsigned j = 0; j < width; ++j) {
            if ((l >> (width - 1 - j)) & 1U) {
                offset[l] |= Index{1} << gate.qubits[j];
            }
        }
    }

    std::vector<Amplitude> front(rest * d);
    detail::parallel_for(rest, dispatch, [&](Index begin, Index end) {
        for (Index r = begin; r < end; ++r) {
            const Index base = layout.base(r);
            for (unsigned l = 0; l < d; ++l) {
                front[l * rest + r] = psi[base | offset[l]];
            }
        }
    });

    std::vector<Amplitude> out(rest * d);
    detail::parallel_for(rest, dispatch, [&](Index begin, Index end) {
        for (unsigned i = 0; i < d; ++i) {
            Amplitude *row = out.data() + i * rest;
            const Amplitude m0 = gate.m[i * d];
            for (Index r = begin; r < end; ++r) {
                row[r] = detail::cmul(m0, front[r]);
            }
            for (unsigned l = 1; l < d; ++l) {
                const Amplitude ml = gate.m[i * d + l];
                const Amplitude *src = front.data() + l * rest;
                for (Index r = begin; r < end; ++r) {
                    row[r] = detail::cadd(row[r], detail::cmul(ml, src[r]));
                }
            }
        }
    });

    detail::parallel_for(rest, dispatch, [&](Index begin, Index end) {
        for (Index r = begin; r < end; ++r) {
            const Index base = layout.base(r);
            for (unsigned l = 0; l < d; ++l) {
                psi[base | offset[l]] = out[l * rest + r];
            }
        }
    });
}

} // namespace svbench
