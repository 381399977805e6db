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

// Mirrors array-framework code of the form
//   zero = idx[bit t clear]; one = zero | (1 << t)
//   a, b = psi[zero], psi[one]
//   psi[zero], psi[one] = u00*a + u01*b, u10*a + u11*b
// with every intermediate held in its own 2^(n-1)-sized array.
void apply_gate_flat(StateVector &s, const GateMatrix &g, std::span<const Qubit> targets,
                     std::span<const Qubit> controls, const DispatchOptions &dispatch) {
    const detail::GateLayout layout(s.num_qubits(), g, targets, controls);
    const Index count = layout.free_count;
    const unsigned d = g.dim;
    Amplitude *psi = s.data();

    std::vector<Index> index(count * d);
    std::vector<Amplitude> gathered(count * d);
    std::vector<Amplitude> updated(count * d);

    detail::parallel_for(count, dispatch, [&](Index begin, Index end) {
        for (Index m = begin; m < end; ++m) {
            const Index base = layout.base(m) | layout.control_mask;
            for (unsigned l = 0; l < d; ++l) {
                index[l * count + m] = base | layout.target_offset(l);
            }
        }
    });
    detail::parallel_for(count, dispatch, [&](Index begin, Index end) {
        for (unsigned l = 0; l < d; ++l) {
            for (Index m = begin; m < end; ++m) {
                gathered[l * count + m] = psi[index[l * count + m]];
            }
        }
    });
    detail::parallel_for(count, dispatch, [&](Index begin, Index end) {
        for (unsigned r = 0; r < d; ++r) {
            for (Index m = begin; m < end; ++m) {
                Amplitude acc = detail::cmul(g(r, 0), gathered[m]);
                for (unsigned l = 1; l < d; ++l) {
                    acc = detail::cadd(acc, detail::cmul(g(r, l), gathered[l * count + m]));
                }
                updated[r * count + m] = acc;
            }
        }
    });
    detail::parallel_for(count, dispatch, [&](Index begin, Index end) {
        for (unsigned r = 0; r < d; ++r) {
            for (Index m = begin; m < end; ++m) {
                psi[index[r * count + m]] = updated[r * count + m];
            }
        }
    });
}

} // namespace svbench
