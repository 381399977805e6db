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
#include "svbench/verify.hpp"

namespace svbench {
namespace {

StateVector simulate(const Circuit &c, const KernelStrategy &k) {
    auto s = init_zero_state(c.n);
    run_circuit(s, c, k);
    return s;
}

VerificationReport compare(const Circuit &c, const KernelStrategy &k, const StateVector &got,
                           const KernelStrategy &ref, const StateVector &want) {
    VerificationReport r;
    r.label = c.label;
    r.n = c.n;
    r.strategy = k.name();
    r.reference = ref.name();
    r.max_abs_deviation = max_abs_deviation(got.amplitudes(), want.amplitudes());
    r.pass = r.max_abs_deviation < kVerifyTolerance;
    return r;
}

} // namespace

VerificationReport verify_strategy(const Circuit &c, const KernelStrategy &strategy,
                                   const KernelStrategy &reference) {
    const StateVector want = simulate(c, reference);
    const StateVector got = simulate(c, strategy);
    return compare(c, strategy, got, reference, want);
}

std::vector<VerificationReport> verify_all(const Circuit &c, const KernelStrategy &reference,
                                           DispatchOptions dispatch) {
    const StateVector want = simulate(c, reference);
    std::vector<VerificationReport> out;
    for (StrategyId id : kAllStrategyIds) {
        const KernelStrategy k{id, dispatch, reference.dense_cap};
        out.push_back(compare(c, k, simulate(c, k), reference, want));
    }
    return out;
}

} // namespace svbench
