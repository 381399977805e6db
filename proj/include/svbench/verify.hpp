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
/**
 * @file
 * Cross-kernel verification: run a circuit under two strategies from the
 * zero state and report the largest amplitude disagreement.
 */
#pragma once

#include "svbench/circuit.hpp"
#include "svbench/kernels.hpp"

#include <string>
#include <vector>

namespace svbench {

/// Agreement threshold; pass iff max_abs_deviation < kVerifyTolerance.
inline constexpr double kVerifyTolerance = 1e-6;

struct VerificationReport {
    CircuitLabel label = CircuitLabel::Custom;
    unsigned n = 0;
    std::string strategy;
    std::string reference;
    double max_abs_deviation = 0.0;
    bool pass = false;
};

/// Throws DenseCapExceeded when either side is kron_dense above its cap.
[[nodiscard]] VerificationReport verify_strategy(
    const Circuit &c, const KernelStrategy &strategy,
    const KernelStrategy &reference = KernelStrategy{StrategyId::KronDense});

/// One report per strategy in kAllStrategyIds, each against reference.
/// The reference state is computed once.
[[nodiscard]] std::vector<VerificationReport> verify_all(
    const Circuit &c, const KernelStrategy &reference = KernelStrategy{StrategyId::KronDense},
    DispatchOptions dispatch = {});

} // namespace svbench
