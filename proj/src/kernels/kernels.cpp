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
#include "svbench/kernels.hpp"

#include "svbench/error.hpp"

#include <string>

namespace svbench {

std::string_view strategy_name(StrategyId id) noexcept {
    switch (id) {
    case StrategyId::KronDense:
        return "kron_dense";
    case StrategyId::KronLazy:
        return "kron_lazy";
    case StrategyId::Tensordot:
        return "tensordot";
    case StrategyId::FlatIndex:
        return "flat_index";
    case StrategyId::DirectIndex:
        return "direct_index";
    }
    return "?";
}

std::optional<StrategyId> parse_strategy_id(std::string_view name) {
    for (StrategyId id : kAllStrategyIds) {
        if (name == strategy_name(id)) {
            return id;
        }
    }
    return std::nullopt;
}

std::string KernelStrategy::name() const {
    std::string out(strategy_name(id));
    if (dispatch.mode == DispatchMode::Parallel) {
        out += ":parallel";
    }
    return out;
}

KernelStrategy KernelStrategy::parse(std::string_view text) {
    std::string_view id_part = text;
    std::string_view mode_part;
    if (const auto colon = text.find(':'); colon != std::string_view::npos) {
        id_part = text.substr(0, colon);
        mode_part = text.substr(colon + 1);
    }
    const auto id = parse_strategy_id(id_part);
    if (!id) {
        throw Error(Errc::ParseError, "unknown strategy '" + std::string(text) + "'");
    }
    KernelStrategy k{*id};
    if (mode_part == "parallel" || mode_part == "par") {
        k.dispatch.mode = DispatchMode::Parallel;
    } else if (!mode_part.empty() && mode_part != "sequential" && mode_part != "seq") {
        throw Error(Errc::ParseError, "unknown dispatch mode '" + std::string(mode_part) + "'");
    }
    return k;
}

PairIndexSet::PairIndexSet(unsigned n, Qubit t) : n_(n), t_(t) {
    if (n < 1 || n >= 64) {
        throw Error(Errc::QubitCountOutOfRange, "pair set on " + std::to_string(n) + " qubits");
    }
    if (t >= n) {
        throw Error(Errc::QubitIndexOutOfRange,
                    "target " + std::to_string(t) + " on " + std::to_string(n) + " qubits");
    }
}

void apply_gate(StateVector &s, const GateMatrix &g, std::span<const Qubit> targets,
                std::span<const Qubit> controls, const KernelStrategy &strategy) {
    switch (strategy.id) {
    case StrategyId::KronDense:
        apply_gate_kron_dense(s, g, targets, controls, strategy.dense_cap, strategy.dispatch);
        return;
    case StrategyId::KronLazy:
        apply_gate_kron_lazy(s, g, targets, controls, strategy.dispatch);
        return;
    case StrategyId::Tensordot:
        apply_gate_tensordot(s, g, targets, controls, strategy.dispatch);
        return;
    case StrategyId::FlatIndex:
        apply_gate_flat(s, g, targets, controls, strategy.dispatch);
        return;
    case StrategyId::DirectIndex:
        apply_gate_direct(s, g, targets, controls, strategy.dispatch);
        return;
    }
}

void apply_op(StateVector &s, const GateOp &op, const KernelStrategy &strategy) {
    const LoweredGate lowered = lower(op);
    apply_gate(s, lowered.matrix, lowered.targets, lowered.controls, strategy);
}

void run_circuit(StateVector &s, std::span<const GateOp> ops, const KernelStrategy &strategy,
                 const GateObserver &observer) {
    if (strategy.id == StrategyId::KronDense && s.num_qubits() > strategy.dense_cap &&
        !ops.empty()) {
        throw Error(Errc::DenseCapExceeded,
                    std::to_string(s.num_qubits()) + " qubits exceeds the dense cap of " +
                        std::to_string(strategy.dense_cap));
    }
    for (std::size_t i = 0; i < ops.size(); ++i) {
        apply_op(s, ops[i], strategy);
        if (observer) {
            observer(i, s);
        }
    }
}

} // namespace svbench
