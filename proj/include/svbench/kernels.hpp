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
 * The five gate-application strategies.
 *
 * Every strategy has the same observable semantics: a 2x2 (one target) or
 * 4x4 (two targets) matrix applied to the amplitudes whose control bits are
 * all 1. They differ only in memory behaviour:
 *
 *  - kron_dense   materializes I (x) ... (x) G (x) ... (x) I, O(4^n) memory.
 *  - kron_lazy    applies the same Kronecker operator block-wise, O(2^n).
 *  - tensordot    views the state as a rank-n [2,...,2] tensor, transposes
 *                 the gate axes to the front, contracts, transposes back.
 *  - flat_index   gathers explicit index vectors, computes, scatters back.
 *  - direct_index walks amplitude pairs b = a ^ (1 << t) in place.
 */
#pragma once

#include "svbench/circuit.hpp"
#include "svbench/state_vector.hpp"

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

namespace svbench {

enum class StrategyId { KronDense, KronLazy, Tensordot, FlatIndex, DirectIndex };

inline constexpr std::array kAllStrategyIds = {
    StrategyId::KronDense, StrategyId::KronLazy, StrategyId::Tensordot,
    StrategyId::FlatIndex, StrategyId::DirectIndex,
};

[[nodiscard]] std::string_view strategy_name(StrategyId id) noexcept;
[[nodiscard]] std::optional<StrategyId> parse_strategy_id(std::string_view name);

enum class DispatchMode { Sequential, Parallel };

/**
 * Parallel dispatch splits the enumeration range into contiguous chunks,
 * one per worker. Ranges shorter than grain run on the calling thread.
 */
struct DispatchOptions {
    DispatchMode mode = DispatchMode::Sequential;
    unsigned threads = 0; ///< 0 = std::thread::hardware_concurrency()
    Index grain = Index{1} << 14;

    [[nodiscard]] static DispatchOptions parallel(unsigned threads = 0,
                                                  Index grain = Index{1} << 14) {
        return {DispatchMode::Parallel, threads, grain};
    }
};

inline constexpr unsigned kDefaultDenseCap = 12;

struct KernelStrategy {
    StrategyId id = StrategyId::DirectIndex;
    DispatchOptions dispatch{};
    unsigned dense_cap = kDefaultDenseCap;

    /// "direct_index" for sequential, "direct_index:parallel" otherwise.
    [[nodiscard]] std::string name() const;
    /// Accepts "<id>", "<id>:sequential" and "<id>:parallel".
    [[nodiscard]] static KernelStrategy parse(std::string_view text);
};

/**
 * The pairs (a, a ^ (1 << t)) over all a with bit t clear.
 *
 * pair(i) inserts a zero at bit t of i; rank(a) removes it again, so the
 * two are inverse bijections between [0, 2^(n-1)) and the zero set.
 */
class PairIndexSet {
  public:
    PairIndexSet(unsigned n, Qubit t);

    [[nodiscard]] Index size() const noexcept { return dimension(n_ - 1); }
    [[nodiscard]] Index stride() const noexcept { return Index{1} << t_; }
    [[nodiscard]] std::pair<Index, Index> pair(Index i) const noexcept {
        const Index low = i & (stride() - 1);
        const Index a = ((i - low) << 1) | low;
        return {a, a ^ stride()};
    }
    [[nodiscard]] Index rank(Index a) const noexcept {
        const Index low = a & (stride() - 1);
        return ((a >> (t_ + 1)) << t_) | low;
    }

  private:
    unsigned n_;
    Qubit t_;
};

/// In-place scatter-write over amplitude pairs; allocates nothing
/// proportional to 2^n. Only indices with every control bit set are read.
void apply_gate_direct(StateVector &s, const GateMatrix &g, std::span<const Qubit> targets,
                       std::span<const Qubit> controls = {},
                       const DispatchOptions &dispatch = {});

/// Gather/compute/scatter through O(2^n) index and value scratch vectors.
void apply_gate_flat(StateVector &s, const GateMatrix &g, std::span<const Qubit> targets,
                     std::span<const Qubit> controls = {},
                     const DispatchOptions &dispatch = {});

/// Rank-n tensor contraction along the gate axes (axis k is qubit n-1-k).
/// Controls are folded into an enlarged gate matrix, as a tensordot
/// backend would do.
void apply_gate_tensordot(StateVector &s, const GateMatrix &g,
                          std::span<const Qubit> targets,
                          std::span<const Qubit> controls = {},
                          const DispatchOptions &dispatch = {});

/// Explicit 2^n x 2^n operator; throws DenseCapExceeded when n > dense_cap.
void apply_gate_kron_dense(StateVector &s, const GateMatrix &g,
                           std::span<const Qubit> targets,
                           std::span<const Qubit> controls = {},
                           unsigned dense_cap = kDefaultDenseCap,
                           const DispatchOptions &dispatch = {});

/// Matrix-free Kronecker operator applied block-wise.
void apply_gate_kron_lazy(StateVector &s, const GateMatrix &g,
                          std::span<const Qubit> targets,
                          std::span<const Qubit> controls = {},
                          const DispatchOptions &dispatch = {});

void apply_gate(StateVector &s, const GateMatrix &g, std::span<const Qubit> targets,
                std::span<const Qubit> controls, const KernelStrategy &strategy);

void apply_op(StateVector &s, const GateOp &op, const KernelStrategy &strategy);

/// Called after each gate with its position in the circuit.
using GateObserver = std::function<void(std::size_t, const StateVector &)>;

/// Applies ops in order; the first failing gate aborts the run.
void run_circuit(StateVector &s, std::span<const GateOp> ops,
                 const KernelStrategy &strategy, const GateObserver &observer = {});

inline void run_circuit(StateVector &s, const Circuit &c, const KernelStrategy &strategy,
                        const GateObserver &observer = {}) {
    run_circuit(s, c.ops, strategy, observer);
}

/// Bytes of the explicit operator kron_dense builds for n qubits.
[[nodiscard]] constexpr std::uint64_t dense_operator_bytes(unsigned n) noexcept {
    return dimension(n) * dimension(n) * sizeof(Amplitude);
}

} // namespace svbench
