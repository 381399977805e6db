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

namespace svbench {
namespace {

using detail::cadd;
using detail::cmul;
using detail::KronTerm;

constexpr Matrix2 kIdentity2{Amplitude{1, 0}, Amplitude{}, Amplitude{}, Amplitude{1, 0}};

// y = (I_left (x) F (x) I_right) x, where right = 2^q. The flat array is
// viewed as [left][2][right] blocks; src and dst may alias.
void mode_product(const Amplitude *src, Amplitude *dst, unsigned n, Qubit q, const Matrix2 &f,
                  const DispatchOptions &dispatch) {
    const Index right = Index{1} << q;
    const Index half = dimension(n - 1);
    detail::parallel_for(half, dispatch, [&](Index begin, Index end) {
        for (Index i = begin; i < end; ++i) {
            const Index l = i >> q;
            const Index r = i & (right - 1);
            const Index i0 = (l << (q + 1)) | r;
            const Index i1 = i0 | right;
            const Amplitude x0 = src[i0];
            const Amplitude x1 = src[i1];
            dst[i0] = cadd(cmul(f[0], x0), cmul(f[1], x1));
            dst[i1] = cadd(cmul(f[2], x0), cmul(f[3], x1));
        }
    });
}

// out (=|+=) a (x) b for a square a x a matrix and a 2x2 factor.
void kron_into(const std::vector<Amplitude> &a, Index a_dim, const Matrix2 &b, Amplitude *out,
               bool accumulate) {
    const Index dim = a_dim * 2;
    for (Index i = 0; i < a_dim; ++i) {
        for (Index j = 0; j < a_dim; ++j) {
            const Amplitude aij = a[i * a_dim + j];
            for (unsigned k = 0; k < 2; ++k) {
                for (unsigned l = 0; l < 2; ++l) {
                    Amplitude &dst = out[(i * 2 + k) * dim + j * 2 + l];
                    const Amplitude v = cmul(aij, b[k * 2 + l]);
                    dst = accumulate ? cadd(dst, v) : v;
                }
            }
        }
    }
}

// Explicit Kronecker product of a square a x a matrix with a 2x2 factor.
std::vector<Amplitude> kron(const std::vector<Amplitude> &a, Index a_dim, const Matrix2 &b) {
    std::vector<Amplitude> out(a_dim * a_dim * 4);
    kron_into(a, a_dim, b, out.data(), false);
    return out;
}

const Matrix2 &factor_on(const KronTerm &term, Qubit q) {
    for (const auto &f : term.factors) {
        if (f.qubit == q) {
            return f.m;
        }
    }
    return kIdentity2;
}

} // namespace

void apply_gate_kron_lazy(StateVector &s, const GateMatrix &g, std::span<const Qubit> targets,
                          std::span<const Qubit> controls, const DispatchOptions &dispatch) {
    const detail::GateLayout layout(s.num_qubits(), g, targets, controls);
    const std::vector<KronTerm> terms = detail::kronecker_terms(g, targets, controls);
    const unsigned n = s.num_qubits();
    const Index size = s.size();
    const Amplitude *x = s.data();

    std::vector<Amplitude> y(size);
    std::vector<Amplitude> work;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const KronTerm &term = terms[t];
        const bool direct_into_y = t == 0 && term.coef == Amplitude{1, 0};
        Amplitude *dst = y.data();
        if (!direct_into_y) {
            work.resize(size);
            dst = work.data();
        }
        if (term.factors.empty()) {
            std::copy(x, x + size, dst);
        } else {
            mode_product(x, dst, n, term.factors[0].qubit, term.factors[0].m, dispatch);
            for (std::size_t f = 1; f < term.factors.size(); ++f) {
                mode_product(dst, dst, n, term.factors[f].qubit, term.factors[f].m, dispatch);
            }
        }
        if (direct_into_y) {
            continue;
        }
        const Amplitude coef = term.coef;
        const bool first = t == 0;
        detail::parallel_for(size, dispatch, [&](Index begin, Index end) {
            for (Index i = begin; i < end; ++i) {
                const Amplitude scaled = coef == Amplitude{1, 0} ? dst[i] : cmul(coef, dst[i]);
                y[i] = first ? scaled : cadd(y[i], scaled);
            }
        });
    }
    std::copy(y.begin(), y.end(), s.data());
}

void apply_gate_kron_dense(StateVector &s, const GateMatrix &g, std::span<const Qubit> targets,
                           std::span<const Qubit> controls, unsigned dense_cap,
                           const DispatchOptions &dispatch) {
    const unsigned n = s.num_qubits();
    if (n > dense_cap) {
        throw Error(Errc::DenseCapExceeded,
                    "dense operator for " + std::to_string(n) + " qubits needs " +
                        std::to_string(dense_operator_bytes(n)) + " bytes (cap " +
                        std::to_string(dense_cap) + " qubits)");
    }
    const detail::GateLayout layout(n, g, targets, controls);
    const std::vector<KronTerm> terms = detail::kronecker_terms(g, targets, controls);
    const Index dim = s.size();

    // Full operator: sum over terms of F_{n-1} (x) ... (x) F_0, so that
    // qubit 0 is the fastest-varying row/column bit. The last Kronecker step
    // of each term accumulates straight into op, so only one dim x dim
    // buffer is ever live.
    std::vector<Amplitude> op(dim * dim);
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const KronTerm &term = terms[t];
        std::vector<Amplitude> chain{term.coef};
        Index chain_dim = 1;
        for (unsigned q = n; q-- > 1;) {
            chain = kron(chain, chain_dim, factor_on(term, q));
            chain_dim *= 2;
        }
        kron_into(chain, chain_dim, factor_on(term, 0), op.data(), t > 0);
    }

    const Amplitude *x = s.data();
    std::vector<Amplitude> y(dim);
    detail::parallel_for(dim, dispatch, [&](Index begin, Index end) {
        for (Index r = begin; r < end; ++r) {
            const Amplitude *row = op.data() + r * dim;
            Amplitude acc = cmul(row[0], x[0]);
            for (Index c = 1; c < dim; ++c) {
                acc = cadd(acc, cmul(row[c], x[c]));
            }
            y[r] = acc;
        }
    });
    std::copy(y.begin(), y.end(), s.data());
}

} // namespace svbench
