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
#pragma once

#include "svbench/circuit.hpp"
#include "svbench/state_vector.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

namespace svbench::testing {

/// Haar-ish random single-qubit unitary from three Euler angles and a phase.
inline Matrix2 random_unitary(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    const double a = angle(rng), b = angle(rng), c = angle(rng), d = angle(rng);
    using C = std::complex<double>;
    const C g = std::polar(1.0, a);
    const C m00 = g * std::polar(std::cos(c / 2), -(b + d) / 2);
    const C m01 = -g * std::polar(std::sin(c / 2), -(b - d) / 2);
    const C m10 = g * std::polar(std::sin(c / 2), (b - d) / 2);
    const C m11 = g * std::polar(std::cos(c / 2), (b + d) / 2);
    return {Amplitude(m00), Amplitude(m01), Amplitude(m10), Amplitude(m11)};
}

/// CostTable draws only kinds named in the gate cost table; Extended adds
/// S and Rz.
enum class GateSet { CostTable, Extended };

inline Circuit random_circuit(std::mt19937_64 &rng, unsigned n, std::size_t gates,
                              GateSet set = GateSet::Extended) {
    static constexpr GateKind extended[] = {GateKind::H,  GateKind::X,  GateKind::Y,
                                            GateKind::Z,  GateKind::T,  GateKind::P,
                                            GateKind::Rx, GateKind::Ry, GateKind::General2x2,
                                            GateKind::S,  GateKind::Rz};
    const int one_qubit_count = set == GateSet::CostTable ? 9 : 11;
    static constexpr GateKind two_qubit[] = {GateKind::CNOT, GateKind::CZ, GateKind::CP,
                                             GateKind::SWAP};
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    std::uniform_int_distribution<unsigned> qubit(0, n - 1);
    Circuit c{n, {}, CircuitLabel::Custom};
    for (std::size_t i = 0; i < gates; ++i) {
        const bool pick_two = n >= 2 && std::uniform_int_distribution<int>(0, 2)(rng) == 0;
        if (pick_two) {
            const GateKind k = two_qubit[std::uniform_int_distribution<int>(0, 3)(rng)];
            const Qubit a = qubit(rng);
            Qubit b = qubit(rng);
            while (b == a) b = qubit(rng);
            if (k == GateKind::SWAP) {
                c.ops.push_back(GateOp::swap(a, b));
            } else {
                std::optional<double> th;
                if (k == GateKind::CP) th = angle(rng);
                c.ops.push_back(GateOp::controlled(k, a, b, th));
            }
        } else {
            const GateKind k =
                extended[std::uniform_int_distribution<int>(0, one_qubit_count - 1)(rng)];
            const Qubit t = qubit(rng);
            if (k == GateKind::General2x2) {
                c.ops.push_back(GateOp::general(t, random_unitary(rng)));
            } else {
                std::optional<double> th;
                if (is_parameterized(k)) th = angle(rng);
                c.ops.push_back(GateOp::single(k, t, th));
            }
        }
    }
    return c;
}

/// Normalized state with independent Gaussian components.
inline StateVector random_state(std::mt19937_64 &rng, unsigned n) {
    std::normal_distribution<double> normal;
    std::vector<std::complex<double>> v(Index{1} << n);
    double norm = 0;
    for (auto &a : v) {
        a = {normal(rng), normal(rng)};
        norm += std::norm(a);
    }
    std::vector<Amplitude> amps(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) amps[i] = Amplitude(v[i] / std::sqrt(norm));
    return StateVector::from_amplitudes(std::move(amps));
}

} // namespace svbench::testing
