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
#include "doctest.h"

#include "random_circuit.hpp"

#include "svbench/error.hpp"
#include "svbench/verify.hpp"

#include <random>

using namespace svbench;

TEST_CASE("GHZ at five qubit counts passes under every strategy") {
    for (unsigned n : {2U, 4U, 6U, 8U, 10U}) {
        for (const auto &r : verify_all(build_ghz(n))) {
            CAPTURE(n);
            CAPTURE(r.strategy);
            CHECK(r.pass);
            CHECK(r.max_abs_deviation < kVerifyTolerance);
            CHECK(r.reference == "kron_dense");
            CHECK(r.label == CircuitLabel::GHZ);
            CHECK(r.n == n);
        }
    }
}

TEST_CASE("QFT at 3 and 4 qubits passes under every strategy") {
    for (unsigned n : {3U, 4U}) {
        const auto reports = verify_all(build_qft(n));
        CHECK(reports.size() == kAllStrategyIds.size());
        for (const auto &r : reports) CHECK(r.pass);
    }
}

TEST_CASE("a strategy against itself deviates by exactly zero") {
    std::mt19937_64 rng(4);
    const auto c = testing::random_circuit(rng, 6, 40);
    for (StrategyId id : kAllStrategyIds) {
        const auto r = verify_strategy(c, KernelStrategy{id}, KernelStrategy{id});
        CHECK(r.max_abs_deviation == 0.0);
        CHECK(r.pass);
    }
}

TEST_CASE("deviation is symmetric") {
    std::mt19937_64 rng(5);
    const auto c = testing::random_circuit(rng, 5, 40);
    const KernelStrategy a{StrategyId::Tensordot}, b{StrategyId::KronLazy};
    CHECK(verify_strategy(c, a, b).max_abs_deviation ==
          verify_strategy(c, b, a).max_abs_deviation);
}

TEST_CASE("reference above the dense cap is refused") {
    try {
        (void)verify_strategy(build_ghz(13), KernelStrategy{StrategyId::DirectIndex});
        FAIL("expected DenseCapExceeded");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::DenseCapExceeded);
    }
    const auto r = verify_strategy(build_ghz(13), KernelStrategy{StrategyId::DirectIndex},
                                   KernelStrategy{StrategyId::FlatIndex});
    CHECK(r.pass);
}
