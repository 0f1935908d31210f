/*
   Copyright 2026 The grsk Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grsk/insertion.hpp"
#include "grsk/paths.hpp"
#include "support/oracles.hpp"

using namespace grsk;

TEST_CASE("path tuples are disjoint and end where they should") {
    std::size_t seen = 0;
    for_each_path_tuple(4, 4, 2, [&](const std::vector<LatticePath>& t) {
        ++seen;
        REQUIRE(t.size() == 2);
        CHECK(t[0].front() == std::pair<std::size_t, std::size_t>{1, 1});
        CHECK(t[1].front() == std::pair<std::size_t, std::size_t>{1, 2});
        CHECK(t[0].back() == std::pair<std::size_t, std::size_t>{4, 3});
        CHECK(t[1].back() == std::pair<std::size_t, std::size_t>{4, 4});
        for (auto v : t[0])
            for (auto u : t[1]) CHECK(v != u);
    });
    // binomial determinant: C(5,2)^2 - C(6,3) C(4,1)
    CHECK(seen == 20);
}

TEST_CASE("tau by explicit enumeration") {
    WeightMatrix d(2, 2);
    d(1, 1) = 1.5, d(1, 2) = 0.7, d(2, 1) = 2.0, d(2, 2) = 3.0;
    CHECK(tau_by_paths(d, 2, 1, 2) == doctest::Approx(1.5 * 3.0 * (2.0 + 0.7)));
    CHECK(tau_by_paths(d, 2, 2, 2) == doctest::Approx(1.5 * 0.7 * 2.0 * 3.0));
    CHECK(tau_by_paths(d, 1, 1, 2) == doctest::Approx(1.5 * 2.0));

    RngStream rng(5, 0);
    auto e = oracle::random_matrix(3, 4, rng);
    CHECK(tau_by_paths(e, 3, 2, 1) == 0.0);
    CHECK(tau_by_paths(e, 4, 3, 2) == 0.0);
    // l = k > n: straight columns
    CHECK(tau_by_paths(e, 3, 3, 2) == doctest::Approx(e(1, 1) * e(2, 1) * e(1, 2) * e(2, 2) * e(1, 3) * e(2, 3)));
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t k = 1; k <= 4; ++k)
            CHECK(oracle::rel_err(tau_by_paths(e, k, 1, n), oracle::polymer(e, n, k)) < 1e-13);
}

TEST_CASE("tau at full staircase is the product of all weights") {
    RngStream rng(6, 0);
    for (std::size_t N = 1; N <= 4; ++N) {
        auto d = oracle::random_matrix(N, N, rng);
        double p = 1.0;
        for (std::size_t i = 1; i <= N; ++i)
            for (std::size_t j = 1; j <= N; ++j) p *= d(i, j);
        CHECK(oracle::rel_err(tau_by_paths(d, N, N, N), p) < 1e-13);
        CHECK(oracle::rel_err(tau_by_minors(d, N, N, N), p) < 1e-12);
    }
    auto c = oracle::random_matrix(9, 1, rng);
    double p = 1.0;
    for (std::size_t i = 1; i <= 9; ++i) p *= c(i, 1);
    CHECK(oracle::rel_err(tau_by_minors(c, 1, 1, 9), p) < 1e-13);
}

TEST_CASE("minors agree with path enumeration") {
    RngStream rng(7, 0);
    double worst = 0.0;
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + trial % 4, N = 1 + (trial / 4) % 4;
        auto d = oracle::random_matrix(n, N, rng);
        for (std::size_t k = 1; k <= N; ++k)
            for (std::size_t l = 1; l <= std::min(k, n); ++l)
                worst = std::max(worst, oracle::rel_err(tau_by_minors(d, k, l, n), tau_by_paths(d, k, l, n)));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("enumeration guard") {
    RngStream rng(8, 0);
    auto d = oracle::random_matrix(14, 14, rng);
    CHECK_THROWS_AS(tau_by_paths(d, 14, 3, 14), SizeError);
}

TEST_CASE("P tableau equals the insertion evolution") {
    RngStream rng(9, 0);
    double worst = 0.0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 6, N = 1 + (trial / 6) % 6;
        auto d = oracle::random_matrix(n, N, rng);
        auto z = evolve_from_empty(d, n);
        auto p = p_tableau(d, n);
        REQUIRE(p.fill() == z.fill());
        for (std::size_t k = 1; k <= N; ++k)
            for (std::size_t l = 1; l <= std::min(k, n); ++l) worst = std::max(worst, oracle::rel_err(p(k, l), z(k, l)));
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("P and Q tableaux share their shape") {
    RngStream rng(10, 0);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + trial % 5, N = 1 + (trial / 5) % 5;
        auto d = oracle::random_matrix(n, N, rng);
        auto z = p_tableau(d, n);
        auto w = q_tableau(d, n);
        CHECK(w.N() == n);
        for (std::size_t l = 1; l <= std::min(n, N); ++l) CHECK(oracle::rel_err(w(n, l), z(N, l)) < 1e-10);
    }
}
