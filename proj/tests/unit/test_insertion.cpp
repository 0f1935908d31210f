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

#include <boost/rational.hpp>

#include "grsk/insertion.hpp"
#include "support/oracles.hpp"

using namespace grsk;
using Q = boost::rational<long long>;

namespace {

BasicWord<Q> qword(std::size_t start, std::vector<Q> e) { return BasicWord<Q>{start, std::move(e)}; }

Pattern<Q> example_array() {
    Pattern<Q> z(3, 3);
    z.set_diagonal(1, qword(1, {4, 1, 3}));
    z.set_diagonal(2, qword(2, {3, 7}));
    z.set_diagonal(3, qword(3, {2}));
    return z;
}

}  // namespace

TEST_CASE("word insertion small cases") {
    auto [xi, bp] = row_insert(qword(1, {3, 2}), qword(1, {1, 5}));
    CHECK(xi.entries == std::vector<Q>{3, 25});
    CHECK(bp.start == 2);
    CHECK(bp.entries == std::vector<Q>{Q(2, 5)});

    auto [s, sb] = row_insert(qword(4, {Q(7, 3)}), qword(4, {Q(5)}));
    CHECK(s.entries == std::vector<Q>{Q(35, 3)});
    CHECK(sb.empty());

    auto [o, ob] = row_insert(qword(1, {1, 1, 1}), qword(1, {1, 1, 1}));
    CHECK(o.entries == std::vector<Q>{1, 2, 3});
    CHECK(ob.entries == std::vector<Q>{Q(1, 2), Q(2, 3)});
}

TEST_CASE("word insertion errors") {
    CHECK_THROWS_AS(row_insert(Word{1, {1.0, -2.0}}, Word{1, {1.0, 1.0}}), DomainError);
    CHECK_THROWS_AS(row_insert(Word{1, {1.0, 2.0}}, Word{2, {1.0}}), ContractError);
    CHECK_THROWS_AS(row_insert_empty(Word{1, {0.0}}), DomainError);
}

TEST_CASE("insertion into an empty word") {
    CHECK(row_insert_empty(qword(1, {2, 3})).entries == std::vector<Q>{2, 6});
    CHECK(row_insert_empty(qword(3, {Q(9, 4)})).entries == std::vector<Q>{Q(9, 4)});
    CHECK(row_insert_empty(qword(1, {2, 2, 4})).entries == std::vector<Q>{2, 4, 16});
}

TEST_CASE("array insertion reproduces the worked example exactly") {
    auto r = insert_row(example_array(), qword(1, {2, 2, 4}));
    CHECK(r.z.diagonal(1).entries == std::vector<Q>{8, 18, 84});
    CHECK(r.z.diagonal(2).entries == std::vector<Q>{Q(2, 3), Q(138, 7)});
    CHECK(r.z.diagonal(3).entries == std::vector<Q>{Q(28, 69)});
    CHECK(r.a.diagonal(2).entries == std::vector<Q>{Q(2, 9), Q(18, 7)});
    CHECK(r.a.diagonal(3).entries == std::vector<Q>{Q(14, 69)});
    auto [zp, a] = oracle::nyalg(example_array(), std::vector<Q>{2, 2, 4});
    CHECK(zp == r.z);
    CHECK(a == r.a);
}

TEST_CASE("array insertion single entry and partial arrays") {
    Pattern<Q> one(1, 1);
    one(1, 1) = 1;
    CHECK(insert_row(one, qword(1, {Q(7, 2)})).z(1, 1) == Q(7, 2));
    Pattern<Q> partial(3, 2);
    CHECK_THROWS_AS(insert_row(partial, qword(1, {1, 1, 1})), ContractError);
}

TEST_CASE("array insertion with unit word matches the direct recursion") {
    RngStream rng(31, 0);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t N = 1 + trial % 6;
        TriangularArray z(N, N);
        for (std::size_t k = 1; k <= N; ++k)
            for (std::size_t l = 1; l <= k; ++l) z(k, l) = 0.1 + 5.0 * rng.uniform();
        Word b{1, std::vector<double>(N, 1.0)};
        auto r = insert_row(z, b);
        auto [zp, a] = oracle::nyalg(z, b.entries);
        for (std::size_t k = 1; k <= N; ++k) {
            CHECK(r.a(k, 1) == 1.0);
            for (std::size_t l = 1; l <= k; ++l) {
                CHECK(oracle::rel_err(r.z(k, l), zp(k, l)) < 1e-13);
                CHECK(oracle::rel_err(r.a(k, l), a(k, l)) < 1e-13);
            }
        }
    }
}

TEST_CASE("evolution from the empty array") {
    RngStream rng(2, 0);
    SUBCASE("one column is a product") {
        auto d = oracle::random_matrix(7, 1, rng);
        auto z = evolve_from_empty(d, 7);
        double p = 1.0;
        for (std::size_t i = 1; i <= 7; ++i) p *= d(i, 1);
        CHECK(oracle::rel_err(z(1, 1), p) < 1e-14);
    }
    SUBCASE("one step gives prefix products") {
        auto d = oracle::random_matrix(1, 5, rng);
        auto z = evolve_from_empty(d, 1);
        CHECK(z.fill() == 1);
        double p = 1.0;
        for (std::size_t k = 1; k <= 5; ++k) {
            p *= d(1, k);
            CHECK(oracle::rel_err(z(k, 1), p) < 1e-14);
        }
    }
    SUBCASE("two by two") {
        WeightMatrix d(2, 2);
        d(1, 1) = 1.5, d(1, 2) = 0.7, d(2, 1) = 2.0, d(2, 2) = 3.0;
        auto z = evolve_from_empty(d, 2);
        CHECK(z(2, 1) == doctest::Approx(d(1, 1) * d(2, 2) * (d(2, 1) + d(1, 2))).epsilon(1e-14));
        CHECK(z(2, 1) * z(2, 2) == doctest::Approx(1.5 * 0.7 * 2.0 * 3.0).epsilon(1e-14));
    }
    SUBCASE("first diagonal is the polymer partition function") {
        auto d = oracle::random_matrix(6, 4, rng);
        auto z = evolve_from_empty(d, 6);
        for (std::size_t k = 1; k <= 4; ++k) CHECK(oracle::rel_err(z(k, 1), oracle::polymer(d, 6, k)) < 1e-12);
    }
    CHECK_THROWS_AS(evolve_from_empty(oracle::random_matrix(2, 2, rng), 3), ContractError);
}

TEST_CASE("log-domain insertion agrees with linear domain") {
    RngStream rng(3, 0);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t N = 1 + trial % 6, n = 1 + (trial * 7) % 9;
        auto d = oracle::random_matrix(n, N, rng);
        WeightMatrix logd(n, N);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= N; ++j) logd(i, j) = std::log(d(i, j));
        auto z = evolve_from_empty(d, n);
        auto t = evolve_from_empty_log(logd, n);
        REQUIRE(t.fill() == z.fill());
        auto back = to_linear(t);
        for (std::size_t k = 1; k <= N; ++k)
            for (std::size_t l = 1; l <= std::min(k, z.fill()); ++l) CHECK(oracle::rel_err(back(k, l), z(k, l)) < 1e-9);
        auto lz = to_log(z);
        for (std::size_t k = 1; k <= N; ++k)
            for (std::size_t l = 1; l <= std::min(k, z.fill()); ++l)
                CHECK(std::abs(std::exp(lz(k, l)) / z(k, l) - 1.0) < 1e-12);
    }
}

TEST_CASE("log-domain evolution survives where linear overflows") {
    const std::size_t n = 400, N = 3;
    WeightMatrix logd(n, N, std::log(30.0));
    auto t = evolve_from_empty_log(logd, n);
    CHECK(std::isfinite(t(3, 1)));
    CHECK(t(3, 1) > 709.0);
}

TEST_CASE("ratio insertion") {
    SUBCASE("worked example ratios") {
        auto r = ratio_insert(Word{2, {2.0 / 3.0}}, Word{1, {1.0, 5.0}});
        CHECK(r.zeta.front() == 1.0);
        CHECK(r.eta[2] == doctest::Approx(25.0 / 3.0).epsilon(1e-15));
        CHECK(r.b[2] == doctest::Approx(2.0 / 5.0).epsilon(1e-15));
    }
    SUBCASE("unit word by hand") {
        auto r = ratio_insert(Word{2, {2.0, 0.5}}, Word{1, {1.0, 1.0, 1.0}});
        CHECK(r.eta.entries[0] == doctest::Approx(3.0));
        CHECK(r.eta.entries[1] == doctest::Approx(4.0 / 3.0));
        CHECK(r.b.entries[0] == doctest::Approx(2.0 / 3.0));
        CHECK(r.b.entries[1] == doctest::Approx(3.0 / 8.0));
        CHECK(r.zeta_last == doctest::Approx(4.0));
    }
    SUBCASE("agrees with word insertion on ratios") {
        RngStream rng(4, 0);
        double worst = 0.0;
        for (int trial = 0; trial < 10000; ++trial) {
            const std::size_t len = 2 + trial % 5;
            const std::size_t l = 1 + trial % 3;
            Word xi{l, {}}, b{l, {}};
            for (std::size_t i = 0; i < len; ++i) {
                xi.entries.push_back(0.05 + 20.0 * rng.uniform());
                b.entries.push_back(0.05 + 20.0 * rng.uniform());
            }
            auto [xp, bp] = row_insert(xi, b);
            Word eta{l + 1, {}};
            for (std::size_t k = l + 1; k <= xi.last(); ++k) eta.entries.push_back(xi[k] / xi[k - 1]);
            auto r = ratio_insert(eta, b);
            for (std::size_t k = l + 1; k <= xi.last(); ++k) {
                worst = std::max(worst, oracle::rel_err(r.eta[k], xp[k] / xp[k - 1]));
                worst = std::max(worst, oracle::rel_err(r.b[k], bp[k]));
            }
            worst = std::max(worst, oracle::rel_err(r.zeta_last, xp[xi.last()] / xi[xi.last()]));
        }
        CHECK(worst < 1e-12);
    }
    CHECK_THROWS_AS(ratio_insert(Word{2, {-1.0}}, Word{1, {1.0, 1.0}}), DomainError);
}
