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

#include <cmath>

#include "grsk/insertion.hpp"
#include "grsk/specfun.hpp"
#include "grsk/tropical.hpp"
#include "support/oracles.hpp"

using namespace grsk;

namespace {

WeightMatrix random_real(std::size_t n, std::size_t N, RngStream& rng) {
    WeightMatrix w(n, N);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= N; ++j) w(i, j) = 4.0 * rng.uniform() - 1.0;
    return w;
}

}  // namespace

TEST_CASE("single column sums") {
    RngStream rng(11, 0);
    auto w = random_real(8, 1, rng);
    double s = 0.0;
    for (std::size_t i = 1; i <= 8; ++i) s += w(i, 1);
    CHECK(tropical_evolve(w, 8)(1, 1) == doctest::Approx(s).epsilon(1e-14));
}

TEST_CASE("two by two by hand") {
    WeightMatrix w(2, 2);
    w(1, 1) = 0.3, w(1, 2) = -0.2, w(2, 1) = 1.1, w(2, 2) = 0.4;
    auto L = tropical_evolve(w, 2);
    CHECK(L(2, 1) == doctest::Approx(0.3 + 0.4 + std::max(1.1, -0.2)));
    CHECK(L(2, 1) + L(2, 2) == doctest::Approx(0.3 - 0.2 + 1.1 + 0.4));
}

TEST_CASE("insertion agrees with the path maximum") {
    RngStream rng(12, 0);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 5, N = 1 + (trial / 5) % 5;
        auto w = random_real(n, N, rng);
        auto a = tropical_evolve(w, n);
        auto b = tropical_by_paths(w, n);
        REQUIRE(a.fill() == b.fill());
        for (std::size_t k = 1; k <= N; ++k)
            for (std::size_t l = 1; l <= std::min(k, n); ++l) CHECK(a(k, l) == doctest::Approx(b(k, l)).epsilon(1e-12));
    }
}

TEST_CASE("nonnegative weights give interlacing patterns") {
    RngStream rng(15, 0);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 6, N = 1 + (trial / 6) % 6;
        WeightMatrix w(n, N);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= N; ++j) w(i, j) = sample_exponential(1.0, rng);
        CHECK(interlaces(tropical_evolve(w, n)));
    }
}

TEST_CASE("log of geometric insertion approaches the tropical one") {
    RngStream rng(13, 0);
    auto w = random_real(4, 4, rng);
    auto L = tropical_evolve(w, 4);
    double prev = 1e300;
    for (double eps : {0.5, 0.1, 0.02, 0.004}) {
        WeightMatrix logd(4, 4);
        for (std::size_t i = 1; i <= 4; ++i)
            for (std::size_t j = 1; j <= 4; ++j) logd(i, j) = w(i, j) / eps;
        auto t = evolve_from_empty_log(logd, 4);
        double dist = 0.0;
        for (std::size_t k = 1; k <= 4; ++k)
            for (std::size_t l = 1; l <= k; ++l) dist = std::max(dist, std::abs(eps * t(k, l) - L(k, l)));
        CHECK(dist < prev);
        CHECK(dist <= 2.0 * eps * std::log(400.0));
        prev = dist;
    }
}

TEST_CASE("soft max sandwich") {
    RngStream rng(14, 0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> x(1 + trial % 9);
        for (double& v : x) v = 10.0 * rng.uniform() - 5.0;
        const double eps = 0.01 + rng.uniform();
        const double m = *std::max_element(x.begin(), x.end());
        const double f = soft_max(x, eps);
        CHECK(f - m >= 0.0);
        CHECK(f - m <= eps * std::log(static_cast<double>(x.size())) + 1e-14);
    }
    CHECK_THROWS_AS(soft_max(std::vector<double>{}, 1.0), ContractError);
    CHECK_THROWS_AS(soft_max(std::vector<double>{1.0}, 0.0), DomainError);
}

TEST_CASE("interlacing detects violations") {
    TropicalArray L(2, 2);
    L(1, 1) = 1.0, L(2, 1) = 2.0, L(2, 2) = 0.5;
    CHECK(interlaces(L));
    L(2, 2) = 1.5;
    CHECK_FALSE(interlaces(L));
}
