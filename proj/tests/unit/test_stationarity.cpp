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
#include <vector>

#include "grsk/errors.hpp"
#include "grsk/insertion.hpp"
#include "grsk/specfun.hpp"
#include "grsk/stationarity.hpp"
#include "grsk/stats.hpp"
#include "support/oracles.hpp"

using namespace grsk;

namespace {

double ks_invgamma(const std::vector<double>& x, double shape) {
    return stats::ks_test(x, [shape](double v) { return inverse_gamma_cdf(v, shape); }).p_value;
}

double spearman_abs(const std::vector<double>& a, const std::vector<double>& b) {
    return std::abs(stats::spearman(a, b));
}

}  // namespace

TEST_CASE("stationary start: one ratio") {
    const SolvableParams p{{1.0}, {-0.6, 0.3}};
    std::vector<double> eta;
    for (std::size_t r = 0; r < 100000; ++r) {
        RngStream rng(2, r);
        const auto s = init_stationary(p, 1, rng);
        REQUIRE(s.eta.size() == 1);
        REQUIRE(s.eta[0].start == 2);
        eta.push_back(s.eta[0][2]);
    }
    CHECK(ks_invgamma(eta, 0.9) > 0.01);
}

TEST_CASE("stationary start: independent draws") {
    const SolvableParams p{{1.0}, {-0.6, -0.1, 0.3}};
    std::vector<double> a, b, c;
    for (std::size_t r = 0; r < 100000; ++r) {
        RngStream rng(3, r);
        const auto s = init_stationary(p, 2, rng);
        a.push_back(s.eta[0][2]);
        b.push_back(s.eta[0][3]);
        c.push_back(s.eta[1][3]);
    }
    CHECK(ks_invgamma(b, 0.9) > 0.01);
    CHECK(ks_invgamma(c, 0.4) > 0.01);
    CHECK(spearman_abs(a, b) < 0.01);
    CHECK(spearman_abs(a, c) < 0.01);
    CHECK(spearman_abs(b, c) < 0.01);
}

TEST_CASE("ordering of column parameters is required") {
    RngStream rng(1, 0);
    CHECK_THROWS_AS(init_stationary(SolvableParams{{1.0}, {0.2, -0.1, 0.4}}, 1, rng), ContractError);
    CHECK_THROWS_AS(init_stationary(SolvableParams{{1.0}, {-0.2, 0.1, 0.0}}, 2, rng), ContractError);
    CHECK_THROWS_AS(init_stationary(SolvableParams{{1.0}, {-0.2, 0.1}}, 2, rng), ContractError);
}

TEST_CASE("single ratio insertion keeps the product law") {
    // alpha_k for eta_k, beta_k = beta_1 + alpha_k for b_k.
    const std::vector<double> alpha{0.0, 0.7, 1.1}, beta{0.8, 1.5, 1.9};
    std::vector<std::vector<double>> out(5);
    for (std::size_t r = 0; r < 100000; ++r) {
        RngStream rng(4, r);
        Word eta{2, {sample_inverse_gamma(alpha[1], rng), sample_inverse_gamma(alpha[2], rng)}};
        Word b{1, {}};
        for (double s : beta) b.entries.push_back(sample_inverse_gamma(s, rng));
        const auto res = ratio_insert(eta, b);
        out[0].push_back(res.eta[2]);
        out[1].push_back(res.eta[3]);
        out[2].push_back(res.b[2]);
        out[3].push_back(res.b[3]);
        out[4].push_back(res.zeta_last);
    }
    const std::vector<double> shapes{alpha[1], alpha[2], beta[1], beta[2], beta[0]};
    for (std::size_t v = 0; v < 5; ++v) CHECK(ks_invgamma(out[v], shapes[v]) > 0.01);
    for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t c = a + 1; c < 5; ++c) CHECK(spearman_abs(out[a], out[c]) < 0.015);
}

TEST_CASE("insertion at the last position leaves no output word") {
    const auto r = ratio_insert(Word{4, {}}, Word{3, {2.5}});
    CHECK(r.b.empty());
    CHECK(r.eta.empty());
    CHECK(r.zeta_last == 2.5);
}

TEST_CASE("ratio steps agree with array insertion") {
    const SolvableParams p{{1.3, 1.5, 1.7}, {-1.0, -0.5, 0.2, 0.4}};
    RngStream rng(6, 0);
    StationaryState s = init_stationary(p, 2, rng);
    TriangularArray z = array_from_ratios(s);
    for (std::size_t m = 1; m <= 3; ++m) {
        Word b{1, {}};
        for (std::size_t k = 1; k <= 4; ++k) b.entries.push_back(sample_inverse_gamma(p.gamma(m, k), rng));
        const auto s2 = burke_step(s, b);
        const auto z2 = insert_row(z, b).z;
        for (std::size_t l = 1; l <= 2; ++l) {
            for (std::size_t k = l + 1; k <= 4; ++k)
                CHECK(oracle::rel_err(s2.eta[l - 1][k], z2(k, l) / z2(k - 1, l)) < 1e-12);
            CHECK(oracle::rel_err(s2.exits.back()[l - 1], z2(4, l) / z(4, l)) < 1e-12);
        }
        s = s2;
        z = z2;
    }
    CHECK(s.time == 3);
    CHECK(s.exits.size() == 3);
}

TEST_CASE("stationary run, small case") {
    const SolvableParams p{{1.2, 1.4, 1.1}, {-0.7, 0.1, 0.3}};
    const auto r = burke_check(p, 1, 3, 20000, 8);
    CHECK(r.marginals.size() == 2 + 3);
    CHECK(r.min_ks_p > 0.01);
    CHECK(r.max_abs_spearman < 0.03);
    CHECK(r.rank_histogram_p.size() == 10);
    const auto r1 = burke_check(p, 1, 3, 20000, 8, 1);
    const auto r3 = burke_check(p, 1, 3, 20000, 8, 3);
    CHECK(r1.min_ks_p == r3.min_ks_p);
    CHECK(r1.max_abs_spearman == r3.max_abs_spearman);
}

TEST_CASE("log-domain square polymer matches the linear recursion") {
    RngStream a(10, 0), b(10, 0);
    const double lz = log_partition_square(1.3, 5, a);
    WeightMatrix d(5, 5);
    for (std::size_t i = 1; i <= 5; ++i)
        for (std::size_t j = 1; j <= 5; ++j) d(i, j) = std::exp(-sample_log_gamma(1.3, b));
    CHECK(oracle::rel_err(lz, std::log(oracle::polymer(d, 5, 5))) < 1e-12);
}

TEST_CASE("free energy: one weight and trend") {
    const auto one = free_energy_run(1.0, 1, 100000, 12);
    CHECK(std::abs(one.mean + digamma(1.0)) < 4.0 * one.std_error);
    CHECK(one.target == doctest::Approx(-2.0 * digamma(0.5)));
    const auto scan = free_energy_scan(1.0, {40, 80, 160}, 200, 13);
    REQUIRE(scan.runs.size() == 3);
    for (std::size_t i = 1; i < 3; ++i) {
        CHECK(scan.runs[i].mean > scan.runs[i - 1].mean);
        CHECK(scan.runs[i].abs_diff < scan.runs[i - 1].abs_diff);
    }
    CHECK(scan.variance_exponent > 0.0);
    CHECK(scan.variance_exponent < 1.5);
}
