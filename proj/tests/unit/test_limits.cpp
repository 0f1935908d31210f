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

#include <boost/math/special_functions/gamma.hpp>

#include "grsk/errors.hpp"
#include "grsk/insertion.hpp"
#include "grsk/limits.hpp"
#include "grsk/paths.hpp"
#include "grsk/specfun.hpp"
#include "grsk/stats.hpp"

using namespace grsk;

namespace {

SolvableParams homogeneous(std::size_t n, std::size_t N, double g) {
    return SolvableParams{std::vector<double>(n, 0.5 * g), std::vector<double>(N, 0.5 * g)};
}

}  // namespace

TEST_CASE("coupled weights: exact marginal and pathwise convergence") {
    std::vector<double> d;
    RngStream rng(1, 0);
    for (int i = 0; i < 20000; ++i) d.push_back(std::exp(coupled_weight(rng.uniform(), 1.3, 0.5).eps_log_d / 0.5));
    const double shape = 0.5 * 1.3;
    CHECK(stats::ks_test(d, [shape](double x) { return inverse_gamma_cdf(x, shape); }).p_value > 0.01);

    for (double u : {1e-12, 0.01, 0.3, 0.7, 0.999}) {
        const auto coarse = coupled_weight(u, 0.8, 0.01);
        const auto fine = coupled_weight(u, 0.8, 0.0001);
        CHECK(std::abs(coarse.eps_log_d - coarse.w) < 0.05);
        CHECK(std::abs(fine.eps_log_d - fine.w) < 1e-3);
    }
    CHECK_THROWS_AS(coupled_weight(0.0, 1.0, 0.1), DomainError);
    CHECK_THROWS_AS(coupled_weight(0.5, 1.0, -0.1), DomainError);
}

TEST_CASE("tuple counts by minors match enumeration") {
    WeightMatrix ones(3, 4, 1.0);
    for (std::size_t k = 1; k <= 4; ++k)
        for (std::size_t l = 1; l <= std::min<std::size_t>(k, 3); ++l) {
            std::size_t count = 0;
            for_each_path_tuple(3, k, l, [&](const std::vector<LatticePath>&) { ++count; });
            CHECK(tau_by_minors(ones, k, l, 3) == doctest::Approx(static_cast<double>(count)).epsilon(1e-12));
        }
}

TEST_CASE("one column: the coupled sum is exact") {
    const auto p = homogeneous(6, 1, 1.0);
    RngStream rng(2, 0);
    WeightMatrix logd(6, 1), w(6, 1);
    double sum_eps = 0.0, sum_w = 0.0;
    const double eps = 0.1;
    for (std::size_t i = 1; i <= 6; ++i) {
        const auto c = coupled_weight(rng.uniform(), p.gamma(i, 1), eps);
        logd(i, 1) = c.eps_log_d / eps;
        w(i, 1) = c.w;
        sum_eps += c.eps_log_d;
        sum_w += c.w;
    }
    CHECK(eps * evolve_from_empty_log(logd, 6)(1, 1) == doctest::Approx(sum_eps).epsilon(1e-12));
    CHECK(tropical_evolve(w, 6)(1, 1) == doctest::Approx(sum_w).epsilon(1e-12));
}

TEST_CASE("tropical limit: envelope holds and distance shrinks") {
    const auto p = homogeneous(4, 4, 1.0);
    const std::vector<double> eps{0.5, 0.2, 0.1, 0.05};
    const auto r = tropical_limit_run(p, 4, 4, eps, 400, 3);
    REQUIRE(r.rows.size() == 4);
    for (const auto& row : r.rows) CHECK(row.envelope_violations == 0);
    CHECK(r.decreasing());
    CHECK(r.rows.back().mean_sup < r.rows.front().mean_sup);

    const auto a = tropical_limit_run(p, 4, 4, eps, 100, 3, 1);
    const auto b = tropical_limit_run(p, 4, 4, eps, 100, 3, 3);
    CHECK(a.rows[2].mean_sup == b.rows[2].mean_sup);

    CHECK_THROWS_AS(tropical_limit_run(p, 4, 4, {0.1, 0.2}, 10, 1), ContractError);
}

TEST_CASE("one-row Wishart is a gamma sum") {
    const auto p = homogeneous(3, 1, 1.0);
    std::vector<double> x;
    for (std::size_t r = 0; r < 20000; ++r) {
        RngStream rng(4, r);
        x.push_back(wishart_top_eigenvalue(p, 3, 1, rng));
    }
    CHECK(stats::ks_test(x, [](double v) { return boost::math::gamma_p(3.0, v); }).p_value > 0.01);
}

TEST_CASE("top eigenvalue against last passage time") {
    const auto hom = lue_compare(homogeneous(2, 2, 1.0), 2, 2, 40000, 5);
    CHECK(hom.p_value > 0.01);
    CHECK(hom.mean_eigen == doctest::Approx(hom.mean_lpp).epsilon(0.02));
    const auto inh = lue_compare(SolvableParams{{0.9, 1.2}, {-0.2, 0.1}}, 2, 2, 40000, 6);
    CHECK(inh.p_value > 0.01);
    const auto three = lue_compare(homogeneous(4, 3, 1.0), 4, 3, 20000, 7);
    CHECK(three.p_value > 0.01);
    CHECK_THROWS_AS(lue_compare(homogeneous(2, 4, 1.0), 2, 4, 1000, 1), SizeError);
}

TEST_CASE("closed-form density of the last passage pair") {
    const SolvableParams p{{0.9, 1.2}, {-0.2, 0.1}};
    CHECK(lpp_density(1.0, 2.0, p) == 0.0);
    CHECK(lpp_density(1.0, -0.1, p) == 0.0);
    for (double x1 : {0.1, 0.5, 2.0, 6.0})
        for (double x2 : {0.0, 0.05, 0.09}) CHECK(lpp_density(x1, x2, p) >= 0.0);
    const auto r = lpp_density_check(p, 100000, 8);
    CHECK(std::abs(r.normalization - 1.0) < 1e-6);
    CHECK(r.p_value > 0.01);
    CHECK(r.min_density_on_samples >= 0.0);
    CHECK(r.cells > 300);
    CHECK_THROWS_AS(lpp_density(1.0, 0.5, SolvableParams{{1.0, 1.0}, {0.1, 0.2}}), DomainError);
}

TEST_CASE("semi-discrete trend") {
    const auto one = semidiscrete_trend(1, {50, 400}, 2000, 9, 0, 200);
    REQUIRE(one.rows.size() == 2);
    const double n = 400.0;
    CHECK(one.rows[1].variance == doctest::Approx(n * trigamma(n)).epsilon(0.1));
    CHECK(one.jarque_bera_p > 0.01);
    CHECK(one.bm_variance == doctest::Approx(1.0).epsilon(0.1));

    const auto two = semidiscrete_trend(2, {3, 10, 200}, 4000, 10, 0, 1000);
    CHECK(two.rows[0].gap > two.rows[1].gap);
    CHECK(two.rows[1].gap > two.rows[2].gap);
    CHECK(two.gaps_shrinking);
    CHECK(two.rows[2].gap < 0.05);
}
