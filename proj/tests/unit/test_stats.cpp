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
#include "grsk/rng.hpp"
#include "grsk/specfun.hpp"
#include "grsk/stats.hpp"

using namespace grsk;

TEST_CASE("kolmogorov tail values") {
    CHECK(stats::kolmogorov_q(0.1) == 1.0);
    CHECK(stats::kolmogorov_q(1.0) == doctest::Approx(0.26999967).epsilon(1e-6));
    CHECK(stats::kolmogorov_q(1.36) == doctest::Approx(0.0494).epsilon(1e-2));
}

TEST_CASE("ks accepts uniform data") {
    RngStream r(4, 0);
    std::vector<double> u(5000);
    for (auto& v : u) v = r.uniform();
    CHECK(stats::ks_test(u, [](double x) { return x; }).p_value > 0.01);
}

TEST_CASE("ks accepts inverse gamma against its cdf") {
    RngStream r(4, 1);
    std::vector<double> v(20000);
    for (auto& x : v) x = sample_inverse_gamma(2.3, r);
    CHECK(stats::ks_test(v, [](double x) { return inverse_gamma_cdf(x, 2.3); }).p_value > 0.01);
}

TEST_CASE("ks rejects a shifted distribution") {
    RngStream r(4, 2);
    std::vector<double> v(100000);
    for (auto& x : v) x = sample_inverse_gamma(2.3, r) * 1.05;
    CHECK(stats::ks_test(v, [](double x) { return inverse_gamma_cdf(x, 2.3); }).p_value < 1e-6);
}

TEST_CASE("ks needs enough samples") {
    std::vector<double> v(50, 0.5);
    CHECK_THROWS_AS(stats::ks_test(v, [](double x) { return x; }), ContractError);
}

TEST_CASE("two-sample ks") {
    RngStream r(6, 0);
    std::vector<double> a(20000), b(20000), c(20000);
    for (auto& x : a) x = r.normal();
    for (auto& x : b) x = r.normal();
    for (auto& x : c) x = r.normal() + 0.1;
    CHECK(stats::ks_two_sample(a, b).p_value > 0.01);
    CHECK(stats::ks_two_sample(a, c).p_value < 1e-6);
}

TEST_CASE("chi square survival") {
    CHECK(stats::chi_square_sf(3.841458820694124, 1.0) == doctest::Approx(0.05).epsilon(1e-9));
    CHECK(stats::chi_square_sf(0.0, 4.0) == 1.0);
}

TEST_CASE("rank statistics") {
    std::vector<double> a{3.0, 1.0, 2.0, 2.0};
    auto r = stats::ranks(a);
    CHECK(r == std::vector<double>{4.0, 1.0, 2.5, 2.5});
    std::vector<double> x{1, 2, 3, 4, 5}, y{2, 4, 8, 16, 32};
    CHECK(stats::spearman(x, y) == doctest::Approx(1.0));
    RngStream g(9, 0);
    std::vector<double> p(20000), q(20000), s(20000);
    for (std::size_t i = 0; i < p.size(); ++i) {
        p[i] = g.normal();
        q[i] = g.normal();
        s[i] = p[i] + 0.3 * g.normal();
    }
    CHECK(stats::rank_histogram_independence(p, q, 10).p_value > 0.01);
    CHECK(stats::rank_histogram_independence(p, s, 10).p_value < 1e-10);
}

TEST_CASE("jarque bera") {
    RngStream g(10, 0);
    std::vector<double> n(20000), e(20000);
    for (auto& x : n) x = g.normal();
    for (auto& x : e) x = -std::log(g.uniform());
    CHECK(stats::jarque_bera(n).p_value > 0.01);
    CHECK(stats::jarque_bera(e).p_value < 1e-10);
}

TEST_CASE("summary and slope") {
    std::vector<double> v{1.0, 2.0, 3.0, 4.0};
    auto s = stats::summarize(v);
    CHECK(s.mean == 2.5);
    CHECK(s.variance == doctest::Approx(5.0 / 3.0));
    CHECK(s.std_error == doctest::Approx(std::sqrt(5.0 / 12.0)));
    std::vector<double> x{0, 1, 2}, y{1, 3, 5};
    CHECK(stats::fit_slope(x, y) == doctest::Approx(2.0));
}
