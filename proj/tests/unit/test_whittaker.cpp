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

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <random>
#include <vector>

#include "grsk/errors.hpp"
#include "grsk/whittaker.hpp"

using namespace grsk;

namespace {

// Psi at N = 2 through the Macdonald function.
double psi2(double l1, double l2, double y1, double y2) {
    return 2.0 * std::pow(y1 * y2, -0.5 * (l1 + l2)) * boost::math::cyl_bessel_k(l1 - l2, 2.0 * std::sqrt(y2 / y1));
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

using GK = boost::math::quadrature::gauss_kronrod<double, 31>;

}  // namespace

TEST_CASE("single row is a power") {
    for (double th : {-1.3, 0.0, 0.7})
        for (double y : {0.2, 1.0, 5.0}) {
            const std::vector<cplx> l{th};
            const std::vector<double> yy{y};
            CHECK(rel(whittaker_eval(l, yy).value(), std::pow(y, -th)) < 1e-14);
        }
}

TEST_CASE("two rows match the Macdonald function") {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> th(-1.5, 1.5), ly(-3.0, 3.0);
    for (int k = 0; k < 20; ++k) {
        const double a = th(gen), b = th(gen);
        const std::vector<cplx> l{a, b};
        const std::vector<double> y{std::exp(ly(gen)), std::exp(ly(gen))};
        const auto v = whittaker_eval(l, y);
        CHECK(v.converged);
        CHECK(rel(v.value(), psi2(a, b, y[0], y[1])) < 1e-8);
    }
}

TEST_CASE("imaginary spectral parameters give real values") {
    const std::vector<cplx> l{cplx(0.0, 0.65), cplx(0.0, -0.65)};
    const std::vector<double> y{0.7, 1.6};
    const auto v = whittaker_eval(l, y).value();
    CHECK(std::abs(v.imag()) < 1e-10 * std::abs(v.real()));
    CHECK(v.real() > 0.0);
}

TEST_CASE("reflection") {
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> th(-0.8, 0.8), ly(-1.5, 1.5);
    for (std::size_t N : {2u, 3u})
        for (int k = 0; k < 3; ++k) {
            std::vector<cplx> l(N), ml(N);
            std::vector<double> y(N);
            for (std::size_t i = 0; i < N; ++i) {
                l[i] = th(gen);
                ml[i] = -l[i];
                y[i] = std::exp(ly(gen));
            }
            const auto a = whittaker_eval(l, y), b = whittaker_eval(ml, reflect(y));
            CHECK(rel(a.value(), b.value()) < 1e-8);
        }
}

TEST_CASE("symmetric in the spectral parameter") {
    const std::vector<double> y{0.8, 1.9, 0.5};
    const std::vector<cplx> a{0.2, -0.5, 0.35}, b{0.35, 0.2, -0.5}, c{-0.5, 0.35, 0.2};
    const auto va = whittaker_eval(a, y).value();
    CHECK(rel(whittaker_eval(b, y).value(), va) < 1e-8);
    CHECK(rel(whittaker_eval(c, y).value(), va) < 1e-8);
    CHECK(va.real() > 0.0);
}

TEST_CASE("row recursion agrees with the full pattern integral") {
    std::mt19937_64 gen(9);
    std::uniform_real_distribution<double> th(-0.7, 0.7), ly(-1.0, 1.0);
    WhittakerOptions direct, rec;
    direct.method = WhittakerMethod::Direct;
    rec.method = WhittakerMethod::Recursive;
    for (int k = 0; k < 5; ++k) {
        const std::vector<cplx> l{th(gen), th(gen), th(gen)};
        const std::vector<double> y{std::exp(ly(gen)), std::exp(ly(gen)), std::exp(ly(gen))};
        CHECK(rel(whittaker_eval(l, y, rec).value(), whittaker_eval(l, y, direct).value()) < 1e-5);
    }
}

TEST_CASE("Lambda kernel integrates to w") {
    // Two rows: w of a single row is 1.
    const std::vector<double> th{0.45, -0.3};
    const std::vector<cplx> thc{0.45, -0.3};
    const std::vector<double> y{1.3, 0.6};
    const double lhs = GK::integrate(
        [&](double s) {
            const std::vector<double> x{std::exp(s)};
            return std::exp(lambda_kernel_log_density(thc, y, x).real());
        },
        -40.0, 40.0, 15, 1e-12);
    const double w2 = std::pow(y[0], th[0]) * std::pow(y[1], th[1]) * psi2(th[0], th[1], y[0], y[1]);
    CHECK(std::abs(lhs / w2 - 1.0) < 1e-9);
    CHECK(std::abs(w_function(th, y).value().real() / w2 - 1.0) < 1e-8);

    // Three rows against nested Macdonald functions.
    const std::vector<double> th3{0.3, -0.2, 0.5};
    const std::vector<cplx> th3c{0.3, -0.2, 0.5};
    const std::vector<double> y3{0.9, 1.4, 0.7};
    const double lhs3 = GK::integrate(
        [&](double s0) {
            return GK::integrate(
                [&](double s1) {
                    const std::vector<double> x{std::exp(s0), std::exp(s1)};
                    const double w = std::pow(x[0], th3[0]) * std::pow(x[1], th3[1]) * psi2(th3[0], th3[1], x[0], x[1]);
                    return std::exp(lambda_kernel_log_density(th3c, y3, x).real()) * w;
                },
                -30.0, 30.0, 15, 1e-10);
        },
        -30.0, 30.0, 15, 1e-10);
    CHECK(std::abs(lhs3 / w_function(th3, y3).value().real() - 1.0) < 1e-6);
}

TEST_CASE("Lambda kernel rejects bad input") {
    const std::vector<cplx> th{0.1, 0.2};
    const std::vector<double> y{1.0, 1.0};
    CHECK_THROWS_AS(lambda_kernel_log_density(th, y, std::vector<double>{1.0, 2.0}), ContractError);
    CHECK_THROWS_AS(lambda_kernel_log_density(th, y, std::vector<double>{-1.0}), DomainError);
    CHECK_THROWS_AS(whittaker_eval(th, std::vector<double>{1.0, -2.0}), DomainError);
}

TEST_CASE("Monte Carlo estimate is consistent") {
    WhittakerOptions mc;
    mc.method = WhittakerMethod::MonteCarlo;
    mc.mc_samples = 100000;
    const std::vector<cplx> l{0.2, -0.5, 0.35};
    const std::vector<double> y{0.8, 1.9, 0.5};
    const auto a = whittaker_eval(l, y, mc), b = whittaker_eval(l, y);
    CHECK(rel(a.value(), b.value()) < 5.0 * a.rel_error + 1e-12);
    CHECK(a.method != b.method);
}

TEST_CASE("integral identity at two rows") {
    const std::vector<cplx> lam{-0.3, -0.6}, nu{-0.4, -0.2};
    const auto r = bump_stade(1.0, lam, nu);
    CHECK(r.converged);
    CHECK(r.rel_diff < 1e-6);
    // homogeneity in s
    const auto r2 = bump_stade_rhs(2.5, lam, nu);
    CHECK(rel(r2, r.rhs * std::pow(2.5, -1.5)) < 1e-13);
    const std::vector<cplx> lp{0.3, 0.6}, np{0.4, 0.2};
    const auto p = bump_stade(0.7, lp, np, true);
    CHECK(p.rel_diff < 1e-6);
    CHECK_THROWS_AS(bump_stade(1.0, lp, np), DomainError);
}

TEST_CASE("integral identity at one row") {
    const std::vector<cplx> lam{-0.45}, nu{-0.3};
    CHECK(bump_stade(1.7, lam, nu).rel_diff < 1e-8);
    // Gamma(a) s^a
    CHECK(rel(bump_stade_rhs(1.7, lam, nu), std::tgamma(0.75) * std::pow(1.7, -0.75)) < 1e-12);
}

TEST_CASE("Plancherel") {
    const LogGaussianBump f1{{0.3}, 0.8, 1.0}, g1{{-0.2}, 0.6, 2.0};
    const auto a = plancherel_check(f1, g1, 1);
    CHECK(std::abs(a.rhs - a.lhs) < 1e-6 * std::abs(a.lhs));
    const LogGaussianBump f2{{0.3, -0.2}, 0.8, 1.0}, g2{{0.1, 0.4}, 0.9, 1.5};
    const auto b = plancherel_check(f2, g2, 2);
    CHECK(std::abs(b.rhs - b.lhs) < 1e-3 * std::abs(b.lhs));
    CHECK_THROWS_AS(plancherel_check(f2, g2, 3), SizeError);
}
