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

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <numbers>

#include "grsk/errors.hpp"
#include "grsk/potential.hpp"
#include "grsk/quadrature.hpp"

using namespace grsk;

namespace {

// int_0^inf x^nu exp(-a x - b/x) dx/x
double bessel_integral(double nu, double a, double b) {
    return 2.0 * std::pow(b / a, 0.5 * nu) * boost::math::cyl_bessel_k(nu, 2.0 * std::sqrt(a * b));
}

Potential bessel_potential(double nu, double a, double b) {
    Potential p(1);
    p.linear[0] = nu;
    p.add_exp_diff(0, -1, std::log(a));
    p.add_exp_diff(-1, 0, std::log(b));
    return p;
}

}  // namespace

TEST_CASE("Gauss-Legendre rules") {
    for (std::size_t n : {1u, 2u, 5u, 16u, 40u}) {
        const auto& r = quad::gauss_legendre(n);
        double s = 0.0;
        for (double w : r.weights) s += w;
        CHECK(s == doctest::Approx(2.0).epsilon(1e-14));
        // exact through degree 2n-1
        double m = 0.0;
        for (std::size_t i = 0; i < n; ++i) m += r.weights[i] * std::pow(r.nodes[i], 2 * (n - 1));
        CHECK(m == doctest::Approx(2.0 / (2.0 * (n - 1) + 1.0)).epsilon(1e-13));
    }
    CHECK(&quad::gauss_legendre(16) == &quad::gauss_legendre(16));
    CHECK_THROWS_AS(quad::gauss_legendre(0), ContractError);
}

TEST_CASE("one-dimensional integrals") {
    CHECK(quad::integrate([](double x) { return std::exp(x); }, {0.0, 1.0}) == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
    auto c = quad::integrate_complex([](double x) { return std::exp(quad::cplx(0.0, x)); }, {0.0, std::numbers::pi});
    CHECK(c.real() == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(c.imag() == doctest::Approx(2.0).epsilon(1e-13));
    quad::QuadratureSpec s{{{-30.0, 30.0}}, 8, 64, quad::Method::Trapezoid};
    auto g = quad::integrate_tensor([](std::span<const double> x) { return quad::cplx(std::exp(-x[0] * x[0])); }, s);
    CHECK(g.real() == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
}

TEST_CASE("tensor grid and refinement") {
    quad::QuadratureSpec s{{{0.0, 1.0}, {0.0, 2.0}, {-1.0, 1.0}}, 6, 1};
    auto v = quad::integrate_tensor([](std::span<const double> x) { return quad::cplx(x[0] * x[1] * x[1] * std::cos(x[2])); }, s);
    CHECK(v.real() == doctest::Approx(0.5 * 8.0 / 3.0 * 2.0 * std::sin(1.0)).epsilon(1e-12));
    quad::QuadratureSpec a{{{0.0, 3.0}}, 4, 1};
    a.tolerance = 1e-12;
    auto e = quad::integrate_tensor_adaptive([](std::span<const double> x) { return quad::cplx(std::sqrt(x[0] + 0.01)); }, a, 10);
    CHECK(e.converged);
    CHECK(e.value.real() == doctest::Approx(2.0 / 3.0 * (std::pow(3.01, 1.5) - std::pow(0.01, 1.5))).epsilon(1e-10));
}

TEST_CASE("potential maximization and level box") {
    auto p = bessel_potential(0.4, 1.3, 0.7);
    auto mx = maximize(p, {3.0});
    CHECK(mx.grad_norm < 1e-8);
    std::vector<double> g, h;
    p.gradient_hessian(mx.argmax, g, h);
    CHECK(h[0] < 0.0);
    auto box = level_box(p, mx, 40.0);
    std::array<double, 1> lo{box[0].lo}, hi{box[0].hi};
    // Edges sit on the outer side of the level, within the bisection tolerance.
    for (const auto& x : {lo, hi}) {
        CHECK(p.real_value(x) <= mx.value - 40.0);
        CHECK(p.real_value(x) > mx.value - 40.1);
    }
}

TEST_CASE("Bessel integral by potential quadrature") {
    for (double nu : {0.0, 0.4, -1.7, 3.2})
        for (double a : {0.2, 1.3, 7.0}) {
            auto r = integrate_potential(bessel_potential(nu, a, 0.7), 1e-12);
            CHECK(r.converged);
            CHECK(r.value.real() == doctest::Approx(bessel_integral(nu, a, 0.7)).epsilon(1e-10));
        }
}

TEST_CASE("separable two-dimensional potential") {
    Potential p(2);
    p.linear = {0.3, -0.8};
    p.add_exp_diff(0, -1, 0.0);
    p.add_exp_diff(-1, 0, std::log(2.0));
    p.add_exp_diff(1, -1, std::log(0.5));
    p.add_exp_diff(-1, 1, std::log(3.0));
    auto s = integrate_potential_scaled(p, 1e-11);
    CHECK(s.converged);
    const double want = bessel_integral(0.3, 1.0, 2.0) * bessel_integral(-0.8, 0.5, 3.0);
    CHECK(std::exp(s.log_scale) * s.mantissa.real() == doctest::Approx(want).epsilon(1e-9));
}

TEST_CASE("coupled potential against nested one-dimensional quadrature") {
    // exp(a t1 + b t2 - e^{t1} - e^{t2 - t1} - e^{-t2})
    Potential p(2);
    p.linear = {0.5, -0.2};
    p.add_exp_diff(0, -1, 0.0);
    p.add_exp_diff(1, 0, 0.0);
    p.add_exp_diff(-1, 1, 0.0);
    auto r = integrate_potential(p, 1e-11);
    // inner integral over t2 is a Bessel integral with a = e^{-t1}, b = 1
    const double nested = quad::integrate(
        [](double t1) { return std::exp(0.5 * t1 - std::exp(t1)) * bessel_integral(-0.2, std::exp(-t1), 1.0); },
        {-40.0, 6.0}, 64, 20);
    CHECK(r.value.real() == doctest::Approx(nested).epsilon(1e-9));
}

TEST_CASE("complex linear part") {
    Potential p = bessel_potential(0.4, 1.3, 0.7);
    p.linear[0] = quad::cplx(0.4, 0.0);
    auto r0 = integrate_potential(p, 1e-12);
    p.linear[0] = quad::cplx(0.4, 1e-6);
    auto r1 = integrate_potential(p, 1e-12);
    CHECK(std::abs(r1.value.imag()) > 0.0);
    CHECK(std::abs(r1.value - r0.value) < 1e-4 * std::abs(r0.value));
}
