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

#include "grsk/specfun.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "grsk/errors.hpp"

namespace grsk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfLog2Pi = 0.91893853320467274178;  // log(2 pi)/2
constexpr double kShift = 16.0;

// B_{2k} / (2k (2k-1)), k = 1..10
constexpr double kStirling[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

cplx stirling(cplx z) {
    const cplx w = 1.0 / z;
    const cplx w2 = w * w;
    cplx series = 0.0;
    for (int k = 9; k >= 0; --k) series = series * w2 + kStirling[k];
    return (z - 0.5) * std::log(z) - z + kHalfLog2Pi + series * w;
}

bool is_pole(double re, double im) {
    return im == 0.0 && re <= 0.0 && re == std::floor(re);
}

}  // namespace

cplx log_gamma(cplx z) {
    if (is_pole(z.real(), z.imag()))
        throw PoleError("log_gamma: pole of Gamma", z.real());
    if (std::abs(z) >= kShift && z.real() > 0.0) return stirling(z);
    // Upward recurrence; the summed principal logs keep the phase continuous.
    cplx acc = 0.0;
    while (std::abs(z) < kShift || z.real() <= 0.0) {
        acc += std::log(z);
        z += 1.0;
    }
    return stirling(z) - acc;
}

double log_gamma(double x) {
    if (is_pole(x, 0.0)) throw PoleError("log_gamma: pole of Gamma", x);
    return boost::math::lgamma(x);
}

cplx rgamma(cplx z) {
    if (is_pole(z.real(), z.imag())) return 0.0;
    return std::exp(-log_gamma(z));
}

double digamma(double x) {
    if (!(x > 0.0)) throw DomainError("digamma: argument must be positive");
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double w = 1.0 / (x * x);
    const double series =
        w * (1.0 / 12 - w * (1.0 / 120 - w * (1.0 / 252 - w * (1.0 / 240 - w * (1.0 / 132 - w * (691.0 / 32760 - w / 12.0))))));
    return acc + std::log(x) - 0.5 / x - series;
}

double trigamma(double x) {
    if (!(x > 0.0)) throw DomainError("trigamma: argument must be positive");
    double acc = 0.0;
    while (x < 10.0) {
        acc += 1.0 / (x * x);
        x += 1.0;
    }
    const double w = 1.0 / (x * x);
    // 1/x + 1/(2x^2) + sum B_{2k} / x^{2k+1}
    const double series =
        w * (1.0 / 6 - w * (1.0 / 30 - w * (1.0 / 42 - w * (1.0 / 30 - w * (5.0 / 66 - w * (691.0 / 2730 - w * 7.0 / 6))))));
    return acc + 1.0 / x + 0.5 * w + series / x;
}

double sample_log_gamma(double shape, RngStream& rng) {
    if (!(shape > 0.0)) throw DomainError("sample_gamma: shape must be positive");
    // Marsaglia-Tsang squeeze; shapes below one use the U^{1/shape} boost,
    // added in log space.
    double boost = 0.0;
    double a = shape;
    if (a < 1.0) {
        boost = std::log(rng.uniform()) / a;
        a += 1.0;
    }
    const double d = a - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = rng.normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2 || std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v)))
            return std::log(d) + std::log(v) + boost;
    }
}

double sample_gamma(double shape, RngStream& rng) { return std::exp(sample_log_gamma(shape, rng)); }

double sample_inverse_gamma(double theta, RngStream& rng) {
    return std::exp(-sample_log_gamma(theta, rng));
}

double sample_exponential(double rate, RngStream& rng) {
    if (!(rate > 0.0)) throw DomainError("sample_exponential: rate must be positive");
    return -std::log(rng.uniform()) / rate;
}

double inverse_gamma_logpdf(double x, double theta) {
    if (!(theta > 0.0)) throw DomainError("inverse_gamma_logpdf: theta must be positive");
    if (!(x > 0.0)) throw DomainError("inverse_gamma_logpdf: x must be positive");
    return -log_gamma(theta) - (theta + 1.0) * std::log(x) - 1.0 / x;
}

double inverse_gamma_cdf(double x, double theta) {
    if (!(theta > 0.0)) throw DomainError("inverse_gamma_cdf: theta must be positive");
    if (x <= 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    return boost::math::gamma_q(theta, 1.0 / x);
}

cplx sklyanin_density(std::span<const cplx> lambda) {
    const std::size_t n = lambda.size();
    cplx log_prod = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            if (j == k) continue;
            const cplx d = lambda[j] - lambda[k];
            if (is_pole(d.real(), d.imag())) return 0.0;
            log_prod -= log_gamma(d);
        }
    double log_fact = 0.0;
    for (std::size_t i = 2; i <= n; ++i) log_fact += std::log(static_cast<double>(i));
    const cplx two_pi_i(0.0, 2.0 * kPi);
    return std::exp(log_prod - log_fact) / std::pow(two_pi_i, static_cast<int>(n));
}

}  // namespace grsk
