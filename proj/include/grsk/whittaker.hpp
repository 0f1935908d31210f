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

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "grsk/arrays.hpp"
#include "grsk/potential.hpp"

namespace grsk {

/// lambda in C^N.
struct SpectralPoint {
    std::vector<cplx> lambda;

    std::size_t N() const { return lambda.size(); }
    bool purely_imaginary(double tol = 0.0) const;
};

/// Position of the free coordinate t_{k,l} (1 <= l <= k < N) in a pattern potential.
inline int pattern_index(std::size_t k, std::size_t l) { return static_cast<int>(k * (k - 1) / 2 + l - 1); }
inline int pattern_dim(std::size_t N) { return static_cast<int>(N * (N - 1) / 2); }

/// Log-integrand over a pattern with bottom row pinned to u:
///   sum_k theta_k (R_{k-1} - R_k) - sum_{l<=k<N} (e^{t_{kl}-t_{k+1,l}} + e^{t_{k+1,l+1}-t_{kl}}),
/// R_k the k-th row sum. Its integral over the free coordinates is Psi_theta(e^u).
Potential pattern_potential(std::span<const cplx> theta, std::span<const double> u);

/// Same integrand evaluated at a full array of logs (bottom row included).
cplx pattern_log_density(std::span<const cplx> theta, const Pattern<double>& t);

/// Psi = exp(log_scale) * mantissa.
struct WhittakerValue {
    double log_scale = 0.0;
    cplx mantissa = 0.0;
    double rel_error = 0.0;
    bool converged = false;
    std::string method;

    cplx value() const { return std::exp(log_scale) * mantissa; }
};

enum class WhittakerMethod { Auto, Direct, Recursive, MonteCarlo };

struct WhittakerOptions {
    WhittakerMethod method = WhittakerMethod::Auto;
    double rel_tol = 1e-10;
    double drop = 40.0;
    std::size_t nodes = 16;
    std::size_t panels = 2;
    int max_doublings = 4;
    std::size_t mc_samples = 200000;
    std::uint64_t seed = 1;
};

constexpr std::size_t kMaxQuadratureN = 3;

WhittakerValue whittaker_eval(std::span<const cplx> lambda, std::span<const double> y,
                              const WhittakerOptions& opt = {});
inline WhittakerValue whittaker_eval(const SpectralPoint& lambda, std::span<const double> y,
                                     const WhittakerOptions& opt = {}) {
    return whittaker_eval(lambda.lambda, y, opt);
}
WhittakerValue whittaker_eval_real(std::span<const double> theta, std::span<const double> y,
                                   const WhittakerOptions& opt = {});

/// w_theta(y) = prod y_i^{theta_i} Psi_theta(y).
WhittakerValue w_function(std::span<const double> theta, std::span<const double> y, const WhittakerOptions& opt = {});

/// Log-density of Lambda^k_theta(y, dx) against prod dx/x; y has length k, x length k-1.
cplx lambda_kernel_log_density(std::span<const cplx> theta, std::span<const double> y, std::span<const double> x);

/// y'_i = 1 / y_{N-i+1}.
std::vector<double> reflect(std::span<const double> y);

/// Whittaker integral identity for N <= 2. With prime set the weight is exp(-s/y_N).
struct BumpStadeResult {
    cplx lhs = 0.0;
    cplx rhs = 0.0;
    double rel_diff = 0.0;
    double est_error = 0.0;
    bool converged = false;
};
cplx bump_stade_rhs(double s, std::span<const cplx> lambda, std::span<const cplx> nu, bool prime = false);
BumpStadeResult bump_stade_lhs(double s, std::span<const cplx> lambda, std::span<const cplx> nu, bool prime = false,
                               double rel_tol = 1e-8);
BumpStadeResult bump_stade(double s, std::span<const cplx> lambda, std::span<const cplx> nu, bool prime = false,
                           double rel_tol = 1e-8);

/// f(y) = amplitude * exp(-|log y - center|^2 / (2 width^2)).
struct LogGaussianBump {
    std::vector<double> center;
    double width = 1.0;
    double amplitude = 1.0;

    double operator()(std::span<const double> u) const;
};

struct PlancherelResult {
    double lhs = 0.0;
    cplx rhs = 0.0;
    double diff = 0.0;
    double est_error = 0.0;
};
PlancherelResult plancherel_check(const LogGaussianBump& f, const LogGaussianBump& g, std::size_t N);

}  // namespace grsk
