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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "grsk/params.hpp"
#include "grsk/stats.hpp"

namespace grsk {

/// Truncated vertical contour Re lambda_i = shift, |Im lambda_i| <= T.
/// Zero T or step means "choose from the decay rate / pole distance".
struct ContourSpec {
    double T = 0.0;
    double step = 0.0;
    double shift = 0.0;
    double target_tail = 1e-10;
};

struct ContourValue {
    double value = 0.0;
    double imag_residue = 0.0;
    double tail_bound = 0.0;
    double T = 0.0;
    double step = 0.0;
    std::size_t nodes = 0;  // per coordinate
    bool truncation_warning = false;
};

/// E[exp(-s z_{N,1}(n))] as a contour integral; N <= 2, params in gauge.
ContourValue laplace_contour(double s, std::size_t n, std::size_t N, const SolvableParams& params,
                             const ContourSpec& contour = {});

/// Density of the bottom row after n steps from the empty array (against prod dy/y). N <= 2, n >= N.
ContourValue mu_density_contour(std::span<const double> y, std::size_t n, std::size_t N,
                                const SolvableParams& params, const ContourSpec& contour = {});

/// Mass of the N=2 contour density over the box u_i = log y_i in [lo, hi].
struct DensityMass {
    double mass = 0.0;
    double min_value = 0.0;  // most negative grid value (round-off in the tails)
    std::size_t points = 0;
};
DensityMass mu_density_mass(std::size_t n, const SolvableParams& params, double lo, double hi,
                            std::size_t panels = 24, const ContourSpec& contour = {});

/// CDF of log y_1 under the N=2 contour density, tabulated at xs (same box conventions).
std::vector<double> mu_log_y1_cdf(std::size_t n, const SolvableParams& params, std::span<const double> xs,
                                  double lo, double hi, std::size_t panels = 24, const ContourSpec& contour = {});

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t replicas = 0;
    std::uint64_t seed = 0;
};

/// Polymer partition function sum over up-right paths of prod d_ij, 1 <= i <= n, j <= N.
double polymer_partition(std::span<const double> d, std::size_t n, std::size_t N);

/// Monte Carlo E[exp(-s z_{N,1}(n))].
McEstimate laplace_mc(double s, std::size_t n, std::size_t N, const SolvableParams& params, std::size_t replicas,
                      std::uint64_t seed, unsigned threads = 0);

/// Samples of z_{N,1}(n).
std::vector<double> sample_z_N1(std::size_t n, std::size_t N, const SolvableParams& params, std::size_t replicas,
                                std::uint64_t seed, unsigned threads = 0);

/// n = N closed form against prod dy/y; N <= 3.
double mu_NN_density(std::span<const double> y, std::size_t N, const SolvableParams& params);
/// Integral of mu_NN_density for N <= 2.
double mu_NN_mass(std::size_t N, const SolvableParams& params, double rel_tol = 1e-8);

struct KsReport {
    double statistic = 0.0;
    double p_value = 0.0;
    double shape = 0.0;
    std::size_t replicas = 0;
    std::uint64_t seed = 0;
};
/// z_{N,N}(N) against the inverse-gamma law with shape sum_i (theta_i + theta_hat_i).
KsReport z_NN_check(const SolvableParams& params, std::size_t replicas, std::uint64_t seed, unsigned threads = 0);

}  // namespace grsk
