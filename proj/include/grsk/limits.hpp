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
#include <vector>

#include "grsk/arrays.hpp"
#include "grsk/params.hpp"
#include "grsk/rng.hpp"
#include "grsk/tropical.hpp"

namespace grsk {

/// One coupled cell: w ~ Exp(gamma) and eps log d with d ~ InvGamma(eps gamma),
/// both from the same uniform by inverse CDF.
struct CoupledWeight {
    double w = 0.0;
    double eps_log_d = 0.0;
};
CoupledWeight coupled_weight(double u, double gamma, double eps);

struct TropicalDistance {
    double eps = 0.0;
    double mean_sup = 0.0;   // mean over replicas of max |F^eps - L|
    double std_error = 0.0;
    double max_sup = 0.0;
    std::size_t envelope_violations = 0;
};

struct TropicalReport {
    std::size_t n = 0, N = 0, replicas = 0;
    std::uint64_t seed = 0;
    std::vector<TropicalDistance> rows;
    bool decreasing() const;
};

/// Coupled eps log z^eps(n) against the (max,+) array for each eps (decreasing).
TropicalReport tropical_limit_run(const SolvableParams& params, std::size_t n, std::size_t N,
                                  const std::vector<double>& eps_list, std::size_t replicas, std::uint64_t seed,
                                  unsigned threads = 0);

/// Per-entry bound eps log|tuples| + coupling error, for l-sums and their differences.
TriangularArray tropical_envelope(const WeightMatrix& delta_abs, std::size_t n, double eps);

struct LueReport {
    std::size_t N = 0, n = 0, replicas = 0;
    std::uint64_t seed = 0;
    double ks_statistic = 0.0;
    double p_value = 0.0;
    double mean_eigen = 0.0;
    double mean_lpp = 0.0;
};

/// Top eigenvalue of A A^*, A_{ij} complex Gaussian with E|A_ij|^2 = 1/(theta_hat_j + theta_i),
/// against L_{N,1}(n) with Exp(theta_hat_i + theta_j) weights. N <= 3.
LueReport lue_compare(const SolvableParams& params, std::size_t n, std::size_t N, std::size_t replicas,
                      std::uint64_t seed, unsigned threads = 0);

/// Largest eigenvalue sample (exposed for tests).
double wishart_top_eigenvalue(const SolvableParams& params, std::size_t n, std::size_t N, RngStream& rng);

/// det(e^{-theta_i x_j}) det(e^{-theta_hat_i x_j}) / det(1/(theta_i + theta_hat_j)) for
/// x1 >= x2 >= 0, zero elsewhere. N = 2.
double lpp_density(double x1, double x2, const SolvableParams& params);

struct LppDensityReport {
    std::size_t replicas = 0;
    std::uint64_t seed = 0;
    double normalization = 0.0;  // by quadrature
    double chi_square = 0.0;
    int dof = 0;
    double p_value = 0.0;
    std::size_t cells = 0;
    std::size_t pooled_cells = 0;
    double min_density_on_samples = 0.0;
};
LppDensityReport lpp_density_check(const SolvableParams& params, std::size_t replicas, std::uint64_t seed,
                                   std::size_t bins = 20, unsigned threads = 0);

struct SemidiscreteRow {
    std::size_t n = 0;
    double mean = 0.0;
    double variance = 0.0;
    double gap = 0.0;  // |mean - Brownian mean|
};

struct SemidiscreteReport {
    std::size_t N = 0, replicas = 0;
    std::uint64_t seed = 0;
    std::vector<SemidiscreteRow> rows;
    double bm_mean = 0.0, bm_variance = 0.0;
    double jarque_bera_p = 0.0;  // of the largest-n sample
    bool gaps_shrinking = false;
};

/// log(n^n z_{N,1}(n)) - 1/2 with InvGamma(n) weights, against the Brownian
/// semi-discrete polymer discretized with bm_steps steps.
SemidiscreteReport semidiscrete_trend(std::size_t N, const std::vector<std::size_t>& n_list, std::size_t replicas,
                                      std::uint64_t seed, unsigned threads = 0, std::size_t bm_steps = 4000);

}  // namespace grsk
