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

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "grsk/arrays.hpp"
#include "grsk/params.hpp"
#include "grsk/rng.hpp"
#include "grsk/specfun.hpp"

// Densities are taken against prod dx/x throughout.

namespace grsk {

struct KernelContext {
    SolvableParams params;
    std::size_t n = 1;  // time index, 1-based
    std::size_t N = 1;

    KernelContext(SolvableParams p, std::size_t n_, std::size_t N_);
    double gamma(std::size_t j) const { return params.gamma(n, j); }
};

struct WeightedSample {
    std::vector<double> state;
    double weight = 1.0;
};

struct WeightedPattern {
    TriangularArray state;
    double weight = 1.0;
    double log_weight = 0.0;
};

/// Jump part times the killing factor prod exp(-ytilde_{i+1} / y_i).
double P_density(std::span<const double> y, std::span<const double> ytilde, const KernelContext& ctx);
double P_log_density(std::span<const double> y, std::span<const double> ytilde, const KernelContext& ctx);
/// Independent multiplicative jumps; weight is the killing factor.
WeightedSample P_sample(std::span<const double> y, const KernelContext& ctx, RngStream& rng);

/// Lambda^k(y, dx), |y| = k, |x| = k-1.
double Lambda_density(std::span<const double> y, std::span<const double> x, std::size_t k, std::span<const double> theta);
/// Zero unless the bottom row of z equals y.
double K_density(std::span<const double> y, const TriangularArray& z, std::span<const double> theta);

/// Deterministic row update given the fresh weight a = a_{k,1}; x, y, xt are rows k-1, k and the new row k-1.
std::vector<double> L_apply(std::span<const double> x, std::span<const double> y, std::span<const double> xt, double a);
std::vector<double> L_push(std::span<const double> x, std::span<const double> y, std::span<const double> xt,
                           double gamma, RngStream& rng);
/// Density of the first coordinate when the rest matches L_apply; zero otherwise.
double L_density(std::span<const double> x, std::span<const double> y, std::span<const double> xt,
                 std::span<const double> yt, double gamma);

/// One step of the array chain: fresh inverse-gamma word inserted into z.
TriangularArray Pi_step(const TriangularArray& z, const KernelContext& ctx, RngStream& rng);
/// Same step as a composition of row updates; consumes the same draws as Pi_step.
TriangularArray Pi_step_rows(const TriangularArray& z, const KernelContext& ctx, RngStream& rng);

enum class EigenMode { W, PsiRatio };

struct EigenReport {
    cplx estimate = 0.0;
    cplx predicted = 0.0;
    double std_error = 0.0;
    double z_score = 0.0;
    std::size_t n_replicas = 0;
    std::uint64_t seed = 0;
    bool inconclusive = false;
};

/// E[killing * prod (yt/y)^theta Psi_lambda(yt)/Psi_lambda(y)] under P_sample against
/// prod_j Gamma(theta_hat_n + lambda_j) / Gamma(gamma_j). Mode W uses lambda = theta.
EigenReport eigenfunction_check(std::span<const double> y, const KernelContext& ctx, EigenMode mode,
                                std::span<const cplx> lambda, std::size_t replicas, std::uint64_t seed,
                                unsigned threads = 0);

using PairTestFunction = std::function<double(std::span<const double> x, std::span<const double> y)>;

struct IntertwiningResult {
    double lhs = 0.0;
    double rhs = 0.0;
    double diff = 0.0;
    double est_error = 0.0;
    bool tolerance_warning = false;
};

/// Both sides of P Lambda = Lambda R at N = 2 against g(z^1, z^2).
IntertwiningResult two_row_intertwining_check(std::span<const double> y, const KernelContext& ctx,
                                              const PairTestFunction& g, double rel_tol = 1e-6);

enum class KbarMethod { Importance, Metropolis };

struct KbarSampler {
    /// Importance: weights average to w_theta(y). Metropolis: unit weights, one
    /// chain per call sequence.
    KbarSampler(std::span<const double> y, std::span<const double> theta, KbarMethod method = KbarMethod::Importance);
    ~KbarSampler();
    KbarSampler(KbarSampler&&) noexcept;
    KbarSampler& operator=(KbarSampler&&) noexcept;

    WeightedPattern draw(RngStream& rng);
    /// Log of w_theta(y) at the maximizer scale; weights are exp(log_weight).
    double log_peak() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Effective sample size of a set of importance weights.
double effective_sample_size(std::span<const double> weights);

}  // namespace grsk
