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
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "grsk/quadrature.hpp"
#include "grsk/rng.hpp"

namespace grsk {

using cplx = std::complex<double>;

/// exp(sum_i coef_i t_i + shift), coefficients sparse.
struct ExpTerm {
    std::vector<std::pair<int, double>> coef;
    double shift = 0.0;
    double weight = 1.0;
};

/// Phi(t) = constant + sum_i linear_i t_i - sum_e weight_e exp(...).
///
/// The real part is concave; the imaginary part of `linear` only adds a
/// phase. Used for all pattern-type integrals in log variables.
class Potential {
public:
    explicit Potential(int dim) : linear(dim, 0.0), dim_(dim) {}

    int dim() const { return dim_; }

    cplx value(std::span<const double> t) const;
    double real_value(std::span<const double> t) const;
    void gradient_hessian(std::span<const double> t, std::vector<double>& g, std::vector<double>& h) const;

    /// Adds weight * exp(t_u - t_v + shift); index -1 means "absent".
    void add_exp_diff(int u, int v, double shift, double weight = 1.0);

    std::vector<cplx> linear;
    cplx constant = 0.0;
    std::vector<ExpTerm> terms;

private:
    int dim_;
};

/// Phi(t) - Re Phi(t0) evaluated term by term around t0, so that large
/// exponentials that nearly cancel keep full relative accuracy.
class CenteredPotential {
public:
    CenteredPotential(const Potential& p, std::span<const double> t0);

    cplx value(std::span<const double> t) const;

private:
    const Potential* p_;
    std::vector<double> t0_;
    std::vector<double> scale_;  // weight * exp(exponent at t0) per term
    double imag0_;
};

struct MaximizeResult {
    std::vector<double> argmax;
    double value = 0.0;
    double grad_norm = 0.0;
    int iterations = 0;
};

/// Newton ascent with backtracking on the real part. With fixed_index >= 0 that
/// coordinate stays at its starting value. Throws ConvergenceError on failure and
/// UnboundedError when iterates escape.
MaximizeResult maximize(const Potential& p, std::vector<double> start, double tol = 1e-10,
                        int fixed_index = -1);

/// Coordinate extents of {Re Phi >= max - drop}.
std::vector<quad::Interval> level_box(const Potential& p, const MaximizeResult& mx, double drop);

struct PotentialIntegral {
    cplx value = 0.0;      // integral of exp(Phi)
    double error = 0.0;    // difference between the last two refinements
    bool converged = false;
    std::vector<quad::Interval> box;
};

/// Integral of exp(Phi(t)) dt over R^dim by composite Gauss-Legendre on the
/// level box. Result is scaled back by exp(max) internally to avoid overflow.
PotentialIntegral integrate_potential(const Potential& p, double rel_tol = 1e-10, double drop = 40.0,
                                      std::size_t nodes = 16, std::size_t panels = 2, int max_doublings = 4);

/// Same, but returns log of the modulus scale separately: value = exp(log_scale) * mantissa.
struct ScaledIntegral {
    double log_scale = 0.0;
    cplx mantissa = 0.0;
    double rel_error = 0.0;
    bool converged = false;
};
ScaledIntegral integrate_potential_scaled(const Potential& p, double rel_tol = 1e-10, double drop = 40.0,
                                          std::size_t nodes = 16, std::size_t panels = 2, int max_doublings = 4);

/// Same, with an extra factor multiplying exp(Phi) inside the integral.
ScaledIntegral integrate_potential_scaled(const Potential& p, const std::function<cplx(std::span<const double>)>& factor,
                                          double rel_tol = 1e-10, double drop = 40.0, std::size_t nodes = 16,
                                          std::size_t panels = 2, int max_doublings = 4);

/// Gaussian fitted at the maximizer, covariance widen^2 (-Hessian)^{-1}.
class GaussianProposal {
public:
    GaussianProposal(const Potential& p, const MaximizeResult& mx, double widen = 1.25);

    int dim() const { return static_cast<int>(mean_.size()); }
    const std::vector<double>& mean() const { return mean_; }
    /// Draws a point and returns its log-density.
    double draw(RngStream& rng, std::vector<double>& x) const;
    double log_density(std::span<const double> x) const;

private:
    std::vector<double> mean_;
    std::vector<std::vector<double>> chol_;  // -H = C C^T
    double widen_;
    double log_norm_;
};

struct ImportanceIntegral {
    double log_scale = 0.0;
    cplx mantissa = 0.0;
    double rel_error = 0.0;  // standard error / |estimate|
    double ess = 0.0;        // effective sample size
    std::size_t samples = 0;
};
ImportanceIntegral integrate_potential_mc(const Potential& p, std::size_t samples, RngStream& rng, double widen = 1.25);

}  // namespace grsk
