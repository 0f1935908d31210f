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
#include <span>
#include <vector>

#include "grsk/arrays.hpp"

namespace grsk {

/// Free coordinates t_{k,l}, 1 <= l <= k < N, of an array whose bottom row is 0.
/// Stored in pattern_index order.
struct EntranceArray {
    std::size_t N = 0;
    std::vector<double> t;
    double M = 0.0;

    explicit EntranceArray(std::size_t N_ = 0);

    double& operator()(std::size_t k, std::size_t l);
    double operator()(std::size_t k, std::size_t l) const;  // 0 on the bottom row

    static double rho(std::size_t k, std::size_t l) { return 0.5 * (static_cast<double>(k) - 1.0) - static_cast<double>(l) + 1.0; }

    /// z_{k,l} = exp(t_{k,l} - M rho_{k,l}), bottom row included.
    TriangularArray initial_array() const;
};

/// Pattern potential with the bottom row pinned at 0.
double F_theta(const EntranceArray& t, std::span<const double> theta);

struct EntranceMaximum {
    EntranceArray t0;
    double value = 0.0;
    double grad_norm = 0.0;
    int iterations = 0;
};
/// Maximizer of F_0 by Newton ascent from t = 0; throws ConvergenceError.
EntranceMaximum maximize_F0(std::size_t N, double tol = 1e-12);

/// alpha^T Hess F_0(t) alpha from the Newton Hessian.
double hessian_form(const EntranceArray& t, std::span<const double> alpha);
/// Same quadratic form summed edge by edge: -sum (alpha_v - alpha_u)^2 exp(t_v - t_u).
double hessian_form_edges(const EntranceArray& t, std::span<const double> alpha);

struct EntranceEntry {
    double M = 0.0;
    std::size_t m = 0;
    std::size_t k = 0;
    double value = 0.0;  // z_{k,m+1}(m)
};

struct EntranceLimitReport {
    std::vector<EntranceEntry> entries;
    /// Per m with m+2 <= N: least-squares slope of log z_{k,m+1}(m) against M,
    /// for the slowest decaying k > m+1.
    std::vector<double> leading_slopes;
    /// Per m: all k > m+1 slopes, k increasing.
    std::vector<std::vector<double>> slopes;
    /// max_m |z_{m+1,m+1}(m) - 1| at the largest M.
    double diagonal_error = 0.0;
};

/// Tracks z_{k,m+1}(m) for m = 0..min(n, N)-1 from the entrance array at t0, inserting rows of d.
EntranceLimitReport entrance_limit_check(std::size_t N, std::size_t n, std::span<const double> M_list,
                                         const WeightMatrix& d);

}  // namespace grsk
