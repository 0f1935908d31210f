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

// Independent reference computations used only by the tests.

#include <cmath>
#include <vector>

#include "grsk/arrays.hpp"
#include "grsk/rng.hpp"

namespace oracle {

/// Array insertion written directly as the two-index recursion on (z, a):
/// a_{k,1} = b_k, z'_{ll} = a_{ll} z_{ll}, z'_{kl} = a_{kl}(z_{kl} + z'_{k-1,l}),
/// a_{k+1,l+1} = a_{k+1,l} z_{k+1,l} z'_{kl} / (z'_{k+1,l} z_{kl}).
template <class T>
std::pair<grsk::Pattern<T>, grsk::Pattern<T>> nyalg(const grsk::Pattern<T>& z, const std::vector<T>& b) {
    const std::size_t N = z.N();
    grsk::Pattern<T> zp(N, N), a(N, N);
    for (std::size_t k = 1; k <= N; ++k) a(k, 1) = b[k - 1];
    for (std::size_t l = 1; l <= N; ++l) {
        zp(l, l) = a(l, l) * z(l, l);
        for (std::size_t k = l + 1; k <= N; ++k) zp(k, l) = a(k, l) * (z(k, l) + zp(k - 1, l));
        for (std::size_t k = l; k + 1 <= N; ++k)
            a(k + 1, l + 1) = a(k + 1, l) * z(k + 1, l) * zp(k, l) / (zp(k + 1, l) * z(k, l));
    }
    return {zp, a};
}

/// Point-to-point polymer partition function from (1,1) to (n,k) by dynamic programming.
inline double polymer(const grsk::WeightMatrix& d, std::size_t n, std::size_t k) {
    std::vector<std::vector<double>> Z(n + 1, std::vector<double>(k + 1, 0.0));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= k; ++j) {
            const double from = (i == 1 && j == 1) ? 1.0 : Z[i - 1][j] + Z[i][j - 1];
            Z[i][j] = d(i, j) * from;
        }
    return Z[n][k];
}

inline grsk::WeightMatrix random_matrix(std::size_t n, std::size_t N, grsk::RngStream& rng, double lo = 0.1,
                                        double hi = 10.0) {
    grsk::WeightMatrix d(n, N);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= N; ++j) d(i, j) = lo * std::pow(hi / lo, rng.uniform());
    return d;
}

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace oracle
