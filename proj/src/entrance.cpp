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

#include "grsk/entrance.hpp"

#include <algorithm>
#include <cmath>

#include "grsk/errors.hpp"
#include "grsk/insertion.hpp"
#include "grsk/potential.hpp"
#include "grsk/stats.hpp"
#include "grsk/whittaker.hpp"

namespace grsk {

namespace {

Potential potential_at_zero(std::size_t N, std::span<const double> theta) {
    if (theta.size() != N) throw ContractError("entrance: theta must have length N");
    std::vector<cplx> th(theta.begin(), theta.end());
    const std::vector<double> u(N, 0.0);
    return pattern_potential(th, u);
}

void check_alpha(const EntranceArray& t, std::span<const double> alpha) {
    if (alpha.size() != t.t.size()) throw ContractError("hessian_form: alpha must match the free coordinates");
}

}  // namespace

EntranceArray::EntranceArray(std::size_t N_) : N(N_), t(static_cast<std::size_t>(pattern_dim(N_)), 0.0) {}

double& EntranceArray::operator()(std::size_t k, std::size_t l) {
    if (k >= N || l < 1 || l > k) throw ContractError("EntranceArray: index outside the free coordinates");
    return t[static_cast<std::size_t>(pattern_index(k, l))];
}

double EntranceArray::operator()(std::size_t k, std::size_t l) const {
    if (k == N && l >= 1 && l <= N) return 0.0;
    if (k >= N || l < 1 || l > k) throw ContractError("EntranceArray: index outside the array");
    return t[static_cast<std::size_t>(pattern_index(k, l))];
}

TriangularArray EntranceArray::initial_array() const {
    TriangularArray z(N, N);
    for (std::size_t k = 1; k <= N; ++k)
        for (std::size_t l = 1; l <= k; ++l) z(k, l) = std::exp((*this)(k, l) - M * rho(k, l));
    return z;
}

double F_theta(const EntranceArray& t, std::span<const double> theta) {
    return potential_at_zero(t.N, theta).real_value(t.t);
}

EntranceMaximum maximize_F0(std::size_t N, double tol) {
    if (N == 0) throw ContractError("maximize_F0: N must be positive");
    EntranceMaximum out{EntranceArray(N)};
    if (N == 1) return out;
    const std::vector<double> zero(N, 0.0);
    const auto mx = maximize(potential_at_zero(N, zero), std::vector<double>(out.t0.t.size(), 0.0), tol);
    out.t0.t = mx.argmax;
    out.value = mx.value;
    out.grad_norm = mx.grad_norm;
    out.iterations = mx.iterations;
    return out;
}

double hessian_form(const EntranceArray& t, std::span<const double> alpha) {
    check_alpha(t, alpha);
    const std::vector<double> zero(t.N, 0.0);
    std::vector<double> g, h;
    potential_at_zero(t.N, zero).gradient_hessian(t.t, g, h);
    const std::size_t d = alpha.size();
    double q = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) q += alpha[i] * h[i * d + j] * alpha[j];
    return q;
}

double hessian_form_edges(const EntranceArray& t, std::span<const double> alpha) {
    check_alpha(t, alpha);
    auto a = [&](std::size_t k, std::size_t l) {
        return k == t.N ? 0.0 : alpha[static_cast<std::size_t>(pattern_index(k, l))];
    };
    double q = 0.0;
    for (std::size_t k = 1; k < t.N; ++k)
        for (std::size_t l = 1; l <= k; ++l) {
            const double d1 = a(k, l) - a(k + 1, l), d2 = a(k + 1, l + 1) - a(k, l);
            q -= d1 * d1 * std::exp(t(k, l) - t(k + 1, l));
            q -= d2 * d2 * std::exp(t(k + 1, l + 1) - t(k, l));
        }
    return q;
}

EntranceLimitReport entrance_limit_check(std::size_t N, std::size_t n, std::span<const double> M_list,
                                         const WeightMatrix& d) {
    if (N < 1 || d.cols() != N) throw ContractError("entrance_limit_check: weights must have N columns");
    const std::size_t steps = std::min(n, N);
    if (steps > 0 && d.rows() < steps - 1) throw ContractError("entrance_limit_check: too few weight rows");
    if (M_list.empty()) throw ContractError("entrance_limit_check: empty M list");
    for (std::size_t i = 1; i < M_list.size(); ++i)
        if (!(M_list[i] > M_list[i - 1])) throw ContractError("entrance_limit_check: M list must increase");

    EntranceArray t = maximize_F0(N).t0;
    EntranceLimitReport rep;
    // logs[m][k - m - 1][iM]
    std::vector<std::vector<std::vector<double>>> logs(steps);
    for (std::size_t m = 0; m < steps; ++m) logs[m].assign(N - m, std::vector<double>(M_list.size()));
    for (std::size_t iM = 0; iM < M_list.size(); ++iM) {
        t.M = M_list[iM];
        TriangularArray z = t.initial_array();
        for (std::size_t m = 0; m < steps; ++m) {
            if (m > 0) z = insert_row(z, d.row_word(m)).z;
            for (std::size_t k = m + 1; k <= N; ++k) {
                rep.entries.push_back({t.M, m, k, z(k, m + 1)});
                logs[m][k - m - 1][iM] = std::log(z(k, m + 1));
            }
            if (iM + 1 == M_list.size())
                rep.diagonal_error = std::max(rep.diagonal_error, std::abs(z(m + 1, m + 1) - 1.0));
        }
    }
    if (M_list.size() >= 2) {
        for (std::size_t m = 0; m < steps; ++m) {
            if (m + 2 > N) break;
            std::vector<double> s;
            for (std::size_t k = m + 2; k <= N; ++k) s.push_back(stats::fit_slope(M_list, logs[m][k - m - 1]));
            rep.leading_slopes.push_back(*std::max_element(s.begin(), s.end()));
            rep.slopes.push_back(std::move(s));
        }
    }
    return rep;
}

}  // namespace grsk
