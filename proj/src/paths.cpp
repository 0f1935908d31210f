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

#include "grsk/paths.hpp"

#include <cmath>
#include <limits>

#include "grsk/linalg.hpp"

namespace grsk {

namespace {

struct TupleWalker {
    std::size_t n, k, l;
    const std::function<void(const std::vector<LatticePath>&)>& visit;
    std::vector<std::vector<char>> used;  // [i][j], 1-based
    std::vector<LatticePath> paths;
    std::size_t count = 0;

    void start_path(std::size_t r) {
        if (r > l) {
            if (++count > kMaxTuples) throw SizeError("path enumeration exceeds tuple guard");
            visit(paths);
            return;
        }
        const std::size_t j0 = r;
        if (used[1][j0]) return;
        extend(r, 1, j0, k + r - l);
    }

    void extend(std::size_t r, std::size_t i, std::size_t j, std::size_t tj) {
        used[i][j] = 1;
        paths[r - 1].emplace_back(i, j);
        if (i == n && j == tj) {
            start_path(r + 1);
        } else {
            if (i < n && !used[i + 1][j]) extend(r, i + 1, j, tj);
            if (j < tj && !used[i][j + 1]) extend(r, i, j + 1, tj);
        }
        paths[r - 1].pop_back();
        used[i][j] = 0;
    }
};

void check_indices(const WeightMatrix& d, std::size_t k, std::size_t l, std::size_t n, const char* who) {
    if (l < 1 || l > k || k > d.cols()) throw ContractError(std::string(who) + ": need 1 <= l <= k <= N");
    if (n > d.rows()) throw ContractError(std::string(who) + ": n exceeds matrix rows");
}

}  // namespace

void for_each_path_tuple(std::size_t n, std::size_t k, std::size_t l,
                         const std::function<void(const std::vector<LatticePath>&)>& visit) {
    if (n == 0) return;
    TupleWalker w{n, k, l, visit, std::vector<std::vector<char>>(n + 2, std::vector<char>(k + 2, 0)),
                  std::vector<LatticePath>(l), 0};
    w.start_path(1);
}

double tau_by_paths(const WeightMatrix& d, std::size_t k, std::size_t l, std::size_t n) {
    check_indices(d, k, l, n, "tau_by_paths");
    double total = 0.0;
    for_each_path_tuple(n, k, l, [&](const std::vector<LatticePath>& tuple) {
        double w = 1.0;
        for (const auto& p : tuple)
            for (auto [i, j] : p) w *= d(i, j);
        total += w;
    });
    return total;
}

double max_tuple_weight(const WeightMatrix& w, std::size_t k, std::size_t l, std::size_t n) {
    check_indices(w, k, l, n, "max_tuple_weight");
    double best = -std::numeric_limits<double>::infinity();
    for_each_path_tuple(n, k, l, [&](const std::vector<LatticePath>& tuple) {
        double s = 0.0;
        for (const auto& p : tuple)
            for (auto [i, j] : p) s += w(i, j);
        if (s > best) best = s;
    });
    return best;
}

std::vector<std::vector<long double>> h_matrix(const std::vector<long double>& x) {
    const std::size_t N = x.size();
    std::vector<std::vector<long double>> h(N, std::vector<long double>(N, 0.0L));
    for (std::size_t i = 0; i < N; ++i) {
        long double p = 1.0L;
        for (std::size_t j = i; j < N; ++j) {
            p *= x[j];
            h[i][j] = p;
        }
    }
    return h;
}

namespace {

linalg::MatrixLD h_product(const WeightMatrix& d, std::size_t n) {
    const std::size_t N = d.cols();
    linalg::MatrixLD h(N, std::vector<long double>(N, 0.0L));
    for (std::size_t i = 0; i < N; ++i) h[i][i] = 1.0L;
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<long double> x(N);
        for (std::size_t j = 1; j <= N; ++j) x[j - 1] = d(m, j);
        const auto f = h_matrix(x);
        linalg::MatrixLD next(N, std::vector<long double>(N, 0.0L));
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t q = i; q < N; ++q) {
                if (h[i][q] == 0.0L) continue;
                for (std::size_t j = q; j < N; ++j) next[i][j] += h[i][q] * f[q][j];
            }
        h = std::move(next);
    }
    return h;
}

double minor_of(const linalg::MatrixLD& h, std::size_t k, std::size_t l) {
    linalg::MatrixLD m(l, std::vector<long double>(l));
    for (std::size_t r = 0; r < l; ++r)
        for (std::size_t c = 0; c < l; ++c) m[r][c] = h[r][k - l + c];
    return static_cast<double>(linalg::determinant(std::move(m)));
}

}  // namespace

double tau_by_minors(const WeightMatrix& d, std::size_t k, std::size_t l, std::size_t n) {
    check_indices(d, k, l, n, "tau_by_minors");
    require_positive(d.head(n), "tau_by_minors");
    return minor_of(h_product(d, n), k, l);
}

TriangularArray p_tableau(const WeightMatrix& d, std::size_t n) {
    if (n > d.rows()) throw ContractError("p_tableau: n exceeds matrix rows");
    require_positive(d.head(n), "p_tableau");
    const std::size_t N = d.cols();
    const auto h = h_product(d, n);
    TriangularArray z(N, std::min(n, N));
    for (std::size_t k = 1; k <= N; ++k) {
        double prev = 1.0;
        for (std::size_t l = 1; l <= std::min(k, n); ++l) {
            const double tau = minor_of(h, k, l);
            z(k, l) = tau / prev;
            prev = tau;
        }
    }
    return z;
}

TriangularArray q_tableau(const WeightMatrix& d, std::size_t n) {
    if (n > d.rows()) throw ContractError("q_tableau: n exceeds matrix rows");
    return p_tableau(d.head(n).transpose(), d.cols());
}

}  // namespace grsk
