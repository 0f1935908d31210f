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

#include "grsk/tropical.hpp"

#include <algorithm>
#include <cmath>

#include "grsk/paths.hpp"

namespace grsk {

std::pair<Word, Word> tropical_row_insert(const Word& xi, const Word& b) {
    if (xi.start != b.start || xi.size() != b.size() || xi.empty())
        throw ContractError("tropical_row_insert: words must share start and length");
    const std::size_t l = xi.start, N = xi.last();
    Word out{l, std::vector<double>(xi.size())};
    Word bp{l + 1, {}};
    out[l] = b[l] + xi[l];
    for (std::size_t k = l + 1; k <= N; ++k) {
        out[k] = b[k] + std::max(out[k - 1], xi[k]);
        bp.entries.push_back(b[k] + xi[k] + out[k - 1] - xi[k - 1] - out[k]);
    }
    return {std::move(out), std::move(bp)};
}

TropicalArray tropical_grow_row(const TropicalArray& L, const Word& w) {
    const std::size_t N = L.N();
    if (w.start != 1 || w.size() != N) throw ContractError("tropical_grow_row: word must be (w_1..w_N)");
    const std::size_t m = L.fill();
    const std::size_t new_fill = std::min(m + 1, N);
    TropicalArray out(N, new_fill);
    Word word = w;
    for (std::size_t l = 1; l <= new_fill; ++l) {
        if (l <= m) {
            auto [xi, bp] = tropical_row_insert(L.diagonal(l), word);
            out.set_diagonal(l, xi);
            word = std::move(bp);
        } else {
            Word pref = word;
            for (std::size_t i = 1; i < pref.size(); ++i) pref.entries[i] += pref.entries[i - 1];
            out.set_diagonal(l, pref);
        }
    }
    return out;
}

TropicalArray tropical_evolve(const WeightMatrix& w, std::size_t n) {
    if (n > w.rows()) throw ContractError("tropical_evolve: n exceeds matrix rows");
    TropicalArray L(w.cols(), 0);
    for (std::size_t i = 1; i <= n; ++i) L = tropical_grow_row(L, w.row_word(i));
    return L;
}

TropicalArray tropical_by_paths(const WeightMatrix& w, std::size_t n) {
    const std::size_t N = w.cols();
    TropicalArray L(N, std::min(n, N));
    for (std::size_t k = 1; k <= N; ++k) {
        double prev = 0.0;
        for (std::size_t l = 1; l <= std::min(k, n); ++l) {
            const double m = max_tuple_weight(w, k, l, n);
            L(k, l) = m - prev;
            prev = m;
        }
    }
    return L;
}

double soft_max(std::span<const double> x, double eps) {
    if (x.empty()) throw ContractError("soft_max: empty input");
    if (!(eps > 0.0)) throw DomainError("soft_max: eps must be positive");
    const double m = *std::max_element(x.begin(), x.end());
    double s = 0.0;
    for (double v : x) s += std::exp((v - m) / eps);
    return m + eps * std::log(s);
}

bool interlaces(const TropicalArray& L, double tol) {
    for (std::size_t k = 1; k < L.N(); ++k)
        for (std::size_t l = 1; l <= std::min(k, L.fill()); ++l) {
            if (!L.defined(k + 1, l)) continue;
            if (L(k, l) > L(k + 1, l) + tol) return false;
            if (L.defined(k + 1, l + 1) && L(k + 1, l + 1) > L(k, l) + tol) return false;
        }
    return true;
}

}  // namespace grsk
