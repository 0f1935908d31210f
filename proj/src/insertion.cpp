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

#include "grsk/insertion.hpp"

#include <cmath>

namespace grsk {

double log_add_exp(double a, double b) {
    if (a < b) std::swap(a, b);
    return a + std::log1p(std::exp(b - a));
}

std::pair<Word, Word> row_insert_log(const Word& xi, const Word& b) {
    if (xi.start != b.start || xi.size() != b.size() || xi.empty())
        throw ContractError("row_insert_log: words must share start and length");
    const std::size_t l = xi.start, N = xi.last();
    Word out{l, std::vector<double>(xi.size())};
    Word bp{l + 1, {}};
    out[l] = b[l] + xi[l];
    for (std::size_t k = l + 1; k <= N; ++k) {
        out[k] = b[k] + log_add_exp(out[k - 1], xi[k]);
        bp.entries.push_back(b[k] + xi[k] + out[k - 1] - xi[k - 1] - out[k]);
    }
    return {std::move(out), std::move(bp)};
}

Word row_insert_empty_log(const Word& b) {
    Word out = b;
    for (std::size_t i = 1; i < out.size(); ++i) out.entries[i] += out.entries[i - 1];
    return out;
}

LogTriangularArray grow_row_log(const LogTriangularArray& t, const Word& logb, LogTriangularArray* a) {
    const std::size_t N = t.N();
    if (logb.start != 1 || logb.size() != N) throw ContractError("grow_row_log: word must be (b_1..b_N)");
    const std::size_t m = t.fill();
    const std::size_t new_fill = std::min(m + 1, N);
    LogTriangularArray out(N, new_fill);
    if (a) *a = LogTriangularArray(N, new_fill);
    Word word = logb;
    for (std::size_t l = 1; l <= new_fill; ++l) {
        if (a) a->set_diagonal(l, word);
        if (l <= m) {
            auto [xi, bp] = row_insert_log(t.diagonal(l), word);
            out.set_diagonal(l, xi);
            word = std::move(bp);
        } else {
            out.set_diagonal(l, row_insert_empty_log(word));
        }
    }
    return out;
}

LogTriangularArray evolve_from_empty_log(const WeightMatrix& logd, std::size_t n) {
    if (n > logd.rows()) throw ContractError("evolve_from_empty_log: n exceeds matrix rows");
    LogTriangularArray t(logd.cols(), 0);
    for (std::size_t i = 1; i <= n; ++i) t = grow_row_log(t, logd.row_word(i));
    return t;
}

RatioInsertResult ratio_insert(const Word& eta, const Word& b) {
    if (eta.start != b.start + 1 || eta.size() + 1 != b.size())
        throw ContractError("ratio_insert: eta must cover positions l+1..N of b");
    require_positive(eta, "ratio_insert");
    require_positive(b, "ratio_insert");
    const std::size_t l = b.start, N = b.last();
    RatioInsertResult r{Word{l + 1, {}}, Word{l + 1, {}}, 0.0, {b[l]}};
    double zeta = b[l];
    for (std::size_t k = l + 1; k <= N; ++k) {
        r.eta.entries.push_back(b[k] * (1.0 + eta[k] / zeta));
        r.b.entries.push_back(1.0 / (1.0 / zeta + 1.0 / eta[k]));
        zeta = b[k] * (1.0 + zeta / eta[k]);
        r.zeta.push_back(zeta);
    }
    r.zeta_last = zeta;
    return r;
}

}  // namespace grsk
