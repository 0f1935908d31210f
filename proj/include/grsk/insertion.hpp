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

#include <utility>

#include "grsk/arrays.hpp"

namespace grsk {

/// Inserts b into the word xi (same start l). Returns (xi', b'); b' starts
/// at l+1 and is empty when l = N.
template <class T>
std::pair<BasicWord<T>, BasicWord<T>> row_insert(const BasicWord<T>& xi, const BasicWord<T>& b) {
    if (xi.start != b.start || xi.size() != b.size() || xi.empty())
        throw ContractError("row_insert: words must share start and length");
    require_positive(xi, "row_insert");
    require_positive(b, "row_insert");
    const std::size_t l = xi.start, N = xi.last();
    BasicWord<T> out{l, std::vector<T>(xi.size())};
    BasicWord<T> bp{l + 1, {}};
    out[l] = b[l] * xi[l];
    for (std::size_t k = l + 1; k <= N; ++k) {
        out[k] = b[k] * (out[k - 1] + xi[k]);
        bp.entries.push_back(b[k] * xi[k] * out[k - 1] / (xi[k - 1] * out[k]));
    }
    return {std::move(out), std::move(bp)};
}

/// Insertion into an empty word: prefix products.
template <class T>
BasicWord<T> row_insert_empty(const BasicWord<T>& b) {
    require_positive(b, "row_insert_empty");
    BasicWord<T> out{b.start, b.entries};
    for (std::size_t i = 1; i < out.size(); ++i) out.entries[i] = out.entries[i - 1] * b.entries[i];
    return out;
}

template <class T>
struct InsertResult {
    Pattern<T> z;
    Pattern<T> a;  // a_{k,l}: word fed into diagonal l at position k
};

/// Inserts b into every defined diagonal of z; if z is not full the leftover
/// word opens a new diagonal.
template <class T>
InsertResult<T> grow_row(const Pattern<T>& z, const BasicWord<T>& b) {
    const std::size_t N = z.N();
    if (b.start != 1 || b.size() != N) throw ContractError("insert: word must be (b_1..b_N)");
    require_positive(b, "insert");
    const std::size_t m = z.fill();
    const std::size_t new_fill = std::min(m + 1, N);
    InsertResult<T> r{Pattern<T>(N, new_fill), Pattern<T>(N, new_fill)};
    BasicWord<T> word = b;
    for (std::size_t l = 1; l <= new_fill; ++l) {
        r.a.set_diagonal(l, word);
        if (l <= m) {
            auto [xi, bp] = row_insert(z.diagonal(l), word);
            r.z.set_diagonal(l, xi);
            word = std::move(bp);
        } else {
            r.z.set_diagonal(l, row_insert_empty(word));
        }
    }
    return r;
}

/// z <- b for a full array.
template <class T>
InsertResult<T> insert_row(const Pattern<T>& z, const BasicWord<T>& b) {
    if (!z.full()) throw ContractError("insert_row: array must be full; use evolve_from_empty for growth");
    return grow_row(z, b);
}

template <class T>
Pattern<T> evolve_from_empty(const BasicMatrix<T>& d, std::size_t n) {
    if (n > d.rows()) throw ContractError("evolve_from_empty: n exceeds matrix rows");
    Pattern<T> z(d.cols(), 0);
    for (std::size_t i = 1; i <= n; ++i) z = grow_row(z, d.row_word(i)).z;
    return z;
}

/// Log-domain counterparts; words and arrays hold logarithms.
std::pair<Word, Word> row_insert_log(const Word& xi, const Word& b);
Word row_insert_empty_log(const Word& b);
LogTriangularArray grow_row_log(const LogTriangularArray& t, const Word& logb, LogTriangularArray* a = nullptr);
LogTriangularArray evolve_from_empty_log(const WeightMatrix& logd, std::size_t n);

/// Ratio form of a single word insertion. eta holds (eta_{l+1}, ..., eta_N)
/// (start l+1); returns (eta', b', zeta_N).
struct RatioInsertResult {
    Word eta;
    Word b;
    double zeta_last = 0.0;
    std::vector<double> zeta;  // zeta_l..zeta_N
};
RatioInsertResult ratio_insert(const Word& eta, const Word& b);

double log_add_exp(double a, double b);

}  // namespace grsk
