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

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "grsk/errors.hpp"

namespace grsk {

/// Word (b_start, ..., b_N); indices are 1-based.
template <class T>
struct BasicWord {
    std::size_t start = 1;
    std::vector<T> entries;

    std::size_t size() const { return entries.size(); }
    bool empty() const { return entries.empty(); }
    std::size_t last() const { return start + entries.size() - 1; }
    T& operator[](std::size_t k) { return entries[k - start]; }
    const T& operator[](std::size_t k) const { return entries[k - start]; }
};
using Word = BasicWord<double>;

template <class T>
void require_positive(const BasicWord<T>& w, const char* who) {
    for (const T& x : w.entries)
        if (!(x > T(0))) throw DomainError(std::string(who) + ": entries must be positive");
}

/// Triangular array z_{k,l}, 1 <= l <= k <= N, with only the first `fill`
/// diagonals defined.
template <class T>
class Pattern {
public:
    Pattern() = default;
    explicit Pattern(std::size_t N, std::size_t fill = 0)
        : N_(N), fill_(std::min(fill, N)), data_(N * (N + 1) / 2, T{}) {}

    std::size_t N() const { return N_; }
    std::size_t fill() const { return fill_; }
    void set_fill(std::size_t m) { fill_ = std::min(m, N_); }
    bool full() const { return fill_ == N_; }

    bool defined(std::size_t k, std::size_t l) const {
        return k >= 1 && k <= N_ && l >= 1 && l <= std::min(k, fill_);
    }

    T& operator()(std::size_t k, std::size_t l) { return data_[index(k, l)]; }
    const T& operator()(std::size_t k, std::size_t l) const { return data_[index(k, l)]; }

    T& at(std::size_t k, std::size_t l) {
        check(k, l);
        return data_[index(k, l)];
    }
    const T& at(std::size_t k, std::size_t l) const {
        check(k, l);
        return data_[index(k, l)];
    }

    /// Defined part of row k.
    std::vector<T> row(std::size_t k) const {
        std::vector<T> r;
        for (std::size_t l = 1; l <= std::min(k, fill_); ++l) r.push_back((*this)(k, l));
        return r;
    }

    /// Diagonal l as the word (z_{l,l}, ..., z_{N,l}).
    BasicWord<T> diagonal(std::size_t l) const {
        BasicWord<T> w{l, {}};
        for (std::size_t k = l; k <= N_; ++k) w.entries.push_back((*this)(k, l));
        return w;
    }

    void set_diagonal(std::size_t l, const BasicWord<T>& w) {
        if (w.start != l || w.last() != N_) throw ContractError("Pattern: diagonal has wrong extent");
        for (std::size_t k = l; k <= N_; ++k) (*this)(k, l) = w[k];
    }

    bool operator==(const Pattern& o) const = default;

private:
    static std::size_t index(std::size_t k, std::size_t l) { return k * (k - 1) / 2 + (l - 1); }
    void check(std::size_t k, std::size_t l) const {
        if (!defined(k, l)) throw ContractError("Pattern: entry (" + std::to_string(k) + "," + std::to_string(l) + ") undefined");
    }

    std::size_t N_ = 0;
    std::size_t fill_ = 0;
    std::vector<T> data_;
};

using TriangularArray = Pattern<double>;

/// Same layout as TriangularArray but holding log z_{k,l}.
class LogTriangularArray : public Pattern<double> {
public:
    using Pattern<double>::Pattern;
};

LogTriangularArray to_log(const TriangularArray& z);
TriangularArray to_linear(const LogTriangularArray& t);
void require_positive(const TriangularArray& z, const char* who);

/// n x N matrix, 1-based (i = time/row, j = column).
template <class T>
class BasicMatrix {
public:
    BasicMatrix() = default;
    BasicMatrix(std::size_t rows, std::size_t cols, T init = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, init) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[(i - 1) * cols_ + (j - 1)]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[(i - 1) * cols_ + (j - 1)]; }

    BasicWord<T> row_word(std::size_t i) const {
        BasicWord<T> w{1, {}};
        for (std::size_t j = 1; j <= cols_; ++j) w.entries.push_back((*this)(i, j));
        return w;
    }

    BasicMatrix transpose() const {
        BasicMatrix t(cols_, rows_);
        for (std::size_t i = 1; i <= rows_; ++i)
            for (std::size_t j = 1; j <= cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Top n rows.
    BasicMatrix head(std::size_t n) const {
        if (n > rows_) throw ContractError("BasicMatrix::head: not enough rows");
        BasicMatrix h(n, cols_);
        std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(n * cols_), h.data_.begin());
        return h;
    }

    const std::vector<T>& data() const { return data_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using WeightMatrix = BasicMatrix<double>;
void require_positive(const WeightMatrix& d, const char* who);

/// eta_{k,l} = z_{k,l}/z_{k-1,l} for l < k, plus optional exit ratios zeta_l.
struct RatioArray {
    Pattern<double> eta;  // (k,l) used for l < k only
    std::vector<double> zeta;
};

RatioArray ratios(const TriangularArray& z);

}  // namespace grsk
