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
#include <functional>
#include <vector>

#include "grsk/arrays.hpp"

namespace grsk {

constexpr std::size_t kMaxTuples = 1'000'000;

/// A lattice path as its visited (i, j) sites, i = time, j = column.
using LatticePath = std::vector<std::pair<std::size_t, std::size_t>>;

/// Calls visit for every l-tuple of vertex-disjoint up-right paths, path r
/// running from (1, r) to (n, k + r - l), in lexicographic order. Throws
/// SizeError past kMaxTuples.
void for_each_path_tuple(std::size_t n, std::size_t k, std::size_t l,
                         const std::function<void(const std::vector<LatticePath>&)>& visit);

/// Sum of tuple weights by exhaustive enumeration (uses rows 1..n of d).
double tau_by_paths(const WeightMatrix& d, std::size_t k, std::size_t l, std::size_t n);
/// Maximum of summed weights over the same tuples; -inf when there are none.
double max_tuple_weight(const WeightMatrix& w, std::size_t k, std::size_t l, std::size_t n);

/// H(x)_{ij} = x_i ... x_j for i <= j.
std::vector<std::vector<long double>> h_matrix(const std::vector<long double>& x);
/// Same tau as a minor (rows 1..l, columns k-l+1..k) of H(d^[1]) ... H(d^[n]).
double tau_by_minors(const WeightMatrix& d, std::size_t k, std::size_t l, std::size_t n);

/// z(n) from the minors: z_{k,1} ... z_{k,l} = tau_{k,l}(n), l <= k and n.
TriangularArray p_tableau(const WeightMatrix& d, std::size_t n);
/// Recording array: p_tableau of the transposed n x N block.
TriangularArray q_tableau(const WeightMatrix& d, std::size_t n);

}  // namespace grsk
