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

#include <span>
#include <utility>

#include "grsk/arrays.hpp"

namespace grsk {

/// (max,+) image L_{k,l}; same layout as TriangularArray but real entries.
class TropicalArray : public Pattern<double> {
public:
    using Pattern<double>::Pattern;
};

std::pair<Word, Word> tropical_row_insert(const Word& xi, const Word& b);
TropicalArray tropical_grow_row(const TropicalArray& L, const Word& w);
TropicalArray tropical_evolve(const WeightMatrix& w, std::size_t n);
/// L(n) from L_{k,1}+...+L_{k,l} = max tuple weight, by enumeration.
TropicalArray tropical_by_paths(const WeightMatrix& w, std::size_t n);

/// eps log sum exp(x_i / eps).
double soft_max(std::span<const double> x, double eps);

/// L_{k+1,l+1} <= L_{k,l} <= L_{k+1,l} on all defined entries.
bool interlaces(const TropicalArray& L, double tol = 1e-12);

}  // namespace grsk
