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

#include <boost/rational.hpp>
#include <iosfwd>
#include "json.hpp"
#include <string>

#include "grsk/arrays.hpp"
#include "grsk/params.hpp"

namespace grsk::io {

using Rational = boost::rational<long long>;
using json = nlohmann::json;

/// CSV: one row per time index, comma-separated positive decimals, optional
/// header line "# n=<n> N=<N>".
WeightMatrix read_weight_csv(std::istream& in);
WeightMatrix read_weight_csv_file(const std::string& path);
void write_weight_csv(std::ostream& out, const WeightMatrix& d);

/// Same layout with entries such as "2/3".
BasicMatrix<Rational> read_rational_csv(std::istream& in);
BasicMatrix<Rational> read_rational_csv_file(const std::string& path);
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

json to_json(const TriangularArray& z);
json to_json(const LogTriangularArray& t);
json to_json(const Pattern<Rational>& z);
TriangularArray array_from_json(const json& j);
Pattern<Rational> rational_array_from_json(const json& j);

SolvableParams params_from_json(const json& j);
json to_json(const SolvableParams& p);
SolvableParams read_params_file(const std::string& path);

}  // namespace grsk::io
