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

#include "grsk/arrays.hpp"

#include <cmath>

namespace grsk {

LogTriangularArray to_log(const TriangularArray& z) {
    require_positive(z, "to_log");
    LogTriangularArray t(z.N(), z.fill());
    for (std::size_t k = 1; k <= z.N(); ++k)
        for (std::size_t l = 1; l <= std::min(k, z.fill()); ++l) t(k, l) = std::log(z(k, l));
    return t;
}

TriangularArray to_linear(const LogTriangularArray& t) {
    TriangularArray z(t.N(), t.fill());
    for (std::size_t k = 1; k <= t.N(); ++k)
        for (std::size_t l = 1; l <= std::min(k, t.fill()); ++l) z(k, l) = std::exp(t(k, l));
    return z;
}

void require_positive(const TriangularArray& z, const char* who) {
    for (std::size_t k = 1; k <= z.N(); ++k)
        for (std::size_t l = 1; l <= std::min(k, z.fill()); ++l)
            if (!(z(k, l) > 0.0)) throw DomainError(std::string(who) + ": array entries must be positive");
}

void require_positive(const WeightMatrix& d, const char* who) {
    for (double x : d.data())
        if (!(x > 0.0)) throw DomainError(std::string(who) + ": weights must be positive");
}

RatioArray ratios(const TriangularArray& z) {
    require_positive(z, "ratios");
    RatioArray r{Pattern<double>(z.N(), z.fill()), {}};
    for (std::size_t k = 2; k <= z.N(); ++k)
        for (std::size_t l = 1; l < k && l <= z.fill(); ++l) r.eta(k, l) = z(k, l) / z(k - 1, l);
    return r;
}

}  // namespace grsk
