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
#include <vector>

#include "grsk/errors.hpp"

namespace grsk {

/// Row parameters theta_hat (one per time step) and column parameters theta.
/// Weight d_{ij} is inverse-gamma with shape theta_hat_i + theta_j.
struct SolvableParams {
    std::vector<double> theta_hat;
    std::vector<double> theta;

    std::size_t N() const { return theta.size(); }
    std::size_t rows() const { return theta_hat.size(); }

    /// gamma_{ij}, 1-based.
    double gamma(std::size_t i, std::size_t j) const {
        return theta_hat.at(i - 1) + theta.at(j - 1);
    }

    /// Checks positivity of every gamma_{ij} with i <= n; throws DomainError.
    void validate(std::size_t n) const {
        if (theta.empty()) throw ContractError("SolvableParams: empty theta");
        if (n > theta_hat.size()) throw ContractError("SolvableParams: too few row parameters");
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= theta.size(); ++j)
                if (!(gamma(i, j) > 0.0)) throw DomainError("SolvableParams: theta_hat_i + theta_j must be positive");
    }

    /// theta_j < 0 < theta_hat_m for all used indices.
    bool in_gauge(std::size_t n) const {
        for (double t : theta)
            if (!(t < 0.0)) return false;
        for (std::size_t i = 0; i < n && i < theta_hat.size(); ++i)
            if (!(theta_hat[i] > 0.0)) return false;
        return true;
    }

    /// Shifts theta down and theta_hat up by c; gamma is unchanged.
    SolvableParams shifted(double c) const {
        SolvableParams p = *this;
        for (double& t : p.theta) t -= c;
        for (double& t : p.theta_hat) t += c;
        return p;
    }

    /// Homogeneous gamma_{ij} = g, in gauge.
    static SolvableParams homogeneous(double g, std::size_t n, std::size_t N) {
        return SolvableParams{std::vector<double>(n, 0.75 * g), std::vector<double>(N, -0.25 * g)};
    }
};

}  // namespace grsk
