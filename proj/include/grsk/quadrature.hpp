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

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace grsk::quad {

using cplx = std::complex<double>;

struct Rule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

/// Gauss-Legendre rule with n nodes (cached, thread-safe).
const Rule& gauss_legendre(std::size_t n);

struct Interval {
    double lo = 0.0, hi = 0.0;
    double width() const { return hi - lo; }
};

enum class Method { GaussLegendre, Trapezoid };

/// Per-dimension box, panels and nodes per panel.
struct QuadratureSpec {
    std::vector<Interval> box;
    std::size_t nodes = 16;   // per panel and dimension
    std::size_t panels = 4;
    Method rule = Method::GaussLegendre;
    double tolerance = 1e-10;
};

/// Composite rule on one interval: returns (abscissae, weights).
void composite_nodes(const Interval& iv, std::size_t panels, std::size_t nodes, Method rule,
                     std::vector<double>& x, std::vector<double>& w);

double integrate(const std::function<double(double)>& f, const Interval& iv, std::size_t panels = 8,
                 std::size_t nodes = 16);
cplx integrate_complex(const std::function<cplx(double)>& f, const Interval& iv, std::size_t panels = 8,
                       std::size_t nodes = 16);

/// Tensor-product rule over spec.box; f receives the point.
cplx integrate_tensor(const std::function<cplx(std::span<const double>)>& f, const QuadratureSpec& spec);

struct Estimate {
    cplx value = 0.0;
    double error = 0.0;
    bool converged = false;
};

/// Repeats integrate_tensor doubling panels until successive values agree
/// to spec.tolerance (relative), at most max_doublings times.
Estimate integrate_tensor_adaptive(const std::function<cplx(std::span<const double>)>& f, QuadratureSpec spec,
                                   int max_doublings = 3);

}  // namespace grsk::quad
