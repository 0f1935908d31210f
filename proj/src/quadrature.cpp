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

#include "grsk/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "grsk/errors.hpp"

namespace grsk::quad {

namespace {

Rule build_gauss_legendre(std::size_t n) {
    Rule r{std::vector<double>(n), std::vector<double>(n)};
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        long double x = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (n + 0.5L));
        long double dp = 0.0L;
        for (int it = 0; it < 100; ++it) {
            long double p0 = 1.0L, p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const long double p2 = ((2.0L * k - 1.0L) * x * p1 - (k - 1.0L) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0L);
            const long double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-19L) break;
        }
        const double w = static_cast<double>(2.0L / ((1.0L - x * x) * dp * dp));
        r.nodes[i] = -static_cast<double>(x);
        r.nodes[n - 1 - i] = static_cast<double>(x);
        r.weights[i] = r.weights[n - 1 - i] = w;
    }
    return r;
}

}  // namespace

const Rule& gauss_legendre(std::size_t n) {
    if (n == 0) throw ContractError("gauss_legendre: need at least one node");
    static std::mutex mu;
    static std::map<std::size_t, std::unique_ptr<Rule>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<Rule>(build_gauss_legendre(n));
    return *slot;
}

void composite_nodes(const Interval& iv, std::size_t panels, std::size_t nodes, Method rule,
                     std::vector<double>& x, std::vector<double>& w) {
    x.clear();
    w.clear();
    if (panels == 0) throw ContractError("composite_nodes: need at least one panel");
    if (rule == Method::Trapezoid) {
        const std::size_t m = panels * nodes;
        const double h = iv.width() / m;
        for (std::size_t i = 0; i <= m; ++i) {
            x.push_back(iv.lo + i * h);
            w.push_back((i == 0 || i == m) ? 0.5 * h : h);
        }
        return;
    }
    const Rule& r = gauss_legendre(nodes);
    const double pw = iv.width() / panels;
    for (std::size_t p = 0; p < panels; ++p) {
        const double mid = iv.lo + (p + 0.5) * pw;
        for (std::size_t i = 0; i < nodes; ++i) {
            x.push_back(mid + 0.5 * pw * r.nodes[i]);
            w.push_back(0.5 * pw * r.weights[i]);
        }
    }
}

double integrate(const std::function<double(double)>& f, const Interval& iv, std::size_t panels, std::size_t nodes) {
    std::vector<double> x, w;
    composite_nodes(iv, panels, nodes, Method::GaussLegendre, x, w);
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * f(x[i]);
    return s;
}

cplx integrate_complex(const std::function<cplx(double)>& f, const Interval& iv, std::size_t panels,
                       std::size_t nodes) {
    std::vector<double> x, w;
    composite_nodes(iv, panels, nodes, Method::GaussLegendre, x, w);
    cplx s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * f(x[i]);
    return s;
}

cplx integrate_tensor(const std::function<cplx(std::span<const double>)>& f, const QuadratureSpec& spec) {
    const std::size_t d = spec.box.size();
    if (d == 0) {
        return f(std::span<const double>{});
    }
    std::vector<std::vector<double>> xs(d), ws(d);
    for (std::size_t i = 0; i < d; ++i) composite_nodes(spec.box[i], spec.panels, spec.nodes, spec.rule, xs[i], ws[i]);
    std::vector<std::size_t> idx(d, 0);
    std::vector<double> pt(d);
    cplx total = 0.0;
    for (;;) {
        double w = 1.0;
        for (std::size_t i = 0; i < d; ++i) {
            pt[i] = xs[i][idx[i]];
            w *= ws[i][idx[i]];
        }
        total += w * f(pt);
        std::size_t i = 0;
        while (i < d && ++idx[i] == xs[i].size()) idx[i++] = 0;
        if (i == d) break;
    }
    return total;
}

Estimate integrate_tensor_adaptive(const std::function<cplx(std::span<const double>)>& f, QuadratureSpec spec,
                                   int max_doublings) {
    Estimate e;
    cplx prev = integrate_tensor(f, spec);
    for (int k = 0; k < max_doublings; ++k) {
        spec.panels *= 2;
        const cplx cur = integrate_tensor(f, spec);
        e.value = cur;
        e.error = std::abs(cur - prev);
        if (e.error <= spec.tolerance * std::abs(cur)) {
            e.converged = true;
            return e;
        }
        prev = cur;
    }
    e.value = prev;
    return e;
}

}  // namespace grsk::quad
