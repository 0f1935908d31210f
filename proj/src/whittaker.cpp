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

#include "grsk/whittaker.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "grsk/errors.hpp"
#include "grsk/specfun.hpp"

namespace grsk {

namespace {

constexpr double kTiny = std::numeric_limits<double>::min();

struct Coord {
    int index;     // free coordinate, or -1 when pinned
    double value;  // pinned value
};

Coord coord(std::size_t N, std::size_t k, std::size_t l, std::span<const double> u) {
    if (k == N) return {-1, u[l - 1]};
    return {pattern_index(k, l), 0.0};
}

void add_linear(Potential& p, const Coord& c, cplx a) {
    if (c.index >= 0)
        p.linear[c.index] += a;
    else
        p.constant += a * c.value;
}

// exp(t_a - t_b)
void add_edge(Potential& p, const Coord& a, const Coord& b) {
    p.add_exp_diff(a.index, b.index, (a.index < 0 ? a.value : 0.0) - (b.index < 0 ? b.value : 0.0));
}

void check_inputs(std::span<const cplx> lambda, std::span<const double> y) {
    if (lambda.empty() || lambda.size() != y.size()) throw ContractError("whittaker: lambda and y must have equal size N >= 1");
    for (double v : y)
        if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("whittaker: y must be positive");
}

std::vector<double> logs(std::span<const double> y) {
    std::vector<double> u(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) u[i] = std::log(y[i]);
    return u;
}

WhittakerValue from_scaled(const ScaledIntegral& s, const char* method) {
    WhittakerValue v;
    v.log_scale = s.log_scale;
    v.mantissa = s.mantissa;
    v.rel_error = s.rel_error;
    v.converged = s.converged;
    v.method = method;
    return v;
}

WhittakerValue trivial(const Potential& p) {
    WhittakerValue v;
    v.log_scale = p.constant.real();
    v.mantissa = std::exp(cplx(0.0, p.constant.imag()));
    v.converged = true;
    v.method = "exact";
    return v;
}

WhittakerValue psi_direct(std::span<const cplx> lambda, std::span<const double> u, const WhittakerOptions& opt) {
    const Potential p = pattern_potential(lambda, u);
    if (p.dim() == 0) return trivial(p);
    return from_scaled(integrate_potential_scaled(p, opt.rel_tol, opt.drop, opt.nodes, opt.panels, opt.max_doublings),
                       "direct");
}

WhittakerValue psi_mc(std::span<const cplx> lambda, std::span<const double> u, const WhittakerOptions& opt) {
    const Potential p = pattern_potential(lambda, u);
    if (p.dim() == 0) return trivial(p);
    RngStream rng(opt.seed, 0);
    const auto r = integrate_potential_mc(p, opt.mc_samples, rng);
    WhittakerValue v;
    v.log_scale = r.log_scale;
    v.mantissa = r.mantissa;
    v.rel_error = r.rel_error;
    v.converged = r.rel_error <= std::max(opt.rel_tol, 3.0 / std::sqrt(static_cast<double>(opt.mc_samples)));
    v.method = "monte-carlo";
    return v;
}

// Lambda^N factor in row-(N-1) logs s: theta_N (sum s - sum u) - sum (e^{s_l - u_l} + e^{u_{l+1} - s_l}).
cplx lambda_factor(std::span<const cplx> theta, std::span<const double> u, std::span<const double> s) {
    const std::size_t N = u.size();
    cplx v = 0.0;
    double edge = 0.0;
    for (std::size_t l = 0; l + 1 < N; ++l) {
        v += theta[N - 1] * (s[l] - u[l]);
        edge += std::exp(s[l] - u[l]) + std::exp(u[l + 1] - s[l]);
    }
    return v - theta[N - 1] * u[N - 1] - edge;
}

WhittakerValue psi_recursive(std::span<const cplx> lambda, std::span<const double> u, const WhittakerOptions& opt) {
    const std::size_t N = lambda.size();
    if (N <= 2) return psi_direct(lambda, u, opt);
    const Potential full = pattern_potential(lambda, u);
    const MaximizeResult mx = maximize(full, std::vector<double>(full.dim(), 0.0));
    const auto box = level_box(full, mx, opt.drop);
    quad::QuadratureSpec spec;
    for (std::size_t l = 1; l < N; ++l) spec.box.push_back(box[pattern_index(N - 1, l)]);
    spec.nodes = opt.nodes;
    spec.panels = opt.panels;
    spec.tolerance = opt.rel_tol;
    WhittakerOptions inner = opt;
    inner.rel_tol = 0.1 * opt.rel_tol;
    const auto sub = lambda.first(N - 1);
    bool inner_ok = true;
    auto est = quad::integrate_tensor_adaptive(
        [&](std::span<const double> s) {
            const auto w = psi_recursive(sub, s, inner);
            inner_ok = inner_ok && w.converged;
            return std::exp(lambda_factor(lambda, u, s) + w.log_scale - mx.value) * w.mantissa;
        },
        spec, opt.max_doublings);
    WhittakerValue v;
    v.log_scale = mx.value;
    v.mantissa = est.value;
    v.rel_error = est.error / std::max(std::abs(est.value), kTiny);
    v.converged = est.converged && inner_ok;
    v.method = "recursive";
    return v;
}

cplx log_gamma_product(std::span<const cplx> a, std::span<const cplx> b, double sign) {
    cplx s = 0.0;
    for (cplx x : a)
        for (cplx y : b) s += log_gamma(sign * (x + y));
    return s;
}

}  // namespace

bool SpectralPoint::purely_imaginary(double tol) const {
    for (cplx l : lambda)
        if (std::abs(l.real()) > tol) return false;
    return true;
}

Potential pattern_potential(std::span<const cplx> theta, std::span<const double> u) {
    const std::size_t N = theta.size();
    if (u.size() != N) throw ContractError("pattern_potential: bottom row must have length N");
    Potential p(pattern_dim(N));
    for (std::size_t k = 1; k <= N; ++k) {
        // theta_k (R_{k-1} - R_k)
        for (std::size_t l = 1; l < k; ++l) add_linear(p, coord(N, k - 1, l, u), theta[k - 1]);
        for (std::size_t l = 1; l <= k; ++l) add_linear(p, coord(N, k, l, u), -theta[k - 1]);
    }
    for (std::size_t k = 1; k < N; ++k)
        for (std::size_t l = 1; l <= k; ++l) {
            add_edge(p, coord(N, k, l, u), coord(N, k + 1, l, u));
            add_edge(p, coord(N, k + 1, l + 1, u), coord(N, k, l, u));
        }
    return p;
}

cplx pattern_log_density(std::span<const cplx> theta, const Pattern<double>& t) {
    const std::size_t N = theta.size();
    if (t.N() != N || !t.full()) throw ContractError("pattern_log_density: need a full array of size N");
    cplx v = 0.0;
    for (std::size_t k = 1; k <= N; ++k) {
        for (std::size_t l = 1; l < k; ++l) v += theta[k - 1] * t(k - 1, l);
        for (std::size_t l = 1; l <= k; ++l) v -= theta[k - 1] * t(k, l);
    }
    for (std::size_t k = 1; k < N; ++k)
        for (std::size_t l = 1; l <= k; ++l) v -= std::exp(t(k, l) - t(k + 1, l)) + std::exp(t(k + 1, l + 1) - t(k, l));
    return v;
}

WhittakerValue whittaker_eval(std::span<const cplx> lambda, std::span<const double> y, const WhittakerOptions& opt) {
    check_inputs(lambda, y);
    const auto u = logs(y);
    const std::size_t N = lambda.size();
    switch (opt.method) {
        case WhittakerMethod::Direct:
            if (N > kMaxQuadratureN) throw SizeError("whittaker_eval: quadrature limited to N <= 3");
            return psi_direct(lambda, u, opt);
        case WhittakerMethod::Recursive:
            if (N > kMaxQuadratureN) throw SizeError("whittaker_eval: quadrature limited to N <= 3");
            return psi_recursive(lambda, u, opt);
        case WhittakerMethod::MonteCarlo:
            return psi_mc(lambda, u, opt);
        case WhittakerMethod::Auto:
            break;
    }
    return N <= kMaxQuadratureN ? psi_direct(lambda, u, opt) : psi_mc(lambda, u, opt);
}

WhittakerValue whittaker_eval_real(std::span<const double> theta, std::span<const double> y,
                                   const WhittakerOptions& opt) {
    std::vector<cplx> l(theta.begin(), theta.end());
    return whittaker_eval(l, y, opt);
}

WhittakerValue w_function(std::span<const double> theta, std::span<const double> y, const WhittakerOptions& opt) {
    auto v = whittaker_eval_real(theta, y, opt);
    for (std::size_t i = 0; i < y.size(); ++i) v.log_scale += theta[i] * std::log(y[i]);
    return v;
}

cplx lambda_kernel_log_density(std::span<const cplx> theta, std::span<const double> y, std::span<const double> x) {
    const std::size_t k = y.size();
    if (k < 2 || x.size() != k - 1 || theta.size() < k) throw ContractError("lambda_kernel: need |y| = k >= 2, |x| = k-1");
    cplx v = 0.0;
    for (std::size_t l = 0; l + 1 < k; ++l) {
        if (!(x[l] > 0.0) || !(y[l] > 0.0) || !(y[l + 1] > 0.0)) throw DomainError("lambda_kernel: arguments must be positive");
        v += (theta[k - 1] - theta[l]) * std::log(x[l] / y[l]) - x[l] / y[l] - y[l + 1] / x[l];
    }
    return v;
}

std::vector<double> reflect(std::span<const double> y) {
    std::vector<double> r(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) r[i] = 1.0 / y[y.size() - 1 - i];
    return r;
}

cplx bump_stade_rhs(double s, std::span<const cplx> lambda, std::span<const cplx> nu, bool prime) {
    if (!(s > 0.0)) throw DomainError("bump_stade: s must be positive");
    if (lambda.size() != nu.size()) throw ContractError("bump_stade: lambda and nu must have equal size");
    cplx sum = 0.0;
    for (std::size_t i = 0; i < lambda.size(); ++i) sum += lambda[i] + nu[i];
    const double sign = prime ? 1.0 : -1.0;
    return std::exp(-sign * sum * std::log(s) + log_gamma_product(lambda, nu, sign));
}

BumpStadeResult bump_stade_lhs(double s, std::span<const cplx> lambda, std::span<const cplx> nu, bool prime,
                               double rel_tol) {
    const std::size_t N = lambda.size();
    if (nu.size() != N || N == 0) throw ContractError("bump_stade: lambda and nu must have equal size N >= 1");
    if (N > 2) throw SizeError("bump_stade: quadrature limited to N <= 2");
    if (!(s > 0.0)) throw DomainError("bump_stade: s must be positive");
    for (cplx a : lambda)
        for (cplx b : nu)
            if (!((prime ? 1.0 : -1.0) * (a + b).real() > 0.0))
                throw DomainError("bump_stade: parameters outside the convergence region");
    const double ls = std::log(s);
    BumpStadeResult r;
    if (N == 1) {
        Potential p(1);
        p.linear[0] = -(lambda[0] + nu[0]);
        if (prime)
            p.add_exp_diff(-1, 0, ls);
        else
            p.add_exp_diff(0, -1, ls);
        const auto v = integrate_potential_scaled(p, rel_tol, 40.0, 16, 2, 6);
        r.lhs = std::exp(v.log_scale) * v.mantissa;
        r.est_error = v.rel_error * std::abs(r.lhs);
        r.converged = v.converged;
        return r;
    }
    // Joint potential in (u1, u2, t_lambda, t_nu) only locates the outer box.
    Potential joint(4);
    auto add_psi = [&](std::span<const cplx> th, int t) {
        joint.linear[t] += th[1] - th[0];
        joint.linear[0] -= th[1];
        joint.linear[1] -= th[1];
        joint.add_exp_diff(t, 0, 0.0);
        joint.add_exp_diff(1, t, 0.0);
    };
    add_psi(lambda, 2);
    add_psi(nu, 3);
    if (prime)
        joint.add_exp_diff(-1, 1, ls);
    else
        joint.add_exp_diff(0, -1, ls);
    const MaximizeResult mx = maximize(joint, std::vector<double>(4, 0.0));
    const auto box = level_box(joint, mx, 40.0);
    using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
    WhittakerOptions inner;
    inner.rel_tol = 0.1 * rel_tol;
    // Inner failures only matter where the integrand is not negligible.
    double peak = 0.0, worst = 0.0;
    std::vector<double> u(2);
    auto integrand = [&](double u1) {
        u[1] = u1;
        const auto a = psi_direct(lambda, u, inner);
        const auto b = psi_direct(nu, u, inner);
        const double weight = prime ? std::exp(ls - u[1]) : std::exp(ls + u[0]);
        const cplx v = std::exp(a.log_scale + b.log_scale - weight - mx.value) * a.mantissa * b.mantissa;
        peak = std::max(peak, std::abs(v));
        if (!a.converged || !b.converged) worst = std::max(worst, std::abs(v) * (a.rel_error + b.rel_error));
        return v;
    };
    double err = 0.0;
    const cplx value = GK::integrate(
        [&](double u0) {
            u[0] = u0;
            return GK::integrate(integrand, box[1].lo, box[1].hi, 15, rel_tol);
        },
        box[0].lo, box[0].hi, 15, rel_tol, &err);
    r.lhs = std::exp(mx.value) * value;
    r.est_error = std::exp(mx.value) * err;
    r.converged = err <= 10.0 * rel_tol * std::abs(value) && worst <= rel_tol * peak;
    return r;
}

BumpStadeResult bump_stade(double s, std::span<const cplx> lambda, std::span<const cplx> nu, bool prime, double rel_tol) {
    auto r = bump_stade_lhs(s, lambda, nu, prime, rel_tol);
    r.rhs = bump_stade_rhs(s, lambda, nu, prime);
    r.rel_diff = std::abs(r.lhs - r.rhs) / std::max(std::abs(r.rhs), kTiny);
    return r;
}

double LogGaussianBump::operator()(std::span<const double> u) const {
    double r2 = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) r2 += (u[i] - center[i]) * (u[i] - center[i]);
    return amplitude * std::exp(-r2 / (2.0 * width * width));
}

namespace {

struct InnerGrid {
    std::vector<double> t;
    std::vector<double> w;  // quadrature weight times the real, lambda-free part of the integrand
};

// For lambda = i(a, b), Psi_lambda(e^u) = exp(-i b (u1 + u2)) * sum_j W_j exp(i (b - a) t_j).
InnerGrid inner_grid(std::span<const double> u) {
    const std::vector<cplx> zero(2, 0.0);
    const Potential p = pattern_potential(zero, u);
    const MaximizeResult mx = maximize(p, {0.5 * (u[0] + u[1])});
    const auto box = level_box(p, mx, 45.0);
    InnerGrid g;
    quad::composite_nodes(box[0], 8, 16, quad::Method::GaussLegendre, g.t, g.w);
    for (std::size_t j = 0; j < g.t.size(); ++j) {
        const std::array<double, 1> x{g.t[j]};
        g.w[j] *= std::exp(p.real_value(x));
    }
    return g;
}

double bump_extent(const LogGaussianBump& f) { return std::sqrt(2.0 * 45.0) * f.width; }

}  // namespace

PlancherelResult plancherel_check(const LogGaussianBump& f, const LogGaussianBump& g, std::size_t N) {
    if (N < 1 || N > 2) throw SizeError("plancherel_check: supported for N <= 2");
    if (f.center.size() != N || g.center.size() != N) throw ContractError("plancherel_check: bump centers must have length N");
    if (!(f.width > 0.0) || !(g.width > 0.0)) throw DomainError("plancherel_check: widths must be positive");
    PlancherelResult r;
    // Common box in u containing both bumps.
    std::vector<quad::Interval> ubox(N);
    for (std::size_t i = 0; i < N; ++i)
        ubox[i] = {std::min(f.center[i] - bump_extent(f), g.center[i] - bump_extent(g)),
                   std::max(f.center[i] + bump_extent(f), g.center[i] + bump_extent(g))};
    std::vector<std::vector<double>> ux(N), uw(N);
    for (std::size_t i = 0; i < N; ++i) quad::composite_nodes(ubox[i], 12, 16, quad::Method::GaussLegendre, ux[i], uw[i]);

    // Spectral box: transforms decay like exp(-width^2 |lambda|^2 / 2).
    const double A = std::sqrt(2.0 * 45.0) / std::min(f.width, g.width);
    std::vector<double> ax, aw;
    quad::composite_nodes({-A, A}, 16, 16, quad::Method::GaussLegendre, ax, aw);

    if (N == 1) {
        double lhs = 0.0;
        for (std::size_t i = 0; i < ux[0].size(); ++i) {
            const std::array<double, 1> u{ux[0][i]};
            lhs += uw[0][i] * f(u) * g(u);
        }
        cplx rhs = 0.0;
        for (std::size_t k = 0; k < ax.size(); ++k) {
            cplx F = 0.0, G = 0.0;
            for (std::size_t i = 0; i < ux[0].size(); ++i) {
                const std::array<double, 1> u{ux[0][i]};
                const cplx ph = std::exp(cplx(0.0, -ax[k] * u[0]));
                F += uw[0][i] * f(u) * ph;
                G += uw[0][i] * g(u) * ph;
            }
            rhs += aw[k] * F * std::conj(G);
        }
        r.lhs = lhs;
        r.rhs = rhs / (2.0 * std::numbers::pi);
    } else {
        double lhs = 0.0;
        for (std::size_t i = 0; i < ux[0].size(); ++i)
            for (std::size_t j = 0; j < ux[1].size(); ++j) {
                const std::array<double, 2> u{ux[0][i], ux[1][j]};
                lhs += uw[0][i] * uw[1][j] * f(u) * g(u);
            }
        // With v = u1 + u2 and d = u2 - u1 an isotropic bump splits into
        // exp(-(v - v0)^2 / 4w^2) exp(-(d - d0)^2 / 4w^2), and for lambda = i(a, b)
        // Psi(e^u) = exp(-i sigma v / 2) k(c, d) with sigma = a + b, c = b - a.
        auto factor = [](const LogGaussianBump& h, double x0, double x) {
            return std::exp(-(x - x0) * (x - x0) / (4.0 * h.width * h.width));
        };
        const double fv0 = f.center[0] + f.center[1], fd0 = f.center[1] - f.center[0];
        const double gv0 = g.center[0] + g.center[1], gd0 = g.center[1] - g.center[0];
        const double wmax = std::max(f.width, g.width), wmin = std::min(f.width, g.width);
        const double reach = std::sqrt(2.0) * std::sqrt(2.0 * 45.0) * wmax;
        const quad::Interval vbox{std::min(fv0, gv0) - reach, std::max(fv0, gv0) + reach};
        const quad::Interval dbox{std::min(fd0, gd0) - reach, std::max(fd0, gd0) + reach};
        std::vector<double> vx, vw, dx, dw;
        quad::composite_nodes(vbox, 12, 16, quad::Method::GaussLegendre, vx, vw);
        quad::composite_nodes(dbox, 12, 16, quad::Method::GaussLegendre, dx, dw);

        // sigma part: int F_v conj(G_v) dsigma over sigma in [-2A, 2A]
        std::vector<double> sx, sw;
        quad::composite_nodes({-2.0 * A, 2.0 * A}, 16, 16, quad::Method::GaussLegendre, sx, sw);
        cplx sig = 0.0;
        for (std::size_t k = 0; k < sx.size(); ++k) {
            cplx F = 0.0, G = 0.0;
            for (std::size_t i = 0; i < vx.size(); ++i) {
                const cplx ph = std::exp(cplx(0.0, -0.5 * sx[k] * vx[i]));
                F += vw[i] * factor(f, fv0, vx[i]) * ph;
                G += vw[i] * factor(g, gv0, vx[i]) * ph;
            }
            sig += sw[k] * F * std::conj(G);
        }

        // c part. The Sklyanin weight grows like exp(pi c) while k(c, d) decays like
        // exp(-pi c / 2), so rounding in k limits the usable range of c.
        std::vector<InnerGrid> inner(dx.size());
        for (std::size_t i = 0; i < dx.size(); ++i) {
            const std::array<double, 2> u{-0.5 * dx[i], 0.5 * dx[i]};
            inner[i] = inner_grid(u);
        }
        const double c_max = std::min(std::sqrt(2.0 * 45.0) / wmin, 14.0);
        std::vector<double> cx, cw;
        quad::composite_nodes({-c_max, c_max}, 16, 16, quad::Method::GaussLegendre, cx, cw);
        cplx cpart = 0.0;
        for (std::size_t kc = 0; kc < cx.size(); ++kc) {
            const double c = cx[kc];
            cplx F = 0.0, G = 0.0;
            for (std::size_t i = 0; i < dx.size(); ++i) {
                cplx kv = 0.0;
                for (std::size_t m = 0; m < inner[i].t.size(); ++m)
                    kv += inner[i].w[m] * std::exp(cplx(0.0, c * inner[i].t[m]));
                F += dw[i] * factor(f, fd0, dx[i]) * kv;
                G += dw[i] * factor(g, gd0, dx[i]) * kv;
            }
            // 1 / (Gamma(ic) Gamma(-ic)) = c sinh(pi c) / pi
            const double sk = c * std::sinh(std::numbers::pi * c) / std::numbers::pi;
            cpart += cw[kc] * F * std::conj(G) * sk;
        }
        // du1 du2 = dv dd / 2 in each transform, da db = dsigma dc / 2
        const cplx rhs = f.amplitude * g.amplitude * 0.25 * sig * cpart * 0.5;
        r.lhs = lhs;
        r.rhs = rhs / (4.0 * std::numbers::pi * std::numbers::pi * 2.0);
    }
    r.diff = std::abs(r.rhs - r.lhs);
    return r;
}

}  // namespace grsk
