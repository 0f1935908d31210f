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

#include "grsk/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/special_functions/bessel.hpp>

#include "grsk/arrays.hpp"
#include "grsk/errors.hpp"
#include "grsk/insertion.hpp"
#include "grsk/parallel.hpp"
#include "grsk/quadrature.hpp"
#include "grsk/specfun.hpp"
#include "grsk/whittaker.hpp"

namespace grsk {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx I(0.0, 1.0);

void check_setup(std::size_t n, std::size_t N, const SolvableParams& p, const ContourSpec& c, bool laplace) {
    if (N == 0 || N != p.N()) throw ContractError("contour: N must match theta");
    if (N > 2) throw SizeError("contour: quadrature implemented for N <= 2; use Monte Carlo");
    if (n == 0) throw ContractError("contour: n must be positive");
    p.validate(n);
    if (!p.in_gauge(n)) throw DomainError("contour: parameters must satisfy theta_j < 0 < theta_hat_m");
    for (std::size_t m = 0; m < n; ++m)
        if (!(c.shift + p.theta_hat[m] > 0.0)) throw DomainError("contour: shift crosses a pole");
    if (laplace)
        for (double t : p.theta)
            if (!(c.shift - t > 0.0)) throw DomainError("contour: shift crosses a pole");
}

// Distance from the contour to the nearest pole of the Gamma factors.
double pole_distance(std::size_t n, const SolvableParams& p, const ContourSpec& c, bool laplace) {
    double d = 1e300;
    for (std::size_t m = 0; m < n; ++m) d = std::min(d, c.shift + p.theta_hat[m]);
    if (laplace)
        for (double t : p.theta) d = std::min(d, c.shift - t);
    return std::min(d, 2.0);
}

double log_target(const ContourSpec& c) { return -std::log(std::max(c.target_tail, 1e-300)); }

double sum_gamma_log(std::size_t n, std::size_t N, const SolvableParams& p) {
    double s = 0.0;
    for (std::size_t i = 1; i <= N; ++i)
        for (std::size_t m = 1; m <= n; ++m) s += log_gamma(p.gamma(m, i));
    return s;
}

// |c| sinh(pi |c|) / pi, scaled by exp(-pi (|a| + |b|)), c = b - a.
double sk_scaled(double a, double b) {
    const double c = std::abs(b - a), t = std::abs(a) + std::abs(b);
    return c / (2.0 * kPi) * (std::exp(kPi * (c - t)) - std::exp(-kPi * (c + t)));
}

// Trapezoid over k = -K..K of per-coordinate log factors, N = 1 or 2.
struct Lattice {
    double h = 0.0;
    long K = 0;
    std::vector<cplx> g;  // scaled by exp(pi |a|) when N = 2
    double at(long k) const { return static_cast<double>(k) * h; }
};

ContourValue finish(cplx total, double tail, const Lattice& L, const ContourSpec& c) {
    ContourValue v;
    v.value = total.real();
    v.imag_residue = total.imag();
    v.tail_bound = tail;
    v.T = static_cast<double>(L.K) * L.h;
    v.step = L.h;
    v.nodes = static_cast<std::size_t>(2 * L.K + 1);
    v.truncation_warning = tail > c.target_tail;
    return v;
}

// Sum over the square of g_k g_l sk(a_k, b_l), plus the boundary ring for the tail estimate.
std::pair<cplx, double> sum_n2(const Lattice& L) {
    cplx total = 0.0;
    double ring = 0.0;
    for (long k = -L.K; k <= L.K; ++k) {
        const cplx gk = L.g[static_cast<std::size_t>(k + L.K)];
        cplx row = 0.0;
        for (long l = -L.K; l <= L.K; ++l) {
            const cplx term = L.g[static_cast<std::size_t>(l + L.K)] * sk_scaled(L.at(k), L.at(l));
            row += term;
            if (std::labs(k) == L.K || std::labs(l) == L.K) ring += std::abs(gk * term);
        }
        total += gk * row;
    }
    return {total, ring};
}

// c sinh(pi c) / pi * K_{ic}(x). The series -c Im I_{ic}(x) has no cancellation for small x;
// the cosine integral is used once x dominates c.
double sk_K(double c, double x) {
    if (c == 0.0) return 0.0;
    if (3.0 * x >= kPi * c && x > 2.0) {
        if (x > 745.0) return 0.0;
        const double S = std::acosh(std::max(1.0, 750.0 / x));
        const double hs = 0.04;
        const long ns = static_cast<long>(std::ceil(S / hs));
        double sum = 0.5 * std::exp(-x);
        for (long j = 1; j <= ns; ++j) {
            const double s = static_cast<double>(j) * hs;
            sum += std::cos(c * s) * std::exp(-x * std::cosh(s));
        }
        return sum * hs * c * std::sinh(kPi * c) / kPi;
    }
    const double lx = std::log(0.5 * x);
    cplx term = std::exp(cplx(0.0, c * lx) - log_gamma(cplx(1.0, c)));
    cplx sum = term;
    const double q = 0.25 * x * x;
    for (int k = 1; k < 500; ++k) {
        term *= q / (static_cast<double>(k) * cplx(static_cast<double>(k), c));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return -c * sum.imag();
}

// Everything needed to evaluate the N = 2 density at any (V, delta), V = u1 + u2, delta = (u1 - u2)/2.
class Density2 {
public:
    Density2(std::size_t n, const SolvableParams& p, const ContourSpec& c, double vmax, double dmax)
        : p_(p), shift_(c.shift) {
        check_setup(n, 2, p, c, false);
        const double Lt = log_target(c);
        const double tau = 0.5 * pole_distance(n, p, c, false);
        h_ = c.step > 0.0 ? c.step
                          : std::min(0.2, 2.0 * kPi * tau / (Lt + 5.0 + tau * vmax + 2.0 * tau * (dmax + 1.0)));
        const double rate = 0.5 * kPi * (static_cast<double>(n) - 1.0);
        const double T = c.T > 0.0 ? c.T : std::min(60.0, (Lt + 12.0) / rate);
        K_ = static_cast<long>(std::ceil(T / h_));
        g_.resize(static_cast<std::size_t>(2 * K_ + 1));
        for (long k = -K_; k <= K_; ++k) {
            cplx lg = 0.0;
            for (std::size_t m = 0; m < n; ++m) lg += log_gamma(cplx(shift_ + p.theta_hat[m], h_ * static_cast<double>(k)));
            g_[static_cast<std::size_t>(k + K_)] = std::exp(lg);
        }
        log_norm_ = -sum_gamma_log(n, 2, p) - std::log(8.0 * kPi * kPi);
    }

    double T() const { return h_ * static_cast<double>(K_); }
    double step() const { return h_; }
    long K() const { return K_; }

    // 2 K_{ic}(2 e^{-delta}) for c = q h, q = 0..2K, times sk and h^2.
    std::vector<double> kernel_row(double delta) const {
        const double x = 2.0 * std::exp(-delta);
        std::vector<double> r(static_cast<std::size_t>(2 * K_ + 1));
        for (long q = 0; q <= 2 * K_; ++q) {
            const double cq = h_ * static_cast<double>(q);
            r[static_cast<std::size_t>(q)] = 2.0 * sk_K(cq, x) * h_ * h_;
        }
        return r;
    }

    // H(V, q) = sum_k g_k g_{k+q} exp(i (2k + q) h V / 2), q = -2K..2K.
    std::vector<cplx> phase_row(double V) const {
        std::vector<cplx> H(static_cast<std::size_t>(4 * K_ + 1), 0.0);
        std::vector<cplx> e(static_cast<std::size_t>(2 * K_ + 1));
        for (long k = -K_; k <= K_; ++k) e[static_cast<std::size_t>(k + K_)] = std::exp(I * (h_ * static_cast<double>(k) * 0.5 * V));
        for (long k = -K_; k <= K_; ++k) {
            const cplx gk = g_[static_cast<std::size_t>(k + K_)] * e[static_cast<std::size_t>(k + K_)];
            for (long l = -K_; l <= K_; ++l) {
                H[static_cast<std::size_t>(l - k + 2 * K_)] +=
                    gk * g_[static_cast<std::size_t>(l + K_)] * e[static_cast<std::size_t>(l + K_)];
            }
        }
        return H;
    }

    cplx value(double V, double delta, const std::vector<double>& krow, const std::vector<cplx>& H,
               double* ring = nullptr) const {
        cplx s = 0.0;
        for (long q = -2 * K_; q <= 2 * K_; ++q) {
            const cplx t = krow[static_cast<std::size_t>(std::labs(q))] * H[static_cast<std::size_t>(q + 2 * K_)];
            s += t;
            if (ring && std::labs(q) >= 2 * K_ - 1) *ring += std::abs(t);
        }
        const double x = 2.0 * std::exp(-delta);
        const double nu = std::abs(p_.theta[1] - p_.theta[0]);
        const double psi = 2.0 * boost::math::cyl_bessel_k(nu, x) * std::exp(-0.5 * (p_.theta[0] + p_.theta[1]) * V);
        const double scale = psi * std::exp(shift_ * V + log_norm_);
        if (ring) *ring *= std::abs(scale);
        return s * scale;
    }

private:
    SolvableParams p_;
    double shift_ = 0.0;
    double h_ = 0.1;
    long K_ = 0;
    double log_norm_ = 0.0;
    std::vector<cplx> g_;
};

}  // namespace

ContourValue laplace_contour(double s, std::size_t n, std::size_t N, const SolvableParams& p, const ContourSpec& c) {
    if (!(s > 0.0)) throw DomainError("laplace_contour: s must be positive");
    check_setup(n, N, p, c, true);
    const double Lt = log_target(c);
    const double ls = std::log(s);
    const double dist = pole_distance(n, p, c, true);
    Lattice L;
    L.h = c.step > 0.0 ? c.step
                       : std::min(0.25, kPi * dist / (Lt + 5.0 + 0.5 * dist * static_cast<double>(N) * std::abs(ls)));
    const double dn = static_cast<double>(n);
    const double rate = N == 1 ? 0.5 * kPi * (dn + 1.0) : 0.5 * kPi * dn;
    double T = c.T > 0.0 ? c.T : (Lt + 10.0) / rate;
    double theta_sum = 0.0;
    for (double t : p.theta) theta_sum += t;
    const double log_const = (theta_sum - static_cast<double>(N) * c.shift) * ls - sum_gamma_log(n, N, p);

    for (int attempt = 0;; ++attempt) {
        L.K = static_cast<long>(std::ceil(T / L.h));
        L.g.assign(static_cast<std::size_t>(2 * L.K + 1), 0.0);
        for (long k = -L.K; k <= L.K; ++k) {
            const double a = L.at(k);
            const cplx lam(c.shift, a);
            cplx lg = -I * a * ls;
            for (double t : p.theta) lg += log_gamma(lam - t);
            for (std::size_t m = 0; m < n; ++m) lg += log_gamma(lam + p.theta_hat[m]);
            if (N == 2) lg += kPi * std::abs(a);
            L.g[static_cast<std::size_t>(k + L.K)] = std::exp(lg + log_const / static_cast<double>(N));
        }
        cplx total;
        double tail;
        if (N == 1) {
            cplx sum = 0.0;
            for (const cplx& v : L.g) sum += v;
            total = sum * L.h / (2.0 * kPi);
            tail = 10.0 * (std::abs(L.g.front()) + std::abs(L.g.back())) / (2.0 * kPi * rate);
        } else {
            auto [sum, ring] = sum_n2(L);
            const double w = L.h * L.h / (8.0 * kPi * kPi);
            total = sum * w;
            tail = 10.0 * ring * w / (L.h * rate);
        }
        if (tail <= c.target_tail || c.T > 0.0 || attempt >= 6) return finish(total, tail, L, c);
        T *= 1.3;
    }
}

ContourValue mu_density_contour(std::span<const double> y, std::size_t n, std::size_t N, const SolvableParams& p,
                                const ContourSpec& c) {
    if (y.size() != N) throw ContractError("mu_density_contour: y must have length N");
    if (n < N) throw ContractError("mu_density_contour: n < N; transpose the weights and swap n and N");
    for (double v : y)
        if (!(v > 0.0)) throw DomainError("mu_density_contour: y must be positive");
    check_setup(n, N, p, c, false);
    if (N == 1) {
        const double Lt = log_target(c);
        Lattice L;
        L.h = c.step > 0.0 ? c.step
                           : std::min(0.25, kPi * pole_distance(n, p, c, false) /
                                                (Lt + 5.0 + pole_distance(n, p, c, false) * std::abs(std::log(y[0]))));
        const double rate = 0.5 * kPi * static_cast<double>(n);
        const double T = c.T > 0.0 ? c.T : (Lt + 10.0) / rate;
        L.K = static_cast<long>(std::ceil(T / L.h));
        const double ly = std::log(y[0]);
        const double lc = (c.shift - p.theta[0]) * ly - sum_gamma_log(n, 1, p);
        cplx sum = 0.0;
        double ends = 0.0;
        for (long k = -L.K; k <= L.K; ++k) {
            const double a = L.at(k);
            cplx lg = I * a * ly + lc;
            for (std::size_t m = 0; m < n; ++m) lg += log_gamma(cplx(c.shift + p.theta_hat[m], a));
            const cplx v = std::exp(lg);
            sum += v;
            if (std::labs(k) == L.K) ends += std::abs(v);
        }
        return finish(sum * L.h / (2.0 * kPi), 10.0 * ends / (2.0 * kPi * rate), L, c);
    }
    const double u1 = std::log(y[0]), u2 = std::log(y[1]);
    const double V = u1 + u2, delta = 0.5 * (u1 - u2);
    Density2 D(n, p, c, std::abs(V), std::abs(delta));
    double ring = 0.0;
    const cplx v = D.value(V, delta, D.kernel_row(delta), D.phase_row(V), &ring);
    ContourValue out;
    out.value = v.real();
    out.imag_residue = v.imag();
    out.T = D.T();
    out.step = D.step();
    out.nodes = static_cast<std::size_t>(2 * D.K() + 1);
    out.tail_bound = 10.0 * ring;
    out.truncation_warning = out.tail_bound > c.target_tail;
    return out;
}

namespace {

struct Grid2 {
    std::vector<double> V, Vw, D, Dw;
};

Grid2 make_grid(double lo, double hi, std::size_t panels) {
    if (!(hi > lo)) throw ContractError("mu_density_mass: empty box");
    Grid2 g;
    quad::composite_nodes({2.0 * lo, 2.0 * hi}, panels, 8, quad::Method::GaussLegendre, g.V, g.Vw);
    quad::composite_nodes({-0.5 * (hi - lo), 0.5 * (hi - lo)}, panels, 8, quad::Method::GaussLegendre, g.D, g.Dw);
    return g;
}

// density[i][j] at (V_i, D_j); the (V, delta) map has unit Jacobian.
std::vector<std::vector<double>> tabulate(std::size_t n, const SolvableParams& p, const Grid2& g, double lo, double hi,
                                          const ContourSpec& c) {
    const double vmax = 2.0 * std::max(std::abs(lo), std::abs(hi));
    Density2 D(n, p, c, vmax, 0.5 * (hi - lo));
    std::vector<std::vector<double>> krows(g.D.size());
    for (std::size_t j = 0; j < g.D.size(); ++j) krows[j] = D.kernel_row(g.D[j]);
    std::vector<std::vector<double>> out(g.V.size(), std::vector<double>(g.D.size()));
    for (std::size_t i = 0; i < g.V.size(); ++i) {
        const auto H = D.phase_row(g.V[i]);
        for (std::size_t j = 0; j < g.D.size(); ++j) out[i][j] = D.value(g.V[i], g.D[j], krows[j], H).real();
    }
    return out;
}

}  // namespace

DensityMass mu_density_mass(std::size_t n, const SolvableParams& p, double lo, double hi, std::size_t panels,
                            const ContourSpec& c) {
    const Grid2 g = make_grid(lo, hi, panels);
    const auto tab = tabulate(n, p, g, lo, hi, c);
    DensityMass m;
    for (std::size_t i = 0; i < g.V.size(); ++i)
        for (std::size_t j = 0; j < g.D.size(); ++j) {
            m.mass += g.Vw[i] * g.Dw[j] * tab[i][j];
            m.min_value = std::min(m.min_value, tab[i][j]);
        }
    m.points = g.V.size() * g.D.size();
    return m;
}

std::vector<double> mu_log_y1_cdf(std::size_t n, const SolvableParams& p, std::span<const double> xs, double lo,
                                  double hi, std::size_t panels, const ContourSpec& c) {
    const Grid2 g = make_grid(lo, hi, panels);
    const auto tab = tabulate(n, p, g, lo, hi, c);
    const auto& rule = quad::gauss_legendre(8);
    const double dlo = -0.5 * (hi - lo), pw = (hi - lo) / static_cast<double>(panels);
    // Partial integral in delta of the degree-7 interpolant through each panel's nodes.
    auto partial = [&](const std::vector<double>& f, double cut) {
        if (cut <= dlo) return 0.0;
        double s = 0.0;
        for (std::size_t P = 0; P < panels; ++P) {
            const double a = dlo + pw * static_cast<double>(P), b = a + pw;
            const std::size_t off = P * 8;
            if (cut >= b) {
                for (std::size_t m = 0; m < 8; ++m) s += g.Dw[off + m] * f[off + m];
                continue;
            }
            const double half = 0.5 * (cut - a);
            for (std::size_t q = 0; q < 8; ++q) {
                const double x = a + half * (rule.nodes[q] + 1.0);
                double interp = 0.0;
                for (std::size_t m = 0; m < 8; ++m) {
                    double L = 1.0;
                    for (std::size_t r = 0; r < 8; ++r)
                        if (r != m) L *= (x - g.D[off + r]) / (g.D[off + m] - g.D[off + r]);
                    interp += L * f[off + m];
                }
                s += half * rule.weights[q] * interp;
            }
            break;
        }
        return s;
    };
    std::vector<double> out;
    for (double x : xs) {
        double s = 0.0;
        for (std::size_t i = 0; i < g.V.size(); ++i) s += g.Vw[i] * partial(tab[i], x - 0.5 * g.V[i]);
        out.push_back(s);
    }
    return out;
}

double polymer_partition(std::span<const double> d, std::size_t n, std::size_t N) {
    if (d.size() < n * N) throw ContractError("polymer_partition: too few weights");
    std::vector<double> Z(N, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double left = 0.0;
        for (std::size_t j = 0; j < N; ++j) {
            const double up = i == 0 ? (j == 0 ? 1.0 : 0.0) : Z[j];
            Z[j] = d[i * N + j] * (up + left);
            left = Z[j];
        }
    }
    return Z[N - 1];
}

std::vector<double> sample_z_N1(std::size_t n, std::size_t N, const SolvableParams& p, std::size_t replicas,
                                std::uint64_t seed, unsigned threads) {
    p.validate(n);
    if (N != p.N()) throw ContractError("sample_z_N1: N must match theta");
    return run_replicas(
        replicas, seed,
        [&](RngStream& rng, std::size_t) {
            std::vector<double> d(n * N);
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t j = 1; j <= N; ++j) d[(i - 1) * N + j - 1] = sample_inverse_gamma(p.gamma(i, j), rng);
            return polymer_partition(d, n, N);
        },
        threads);
}

McEstimate laplace_mc(double s, std::size_t n, std::size_t N, const SolvableParams& p, std::size_t replicas,
                      std::uint64_t seed, unsigned threads) {
    if (!(s > 0.0)) throw DomainError("laplace_mc: s must be positive");
    auto z = sample_z_N1(n, N, p, replicas, seed, threads);
    for (double& v : z) v = std::exp(-s * v);
    const auto sm = stats::summarize(z);
    return {sm.mean, sm.std_error, replicas, seed};
}

double mu_NN_density(std::span<const double> y, std::size_t N, const SolvableParams& p) {
    if (y.size() != N || p.N() != N) throw ContractError("mu_NN_density: sizes must match N");
    if (N > kMaxQuadratureN) throw SizeError("mu_NN_density: N <= 3");
    p.validate(N);
    for (double v : y)
        if (!(v > 0.0)) throw DomainError("mu_NN_density: y must be positive");
    const std::vector<double> th_hat(p.theta_hat.begin(), p.theta_hat.begin() + static_cast<std::ptrdiff_t>(N));
    const auto a = whittaker_eval_real(p.theta, y);
    const auto b = whittaker_eval_real(th_hat, y);
    const double lg = -sum_gamma_log(N, N, p) - 1.0 / y[N - 1] + a.log_scale + b.log_scale;
    return std::exp(lg) * (a.mantissa * b.mantissa).real();
}

double mu_NN_mass(std::size_t N, const SolvableParams& p, double rel_tol) {
    if (p.N() != N) throw ContractError("mu_NN_mass: N must match theta");
    if (N > 2) throw SizeError("mu_NN_mass: N <= 2");
    p.validate(N);
    std::vector<cplx> lam(p.theta.begin(), p.theta.end());
    std::vector<cplx> nu(p.theta_hat.begin(), p.theta_hat.begin() + static_cast<std::ptrdiff_t>(N));
    const auto r = bump_stade_lhs(1.0, lam, nu, true, rel_tol);
    return r.lhs.real() * std::exp(-sum_gamma_log(N, N, p));
}

KsReport z_NN_check(const SolvableParams& p, std::size_t replicas, std::uint64_t seed, unsigned threads) {
    const std::size_t N = p.N();
    p.validate(N);
    double shape = 0.0;
    for (std::size_t i = 1; i <= N; ++i) shape += p.gamma(i, i);
    auto z = run_replicas(
        replicas, seed,
        [&](RngStream& rng, std::size_t) {
            WeightMatrix d(N, N);
            for (std::size_t i = 1; i <= N; ++i)
                for (std::size_t j = 1; j <= N; ++j) d(i, j) = sample_inverse_gamma(p.gamma(i, j), rng);
            return evolve_from_empty(d, N)(N, N);
        },
        threads);
    const auto t = stats::ks_test(z, [shape](double x) { return inverse_gamma_cdf(x, shape); });
    return {t.statistic, t.p_value, shape, replicas, seed};
}

}  // namespace grsk
