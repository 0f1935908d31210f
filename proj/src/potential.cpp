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

#include "grsk/potential.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "grsk/errors.hpp"
#include "grsk/linalg.hpp"

namespace grsk {

namespace {

double term_exponent(const ExpTerm& e, std::span<const double> t) {
    double s = e.shift;
    for (auto [i, c] : e.coef) s += c * t[i];
    return s;
}


}  // namespace

void Potential::add_exp_diff(int u, int v, double shift, double weight) {
    ExpTerm e;
    if (u >= 0) e.coef.emplace_back(u, 1.0);
    if (v >= 0) e.coef.emplace_back(v, -1.0);
    e.shift = shift;
    e.weight = weight;
    terms.push_back(std::move(e));
}

cplx Potential::value(std::span<const double> t) const {
    cplx v = constant;
    for (int i = 0; i < dim_; ++i) v += linear[i] * t[i];
    for (const auto& e : terms) v -= e.weight * std::exp(term_exponent(e, t));
    return v;
}

double Potential::real_value(std::span<const double> t) const {
    double v = constant.real();
    for (int i = 0; i < dim_; ++i) v += linear[i].real() * t[i];
    for (const auto& e : terms) v -= e.weight * std::exp(term_exponent(e, t));
    return v;
}

void Potential::gradient_hessian(std::span<const double> t, std::vector<double>& g, std::vector<double>& h) const {
    g.assign(dim_, 0.0);
    h.assign(static_cast<std::size_t>(dim_) * dim_, 0.0);
    for (int i = 0; i < dim_; ++i) g[i] = linear[i].real();
    for (const auto& e : terms) {
        const double w = e.weight * std::exp(term_exponent(e, t));
        for (auto [i, ci] : e.coef) {
            g[i] -= w * ci;
            for (auto [j, cj] : e.coef) h[i * dim_ + j] -= w * ci * cj;
        }
    }
}

CenteredPotential::CenteredPotential(const Potential& p, std::span<const double> t0)
    : p_(&p), t0_(t0.begin(), t0.end()) {
    scale_.reserve(p.terms.size());
    for (const auto& e : p.terms) scale_.push_back(e.weight * std::exp(term_exponent(e, t0)));
    imag0_ = p.value(t0).imag();
}

cplx CenteredPotential::value(std::span<const double> t) const {
    cplx v(0.0, imag0_);
    for (int i = 0; i < p_->dim(); ++i) v += p_->linear[i] * (t[i] - t0_[i]);
    for (std::size_t k = 0; k < scale_.size(); ++k) {
        double a = 0.0;
        for (auto [i, c] : p_->terms[k].coef) a += c * (t[i] - t0_[i]);
        v -= scale_[k] * std::expm1(a);
    }
    return v;
}

MaximizeResult maximize(const Potential& p, std::vector<double> t, double tol, int fixed_index) {
    const int d = p.dim();
    MaximizeResult r;
    if (static_cast<int>(t.size()) != d) t.assign(d, 0.0);
    const std::vector<double> origin = t;
    auto finish = [&](double gn, int it) {
        r.argmax = t;
        r.value = p.real_value(t);
        r.grad_norm = gn;
        r.iterations = it;
        return r;
    };
    std::vector<double> g, h, step;
    double f = p.real_value(t);
    bool stalled = false;
    for (int it = 0; it < 500; ++it) {
        p.gradient_hessian(t, g, h);
        if (fixed_index >= 0) {
            g[fixed_index] = 0.0;
            for (int j = 0; j < d; ++j) h[fixed_index * d + j] = h[j * d + fixed_index] = 0.0;
            h[fixed_index * d + fixed_index] = -1.0;
        }
        double gn = 0.0, scale = 1.0;
        for (double x : g) gn += x * x;
        gn = std::sqrt(gn);
        for (int i = 0; i < d; ++i) scale = std::max(scale, std::abs(h[i * d + i]));
        if (gn < tol * scale || stalled) return finish(gn, it);
        linalg::Matrix neg(d, std::vector<double>(d));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) neg[i][j] = -h[i * d + j];
        double damp = 0.0;
        while (!linalg::cholesky_solve(neg, g, step)) {
            damp = damp == 0.0 ? 1e-10 * scale : damp * 10.0;
            for (int i = 0; i < d; ++i) neg[i][i] = -h[i * d + i] + damp;
            if (damp > 1e30) throw ConvergenceError("maximize: Hessian not negative definite");
        }
        // Cap the step: exponentials punish overshoot badly.
        double sn = 0.0;
        for (double x : step) sn += x * x;
        sn = std::sqrt(sn);
        double alpha = sn > 5.0 ? 5.0 / sn : 1.0;
        double slope = 0.0;
        for (int i = 0; i < d; ++i) slope += g[i] * step[i];
        std::vector<double> trial(d);
        for (;;) {
            for (int i = 0; i < d; ++i) trial[i] = t[i] + alpha * step[i];
            const double ft = p.real_value(trial);
            if (std::isfinite(ft) && ft >= f + 1e-4 * alpha * slope) {
                stalled = trial == t || (ft == f && gn < 1e-6 * scale);
                f = ft;
                t = trial;
                break;
            }
            alpha *= 0.5;
            if (alpha < 1e-14) {
                // No further progress is representable; accept if nearly stationary.
                if (gn < std::max(tol, 1e-7) * 1e3 * scale) return finish(gn, it);
                throw ConvergenceError("maximize: line search failed");
            }
        }
        for (int i = 0; i < d; ++i)
            if (std::abs(t[i] - origin[i]) > 1e3) throw UnboundedError("maximize: objective appears unbounded");
    }
    throw ConvergenceError("maximize: iteration limit");
}

std::vector<quad::Interval> level_box(const Potential& p, const MaximizeResult& mx, double drop) {
    const int d = p.dim();
    const double target = mx.value - drop;
    std::vector<quad::Interval> box(d);
    for (int i = 0; i < d; ++i) {
        for (int side = -1; side <= 1; side += 2) {
            // Profile of coordinate i: maximum over the others with t_i held at c.
            std::vector<double> warm = mx.argmax;
            auto profile = [&](double c) {
                if (d == 1) {
                    const std::array<double, 1> x{c};
                    return p.real_value(x);
                }
                std::vector<double> start = warm;
                start[i] = c;
                try {
                    const MaximizeResult m = maximize(p, start, 1e-9, i);
                    if (m.value > target) warm = m.argmax;
                    return m.value;
                } catch (const UnboundedError&) {
                    return std::numeric_limits<double>::infinity();
                }
            };
            const double c0 = mx.argmax[i];
            // Start from the curvature scale so narrow peaks are resolved.
            std::vector<double> g, h;
            p.gradient_hessian(mx.argmax, g, h);
            const double curv = std::max(-h[i * d + i], 1e-300);
            double step = std::min(0.5, std::sqrt(2.0 * drop / curv));
            double inner = c0, outer = c0 + side * step;
            while (profile(outer) > target) {
                inner = outer;
                step *= 2.0;
                outer = c0 + side * step;
                if (step > 1e4) throw ConvergenceError("level_box: integrand does not decay");
            }
            for (int it = 0; it < 60 && std::abs(outer - inner) > 1e-3 * std::abs(outer - c0); ++it) {
                const double mid = 0.5 * (inner + outer);
                (profile(mid) > target ? inner : outer) = mid;
            }
            (side < 0 ? box[i].lo : box[i].hi) = outer;
        }
    }
    return box;
}

ScaledIntegral integrate_potential_scaled(const Potential& p, const std::function<cplx(std::span<const double>)>& factor,
                                          double rel_tol, double drop, std::size_t nodes, std::size_t panels,
                                          int max_doublings) {
    const MaximizeResult mx = maximize(p, std::vector<double>(p.dim(), 0.0));
    quad::QuadratureSpec spec;
    spec.box = level_box(p, mx, drop);
    spec.nodes = nodes;
    spec.panels = panels;
    spec.tolerance = rel_tol;
    const double f0 = mx.value;
    const CenteredPotential centered(p, mx.argmax);
    auto est = quad::integrate_tensor_adaptive(
        [&](std::span<const double> t) {
            const cplx e = std::exp(centered.value(t));
            return factor ? e * factor(t) : e;
        },
        spec, max_doublings);
    ScaledIntegral r;
    r.log_scale = f0;
    r.mantissa = est.value;
    r.rel_error = est.error / std::max(std::abs(est.value), std::numeric_limits<double>::min());
    r.converged = est.converged;
    return r;
}

ScaledIntegral integrate_potential_scaled(const Potential& p, double rel_tol, double drop, std::size_t nodes,
                                          std::size_t panels, int max_doublings) {
    return integrate_potential_scaled(p, nullptr, rel_tol, drop, nodes, panels, max_doublings);
}

PotentialIntegral integrate_potential(const Potential& p, double rel_tol, double drop, std::size_t nodes,
                                      std::size_t panels, int max_doublings) {
    const auto s = integrate_potential_scaled(p, rel_tol, drop, nodes, panels, max_doublings);
    PotentialIntegral r;
    r.value = std::exp(s.log_scale) * s.mantissa;
    r.error = s.rel_error * std::abs(r.value);
    r.converged = s.converged;
    return r;
}

GaussianProposal::GaussianProposal(const Potential& p, const MaximizeResult& mx, double widen)
    : mean_(mx.argmax), widen_(widen) {
    const int d = p.dim();
    std::vector<double> g, h;
    p.gradient_hessian(mx.argmax, g, h);
    linalg::Matrix a(d, std::vector<double>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a[i][j] = -h[i * d + j];
    chol_ = linalg::cholesky(a);
    if (chol_.empty() && d > 0) throw ConvergenceError("GaussianProposal: Hessian not negative definite");
    double log_det_c = 0.0;
    for (int i = 0; i < d; ++i) log_det_c += std::log(chol_[i][i]);
    // log N(x) = -d/2 log(2 pi) - d log(widen) + log det C - |z|^2 / 2
    log_norm_ = -0.5 * d * std::log(2.0 * std::numbers::pi) - d * std::log(widen) + log_det_c;
}

double GaussianProposal::draw(RngStream& rng, std::vector<double>& x) const {
    const int d = dim();
    std::vector<double> z(d);
    double zz = 0.0;
    for (int i = 0; i < d; ++i) {
        z[i] = rng.normal();
        zz += z[i] * z[i];
    }
    // x - mean = widen * C^{-T} z
    x.assign(d, 0.0);
    for (int i = d; i-- > 0;) {
        double s = z[i];
        for (int k = i + 1; k < d; ++k) s -= chol_[k][i] * x[k];
        x[i] = s / chol_[i][i];
    }
    for (int i = 0; i < d; ++i) x[i] = mean_[i] + widen_ * x[i];
    return log_norm_ - 0.5 * zz;
}

double GaussianProposal::log_density(std::span<const double> x) const {
    const int d = dim();
    // z = C^T (x - mean) / widen
    double zz = 0.0;
    for (int i = 0; i < d; ++i) {
        double s = 0.0;
        for (int k = i; k < d; ++k) s += chol_[k][i] * (x[k] - mean_[k]);
        s /= widen_;
        zz += s * s;
    }
    return log_norm_ - 0.5 * zz;
}

ImportanceIntegral integrate_potential_mc(const Potential& p, std::size_t samples, RngStream& rng, double widen) {
    if (samples < 2) throw ContractError("integrate_potential_mc: need at least two samples");
    const MaximizeResult mx = maximize(p, std::vector<double>(p.dim(), 0.0));
    const GaussianProposal q(p, mx, widen);
    const CenteredPotential centered(p, mx.argmax);
    std::vector<double> x;
    cplx sum = 0.0;
    double sum_abs2 = 0.0, sum_w = 0.0, sum_w2 = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double lq = q.draw(rng, x);
        const cplx w = std::exp(centered.value(x) - lq);
        sum += w;
        sum_abs2 += std::norm(w);
        sum_w += std::abs(w);
        sum_w2 += std::norm(w);
    }
    const double n = static_cast<double>(samples);
    ImportanceIntegral r;
    r.log_scale = mx.value;
    r.mantissa = sum / n;
    const double var = std::max(0.0, (sum_abs2 - std::norm(sum) / n) / (n - 1.0));
    r.rel_error = std::sqrt(var / n) / std::max(std::abs(r.mantissa), std::numeric_limits<double>::min());
    r.ess = sum_w * sum_w / std::max(sum_w2, std::numeric_limits<double>::min());
    r.samples = samples;
    return r;
}

}  // namespace grsk
