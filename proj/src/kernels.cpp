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


#include "grsk/kernels.hpp"

#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "grsk/errors.hpp"
#include "grsk/insertion.hpp"
#include "grsk/parallel.hpp"
#include "grsk/potential.hpp"
#include "grsk/whittaker.hpp"

namespace grsk {

namespace {

void require_positive(std::span<const double> v, const char* who) {
    for (double x : v)
        if (!(x > 0.0) || !std::isfinite(x)) throw DomainError(std::string(who) + ": arguments must be positive");
}

// log of Gamma(g)^{-1} (y / yt)^g exp(-y / yt)
double jump_log_density_logs(double ly, double lyt, double g) {
    const double r = ly - lyt;
    return g * r - std::exp(r) - log_gamma(g);
}
double jump_log_density(double y, double yt, double g) { return jump_log_density_logs(std::log(y), std::log(yt), g); }

using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Integral over the whole line in a log coordinate centered at c; points whose
// exponential leaves the normal range contribute nothing.
double gk(const std::function<double(double)>& f, double c, double tol, double* err = nullptr) {
    return GK::integrate(
        [&](double s) {
            const double t = s + c;
            return std::abs(t) > 700.0 ? 0.0 : f(t);
        },
        -kInf, kInf, 12, tol, err);
}

}  // namespace

KernelContext::KernelContext(SolvableParams p, std::size_t n_, std::size_t N_) : params(std::move(p)), n(n_), N(N_) {
    if (N == 0 || N > params.N()) throw ContractError("KernelContext: N out of range");
    if (n == 0) throw ContractError("KernelContext: time index is 1-based");
    params.validate(n);
}

double P_log_density(std::span<const double> y, std::span<const double> yt, const KernelContext& ctx) {
    if (y.size() != ctx.N || yt.size() != ctx.N) throw ContractError("P_density: dimension mismatch");
    require_positive(y, "P_density");
    require_positive(yt, "P_density");
    double v = 0.0;
    for (std::size_t j = 0; j < ctx.N; ++j) v += jump_log_density(y[j], yt[j], ctx.gamma(j + 1));
    for (std::size_t i = 0; i + 1 < ctx.N; ++i) v -= yt[i + 1] / y[i];
    return v;
}

double P_density(std::span<const double> y, std::span<const double> yt, const KernelContext& ctx) {
    return std::exp(P_log_density(y, yt, ctx));
}

WeightedSample P_sample(std::span<const double> y, const KernelContext& ctx, RngStream& rng) {
    if (y.size() != ctx.N) throw ContractError("P_sample: dimension mismatch");
    require_positive(y, "P_sample");
    WeightedSample s;
    s.state.resize(ctx.N);
    for (std::size_t j = 0; j < ctx.N; ++j) s.state[j] = sample_inverse_gamma(ctx.gamma(j + 1), rng) * y[j];
    double kill = 0.0;
    for (std::size_t i = 0; i + 1 < ctx.N; ++i) kill += s.state[i + 1] / y[i];
    s.weight = std::exp(-kill);
    return s;
}

double Lambda_density(std::span<const double> y, std::span<const double> x, std::size_t k, std::span<const double> theta) {
    if (y.size() != k || theta.size() < k) throw ContractError("Lambda_density: dimension mismatch");
    std::vector<cplx> th(theta.begin(), theta.end());
    return std::exp(lambda_kernel_log_density(th, y, x).real());
}

double K_density(std::span<const double> y, const TriangularArray& z, std::span<const double> theta) {
    const std::size_t N = y.size();
    if (z.N() != N || !z.full() || theta.size() != N) throw ContractError("K_density: dimension mismatch");
    require_positive(y, "K_density");
    for (std::size_t l = 1; l <= N; ++l)
        if (z(N, l) != y[l - 1]) return 0.0;
    if (N == 1) return 1.0;
    std::vector<cplx> th(theta.begin(), theta.end());
    double v = 0.0;
    for (std::size_t k = N; k >= 2; --k) {
        const auto upper = z.row(k - 1), lower = z.row(k);
        v += lambda_kernel_log_density(std::span<const cplx>(th).first(k), lower, upper).real();
    }
    return std::exp(v);
}

std::vector<double> L_apply(std::span<const double> x, std::span<const double> y, std::span<const double> xt, double a) {
    const std::size_t k = y.size();
    if (k == 0 || x.size() + 1 != k || xt.size() + 1 != k) throw ContractError("L_apply: rows must have lengths k-1, k, k-1");
    std::vector<double> yt(k);
    if (k == 1) {
        yt[0] = a * y[0];
        return yt;
    }
    yt[0] = a * (y[0] + xt[0]);
    for (std::size_t l = 1; l + 1 < k; ++l)
        yt[l] = y[l - 1] * xt[l - 1] / x[l - 1] * (y[l] + xt[l]) / (y[l - 1] + xt[l - 1]);
    yt[k - 1] = y[k - 1] * y[k - 2] * xt[k - 2] / ((y[k - 2] + xt[k - 2]) * x[k - 2]);
    return yt;
}

std::vector<double> L_push(std::span<const double> x, std::span<const double> y, std::span<const double> xt,
                           double gamma, RngStream& rng) {
    require_positive(x, "L_push");
    require_positive(y, "L_push");
    require_positive(xt, "L_push");
    return L_apply(x, y, xt, sample_inverse_gamma(gamma, rng));
}

double L_density(std::span<const double> x, std::span<const double> y, std::span<const double> xt,
                 std::span<const double> yt, double gamma) {
    require_positive(yt, "L_density");
    if (yt.size() != y.size()) throw ContractError("L_density: dimension mismatch");
    const double base = y[0] + (xt.empty() ? 0.0 : xt[0]);
    const auto det = L_apply(x, y, xt, yt[0] / base);
    for (std::size_t l = 1; l < yt.size(); ++l)
        if (std::abs(det[l] - yt[l]) > 1e-12 * std::abs(det[l])) return 0.0;
    return std::exp(jump_log_density(base, yt[0], gamma));
}

TriangularArray Pi_step(const TriangularArray& z, const KernelContext& ctx, RngStream& rng) {
    if (z.N() != ctx.N) throw ContractError("Pi_step: dimension mismatch");
    Word b{1, std::vector<double>(ctx.N)};
    for (std::size_t j = 1; j <= ctx.N; ++j) b[j] = sample_inverse_gamma(ctx.gamma(j), rng);
    return insert_row(z, b).z;
}

TriangularArray Pi_step_rows(const TriangularArray& z, const KernelContext& ctx, RngStream& rng) {
    if (z.N() != ctx.N || !z.full()) throw ContractError("Pi_step_rows: array must be full with N rows");
    TriangularArray out(ctx.N, ctx.N);
    std::vector<double> prev_old, prev_new;
    for (std::size_t k = 1; k <= ctx.N; ++k) {
        const auto row = z.row(k);
        const auto nr = L_apply(prev_old, row, prev_new, sample_inverse_gamma(ctx.gamma(k), rng));
        for (std::size_t l = 1; l <= k; ++l) out(k, l) = nr[l - 1];
        prev_old = row;
        prev_new = nr;
    }
    return out;
}

EigenReport eigenfunction_check(std::span<const double> y, const KernelContext& ctx, EigenMode mode,
                                std::span<const cplx> lambda, std::size_t replicas, std::uint64_t seed,
                                unsigned threads) {
    const std::size_t N = ctx.N;
    if (N > kMaxQuadratureN) throw SizeError("eigenfunction_check: N <= 3");
    if (y.size() != N) throw ContractError("eigenfunction_check: dimension mismatch");
    if (replicas < 2) throw ContractError("eigenfunction_check: need at least two replicas");
    std::vector<cplx> lam(N);
    const auto& theta = ctx.params.theta;
    for (std::size_t j = 0; j < N; ++j) lam[j] = mode == EigenMode::W ? cplx(theta[j]) : lambda[j];
    if (mode == EigenMode::PsiRatio && lambda.size() != N) throw ContractError("eigenfunction_check: lambda size");

    EigenReport r;
    r.n_replicas = replicas;
    r.seed = seed;
    const double th_hat = ctx.params.theta_hat.at(ctx.n - 1);
    cplx logp = 0.0;
    for (std::size_t j = 0; j < N; ++j) {
        if (!((th_hat + lam[j]).real() > 0.0)) throw DomainError("eigenfunction_check: theta_hat_n + lambda_j must have positive real part");
        logp += log_gamma(th_hat + lam[j]) - log_gamma(ctx.gamma(j + 1));
    }
    r.predicted = std::exp(logp);

    WhittakerOptions opt;
    opt.rel_tol = 1e-9;
    const auto h0 = whittaker_eval(lam, y, opt);
    const auto vals = run_replicas(
        replicas, seed,
        [&](RngStream& rng, std::size_t) {
            const auto s = P_sample(y, ctx, rng);
            if (s.weight == 0.0) return cplx(0.0);
            const auto h = whittaker_eval(lam, s.state, opt);
            double lr = h.log_scale - h0.log_scale + std::log(s.weight);
            for (std::size_t j = 0; j < N; ++j) lr += theta[j] * std::log(s.state[j] / y[j]);
            return std::exp(lr) * h.mantissa / h0.mantissa;
        },
        threads);
    cplx mean = 0.0;
    for (auto v : vals) mean += v;
    mean /= static_cast<double>(replicas);
    double var = 0.0;
    for (auto v : vals) var += std::norm(v - mean);
    var /= static_cast<double>(replicas - 1);
    r.estimate = mean;
    r.std_error = std::sqrt(var / static_cast<double>(replicas));
    const double gap = std::abs(mean - r.predicted);
    // Round-off floor: an exactly constant integrand has zero spread.
    const double floor = 1e-12 * std::abs(r.predicted);
    r.z_score = gap <= floor ? 0.0 : gap / std::max(r.std_error, floor);
    r.inconclusive = !std::isfinite(r.z_score) || r.std_error > 0.1 * std::abs(r.predicted);
    return r;
}

IntertwiningResult two_row_intertwining_check(std::span<const double> y, const KernelContext& ctx,
                                              const PairTestFunction& g, double rel_tol) {
    if (ctx.N != 2 || y.size() != 2) throw SizeError("two_row_intertwining_check: N = 2 only");
    require_positive(y, "two_row_intertwining_check");
    const double g1 = ctx.gamma(1), g2 = ctx.gamma(2);
    const std::vector<double> theta(ctx.params.theta.begin(), ctx.params.theta.begin() + 2);
    const double inner_tol = 0.1 * rel_tol;
    IntertwiningResult r;

    // P(y, dz2) Lambda(z2, dz1) g(z1, z2)
    double err_l = 0.0;
    r.lhs = gk(
        [&](double s0) {
            return gk(
                [&](double s1) {
                    const std::array<double, 2> z2{std::exp(s0), std::exp(s1)};
                    const double p = P_log_density(y, z2, ctx);
                    if (p < -745.0) return 0.0;
                    return std::exp(p) * gk(
                                             [&](double s) {
                                                 const std::array<double, 1> z1{std::exp(s)};
                                                 const double v = Lambda_density(z2, z1, 2, theta);
                                                 return v == 0.0 ? 0.0 : v * g(z1, z2);
                                             },
                                             0.5 * (s0 + s1), inner_tol);
                },
                std::log(y[1]), inner_tol);
        },
        std::log(y[0]), rel_tol, &err_l);

    // Lambda(y, dxh) P^1(xh, dz1) L((xh, y; z1), dz2) g(z1, z2)
    double err_r = 0.0;
    r.rhs = gk(
        [&](double sh) {
            const std::array<double, 1> xh{std::exp(sh)};
            const double lam = Lambda_density(y, xh, 2, theta);
            if (lam == 0.0) return 0.0;
            return lam * gk(
                             [&](double s) {
                                 const double z1 = std::exp(s);
                                 const double p1 = jump_log_density_logs(sh, s, g1);
                                 if (p1 < -745.0) return 0.0;
                                 const double base = y[0] + z1;
                                 const double z22 = y[1] * y[0] * z1 / (xh[0] * base);
                                 if (!(z22 > 0.0) || !std::isfinite(z22)) return 0.0;
                                 return std::exp(p1) * gk(
                                                           [&](double t) {
                                                               const double z21 = std::exp(t);
                                                               const double q = jump_log_density_logs(std::log(base), t, g2);
                                                               if (q < -745.0) return 0.0;
                                                               const std::array<double, 1> a{z1};
                                                               const std::array<double, 2> b{z21, z22};
                                                               return std::exp(q) * g(a, b);
                                                           },
                                                           std::log(base), inner_tol);
                             },
                             sh, inner_tol);
        },
        0.5 * std::log(y[0] * y[1]), rel_tol, &err_r);
    r.diff = std::abs(r.lhs - r.rhs);
    r.est_error = err_l + err_r;
    r.tolerance_warning = r.diff > 10.0 * rel_tol * std::max(std::abs(r.lhs), std::abs(r.rhs));
    return r;
}

struct KbarSampler::Impl {
    KbarMethod method;
    std::vector<double> y;
    std::size_t N;
    Potential p;
    MaximizeResult mx;
    GaussianProposal q;
    CenteredPotential centered;
    double shift = 0.0;  // sum theta_i log y_i
    std::vector<double> chain;
    double chain_value = 0.0;
    bool started = false;

    Impl(std::span<const double> y_, std::span<const double> theta, KbarMethod m)
        : method(m), y(y_.begin(), y_.end()), N(y_.size()), p(make(theta, y_)),
          mx(maximize(p, std::vector<double>(p.dim(), 0.0))), q(p, mx), centered(p, mx.argmax) {
        for (std::size_t i = 0; i < N; ++i) shift += theta[i] * std::log(y[i]);
    }

    static Potential make(std::span<const double> theta, std::span<const double> y) {
        std::vector<cplx> th(theta.begin(), theta.end());
        std::vector<double> u(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) u[i] = std::log(y[i]);
        return pattern_potential(th, u);
    }

    TriangularArray to_pattern(const std::vector<double>& t) const {
        TriangularArray z(N, N);
        for (std::size_t k = 1; k < N; ++k)
            for (std::size_t l = 1; l <= k; ++l) z(k, l) = std::exp(t[pattern_index(k, l)]);
        for (std::size_t l = 1; l <= N; ++l) z(N, l) = y[l - 1];
        return z;
    }
};

KbarSampler::KbarSampler(std::span<const double> y, std::span<const double> theta, KbarMethod method) {
    if (y.empty() || y.size() > 4 || theta.size() != y.size()) throw SizeError("KbarSampler: 1 <= N <= 4, |theta| = N");
    require_positive(y, "KbarSampler");
    impl_ = std::make_unique<Impl>(y, theta, method);
}

KbarSampler::~KbarSampler() = default;
KbarSampler::KbarSampler(KbarSampler&&) noexcept = default;
KbarSampler& KbarSampler::operator=(KbarSampler&&) noexcept = default;

double KbarSampler::log_peak() const { return impl_->mx.value + impl_->shift; }

WeightedPattern KbarSampler::draw(RngStream& rng) {
    Impl& m = *impl_;
    WeightedPattern out;
    if (m.N == 1) {
        out.state = m.to_pattern({});
        out.log_weight = m.shift;
        out.weight = std::exp(out.log_weight);
        return out;
    }
    std::vector<double> x;
    if (m.method == KbarMethod::Importance) {
        const double lq = m.q.draw(rng, x);
        out.log_weight = m.centered.value(x).real() - lq + m.mx.value + m.shift;
        out.weight = std::exp(out.log_weight);
        out.state = m.to_pattern(x);
        return out;
    }
    // Random-walk Metropolis with increments shaped by the proposal covariance.
    if (!m.started) {
        m.chain = m.mx.argmax;
        m.chain_value = 0.0;
        m.started = true;
    }
    constexpr int kThin = 10;
    constexpr double kStep = 0.8;
    for (int it = 0; it < kThin; ++it) {
        m.q.draw(rng, x);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = m.chain[i] + kStep * (x[i] - m.mx.argmax[i]);
        const double v = m.centered.value(x).real();
        if (std::log(rng.uniform()) < v - m.chain_value) {
            m.chain = x;
            m.chain_value = v;
        }
    }
    out.state = m.to_pattern(m.chain);
    return out;
}

double effective_sample_size(std::span<const double> w) {
    double s = 0.0, s2 = 0.0;
    for (double x : w) {
        s += x;
        s2 += x * x;
    }
    return s2 > 0.0 ? s * s / s2 : 0.0;
}

}  // namespace grsk
