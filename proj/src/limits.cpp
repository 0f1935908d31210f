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

#include "grsk/limits.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "grsk/errors.hpp"
#include "grsk/insertion.hpp"
#include "grsk/linalg.hpp"
#include "grsk/parallel.hpp"
#include "grsk/paths.hpp"
#include "grsk/specfun.hpp"
#include "grsk/stats.hpp"

namespace grsk {

CoupledWeight coupled_weight(double u, double gamma, double eps) {
    if (!(u > 0.0 && u < 1.0)) throw DomainError("coupled_weight: u must lie in (0,1)");
    if (!(gamma > 0.0) || !(eps > 0.0)) throw DomainError("coupled_weight: gamma and eps must be positive");
    const double a = eps * gamma;
    CoupledWeight c;
    c.w = -std::log(u) / gamma;
    double logG = -std::numeric_limits<double>::infinity();
    const double G = boost::math::gamma_p_inv(a, u);
    if (G > 1e-300) logG = std::log(G);
    // P(a, x) ~ x^a / Gamma(1 + a) as x -> 0.
    if (!std::isfinite(logG) || G < 1e-200) logG = (std::log(u) + std::lgamma(1.0 + a)) / a;
    c.eps_log_d = -eps * logG;
    return c;
}

bool TropicalReport::decreasing() const {
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double noise = 2.0 * std::hypot(rows[i].std_error, rows[i - 1].std_error);
        if (rows[i].mean_sup > rows[i - 1].mean_sup + noise) return false;
    }
    return true;
}

TriangularArray tropical_envelope(const WeightMatrix& delta_abs, std::size_t n, double eps) {
    const std::size_t N = delta_abs.cols();
    WeightMatrix ones(n, N, 1.0);
    TriangularArray env(N, std::min(n, N));
    for (std::size_t k = 1; k <= N; ++k) {
        double cells = 0.0;
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= k; ++j) cells += delta_abs(i, j);
        double prev = 0.0;
        for (std::size_t l = 1; l <= std::min(k, n); ++l) {
            const double count = tau_by_minors(ones, k, l, n);
            const double b = eps * std::log(count) + cells;
            env(k, l) = b + prev;
            prev = b;
        }
    }
    return env;
}

TropicalReport tropical_limit_run(const SolvableParams& params, std::size_t n, std::size_t N,
                                  const std::vector<double>& eps_list, std::size_t replicas, std::uint64_t seed,
                                  unsigned threads) {
    if (params.N() != N) throw ContractError("tropical_limit_run: theta must have N entries");
    params.validate(n);
    if (eps_list.empty()) throw ContractError("tropical_limit_run: empty eps list");
    for (std::size_t i = 0; i < eps_list.size(); ++i) {
        if (!(eps_list[i] > 0.0)) throw DomainError("tropical_limit_run: eps must be positive");
        if (i > 0 && !(eps_list[i] < eps_list[i - 1])) throw ContractError("tropical_limit_run: eps list must decrease");
    }
    if (replicas < 2) throw ContractError("tropical_limit_run: need at least 2 replicas");

    const std::size_t E = eps_list.size();
    const auto rows = run_replicas(
        replicas, seed,
        [&](RngStream& rng, std::size_t) {
            WeightMatrix u(n, N), w(n, N);
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t j = 1; j <= N; ++j) {
                    u(i, j) = rng.uniform();
                    w(i, j) = -std::log(u(i, j)) / params.gamma(i, j);
                }
            const TropicalArray L = tropical_evolve(w, n);
            if (!interlaces(L, 1e-9)) throw InvariantError("tropical_limit_run: interlacing violated");
            std::vector<double> out(2 * E);
            for (std::size_t e = 0; e < E; ++e) {
                const double eps = eps_list[e];
                WeightMatrix logd(n, N), delta(n, N);
                for (std::size_t i = 1; i <= n; ++i)
                    for (std::size_t j = 1; j <= N; ++j) {
                        const auto c = coupled_weight(u(i, j), params.gamma(i, j), eps);
                        logd(i, j) = c.eps_log_d / eps;
                        delta(i, j) = std::abs(c.eps_log_d - w(i, j));
                    }
                const auto F = evolve_from_empty_log(logd, n);
                const auto env = tropical_envelope(delta, n, eps);
                double sup = 0.0, bad = 0.0;
                for (std::size_t k = 1; k <= N; ++k)
                    for (std::size_t l = 1; l <= std::min(k, n); ++l) {
                        const double diff = std::abs(eps * F(k, l) - L(k, l));
                        sup = std::max(sup, diff);
                        if (diff > env(k, l) + 1e-9 * (1.0 + std::abs(L(k, l)))) bad = 1.0;
                    }
                out[2 * e] = sup;
                out[2 * e + 1] = bad;
            }
            return out;
        },
        threads);

    TropicalReport rep;
    rep.n = n;
    rep.N = N;
    rep.replicas = replicas;
    rep.seed = seed;
    for (std::size_t e = 0; e < E; ++e) {
        std::vector<double> sup(replicas);
        TropicalDistance row;
        row.eps = eps_list[e];
        for (std::size_t r = 0; r < replicas; ++r) {
            sup[r] = rows[r][2 * e];
            row.max_sup = std::max(row.max_sup, sup[r]);
            if (rows[r][2 * e + 1] > 0.0) ++row.envelope_violations;
        }
        const auto s = stats::summarize(sup);
        row.mean_sup = s.mean;
        row.std_error = s.std_error;
        rep.rows.push_back(row);
    }
    return rep;
}

double wishart_top_eigenvalue(const SolvableParams& params, std::size_t n, std::size_t N, RngStream& rng) {
    using cd = std::complex<double>;
    std::vector<std::vector<cd>> A(N, std::vector<cd>(n));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double sd = std::sqrt(0.5 / params.gamma(j + 1, i + 1));
            A[i][j] = cd(sd * rng.normal(), sd * rng.normal());
        }
    std::vector<std::vector<cd>> M(N, std::vector<cd>(N));
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) {
            cd s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += A[a][j] * std::conj(A[b][j]);
            M[a][b] = s;
        }
    const auto ev = linalg::hermitian_eigenvalues(M);
    const double top = *std::max_element(ev.begin(), ev.end());
    const double bottom = *std::min_element(ev.begin(), ev.end());
    if (bottom < -1e-10 * std::max(1.0, top)) throw InvariantError("wishart_top_eigenvalue: negative eigenvalue");
    return top;
}

LueReport lue_compare(const SolvableParams& params, std::size_t n, std::size_t N, std::size_t replicas,
                      std::uint64_t seed, unsigned threads) {
    if (N < 1 || N > 3) throw SizeError("lue_compare: N must be 1..3");
    if (params.N() != N) throw ContractError("lue_compare: theta must have N entries");
    params.validate(n);
    if (replicas < 100) throw ContractError("lue_compare: need at least 100 replicas");

    const auto eig = run_replicas(
        replicas, derive_seed(seed, 1),
        [&](RngStream& rng, std::size_t) { return wishart_top_eigenvalue(params, n, N, rng); }, threads);
    const auto lpp = run_replicas(
        replicas, derive_seed(seed, 2),
        [&](RngStream& rng, std::size_t) {
            WeightMatrix w(n, N);
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t j = 1; j <= N; ++j) w(i, j) = sample_exponential(params.gamma(i, j), rng);
            return tropical_evolve(w, n)(N, 1);
        },
        threads);
    const auto ks = stats::ks_two_sample(eig, lpp);
    LueReport r;
    r.N = N;
    r.n = n;
    r.replicas = replicas;
    r.seed = seed;
    r.ks_statistic = ks.statistic;
    r.p_value = ks.p_value;
    r.mean_eigen = stats::summarize(eig).mean;
    r.mean_lpp = stats::summarize(lpp).mean;
    return r;
}

namespace {

// Density as sum_t c_t exp(-a_t x1 - b_t x2).
struct ExpTerm {
    double c, a, b;
};

std::vector<ExpTerm> density_terms(const SolvableParams& p) {
    if (p.N() != 2 || p.rows() < 2) throw SizeError("lpp_density: N = 2 only");
    p.validate(2);
    const double t1 = p.theta[0], t2 = p.theta[1], h1 = p.theta_hat[0], h2 = p.theta_hat[1];
    if (t1 == t2 || h1 == h2) throw DomainError("lpp_density: parameters must be distinct");
    const double Z = 1.0 / ((t1 + h1) * (t2 + h2)) - 1.0 / ((t1 + h2) * (t2 + h1));
    const double ts[2][2] = {{t1, t2}, {t2, t1}};
    const double hs[2][2] = {{h1, h2}, {h2, h1}};
    std::vector<ExpTerm> out;
    for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t)
            out.push_back({(s == t ? 1.0 : -1.0) / Z, ts[s][0] + hs[t][0], ts[s][1] + hs[t][1]});
    return out;
}

double exp_mass(double r, double lo, double hi) {
    const double a = std::exp(-r * lo);
    const double b = std::isinf(hi) ? 0.0 : std::exp(-r * hi);
    return (a - b) / r;
}

}  // namespace

double lpp_density(double x1, double x2, const SolvableParams& params) {
    if (x2 < 0.0 || x1 < x2) return 0.0;
    double v = 0.0;
    for (const auto& t : density_terms(params)) v += t.c * std::exp(-t.a * x1 - t.b * x2);
    return v;
}

LppDensityReport lpp_density_check(const SolvableParams& params, std::size_t replicas, std::uint64_t seed,
                                   std::size_t bins, unsigned threads) {
    const auto terms = density_terms(params);
    if (bins < 2) throw ContractError("lpp_density_check: need at least 2 bins per axis");
    if (replicas < 25 * bins * bins) throw ContractError("lpp_density_check: too few replicas for the bin grid");

    LppDensityReport rep;
    rep.replicas = replicas;
    rep.seed = seed;

    // Coordinates s = x2 >= 0, t = x1 - x2 >= 0.
    using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
    const double inf = std::numeric_limits<double>::infinity();
    rep.normalization = GK::integrate(
        [&](double t) {
            return GK::integrate([&](double s) { return lpp_density(s + t, s, params); }, 0.0, inf, 15, 1e-13);
        },
        0.0, inf, 15, 1e-13);

    auto sample = [&](RngStream& rng, std::size_t) {
        WeightMatrix w(2, 2);
        for (std::size_t i = 1; i <= 2; ++i)
            for (std::size_t j = 1; j <= 2; ++j) w(i, j) = sample_exponential(params.gamma(i, j), rng);
        const auto L = tropical_evolve(w, 2);
        return std::vector<double>{L(2, 2), L(2, 1) - L(2, 2)};
    };

    // Bin edges from an independent pilot run.
    const std::size_t pilot_n = std::max<std::size_t>(20000, 50 * bins);
    const auto pilot = run_replicas(pilot_n, derive_seed(seed, 0x9110), sample, threads);
    std::vector<double> edges[2];
    for (int c = 0; c < 2; ++c) {
        std::vector<double> v(pilot_n);
        for (std::size_t r = 0; r < pilot_n; ++r) v[r] = pilot[r][c];
        std::sort(v.begin(), v.end());
        edges[c].push_back(0.0);
        for (std::size_t b = 1; b < bins; ++b) edges[c].push_back(v[b * pilot_n / bins]);
        edges[c].push_back(inf);
    }

    const auto data = run_replicas(replicas, seed, sample, threads);
    std::vector<double> observed(bins * bins, 0.0);
    rep.min_density_on_samples = inf;
    for (const auto& x : data) {
        if (x[1] < 0.0) throw InvariantError("lpp_density_check: unordered sample");
        rep.min_density_on_samples = std::min(rep.min_density_on_samples, lpp_density(x[0] + x[1], x[0], params));
        const std::size_t bs = std::upper_bound(edges[0].begin(), edges[0].end(), x[0]) - edges[0].begin() - 1;
        const std::size_t bt = std::upper_bound(edges[1].begin(), edges[1].end(), x[1]) - edges[1].begin() - 1;
        observed[bs * bins + bt] += 1.0;
    }

    std::vector<double> obs, expct;
    double pooled_o = 0.0, pooled_e = 0.0;
    for (std::size_t bs = 0; bs < bins; ++bs)
        for (std::size_t bt = 0; bt < bins; ++bt) {
            double mass = 0.0;
            for (const auto& t : terms)
                mass += t.c * exp_mass(t.a + t.b, edges[0][bs], edges[0][bs + 1]) *
                        exp_mass(t.a, edges[1][bt], edges[1][bt + 1]);
            const double e = mass * static_cast<double>(replicas);
            const double o = observed[bs * bins + bt];
            if (e < 5.0) {
                pooled_o += o;
                pooled_e += e;
                ++rep.pooled_cells;
            } else {
                obs.push_back(o);
                expct.push_back(e);
            }
        }
    if (pooled_e >= 5.0) {
        obs.push_back(pooled_o);
        expct.push_back(pooled_e);
    }
    if (obs.size() < 10) throw ContractError("lpp_density_check: too few populated bins");
    rep.cells = obs.size();
    rep.dof = static_cast<int>(obs.size()) - 1;
    const auto chi = stats::chi_square(obs, expct, rep.dof);
    rep.chi_square = chi.statistic;
    rep.p_value = chi.p_value;
    return rep;
}

SemidiscreteReport semidiscrete_trend(std::size_t N, const std::vector<std::size_t>& n_list, std::size_t replicas,
                                      std::uint64_t seed, unsigned threads, std::size_t bm_steps) {
    if (N < 1) throw ContractError("semidiscrete_trend: N must be positive");
    if (n_list.empty()) throw ContractError("semidiscrete_trend: empty n list");
    if (replicas < 8) throw ContractError("semidiscrete_trend: need at least 8 replicas");
    if (bm_steps < 1) throw ContractError("semidiscrete_trend: need at least one time step");

    SemidiscreteReport rep;
    rep.N = N;
    rep.replicas = replicas;
    rep.seed = seed;

    const auto bm = run_replicas(
        replicas, derive_seed(seed, 0xb3),
        [&](RngStream& rng, std::size_t) {
            const double h = 1.0 / static_cast<double>(bm_steps);
            const double sh = std::sqrt(h), lh = std::log(h);
            const double ninf = -std::numeric_limits<double>::infinity();
            std::vector<double> lz(N, ninf);
            lz[0] = 0.0;
            for (std::size_t s = 0; s < bm_steps; ++s)
                for (std::size_t j = N; j-- > 0;) {
                    double v = lz[j];
                    if (j > 0 && lz[j - 1] > ninf) v = v > ninf ? log_add_exp(v, lh + lz[j - 1]) : lh + lz[j - 1];
                    lz[j] = v + sh * rng.normal();
                }
            return lz[N - 1];
        },
        threads);
    const auto bs = stats::summarize(bm);
    rep.bm_mean = bs.mean;
    rep.bm_variance = bs.variance;

    std::vector<double> last;
    for (std::size_t n : n_list) {
        if (n < 1) throw ContractError("semidiscrete_trend: n must be positive");
        const double logn = std::log(static_cast<double>(n));
        const double shape = static_cast<double>(n);
        auto x = run_replicas(
            replicas, derive_seed(seed, n),
            [&](RngStream& rng, std::size_t) {
                std::vector<double> col(N);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < N; ++j) {
                        const double logd = -sample_log_gamma(shape, rng);
                        double acc;
                        if (i == 0 && j == 0) acc = 0.0;
                        else if (i == 0) acc = col[j - 1];
                        else if (j == 0) acc = col[0];
                        else acc = log_add_exp(col[j], col[j - 1]);
                        col[j] = acc + logd;
                    }
                return col[N - 1] + static_cast<double>(n) * logn - 0.5;
            },
            threads);
        const auto s = stats::summarize(x);
        rep.rows.push_back({n, s.mean, s.variance, std::abs(s.mean - rep.bm_mean)});
        last = std::move(x);
    }
    rep.jarque_bera_p = stats::jarque_bera(last).p_value;
    rep.gaps_shrinking = rep.rows.back().gap <= rep.rows.front().gap;
    return rep;
}

}  // namespace grsk
