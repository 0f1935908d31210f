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

#include "grsk/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <sstream>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/rational.hpp>

#include "grsk/entrance.hpp"
#include "grsk/insertion.hpp"
#include "grsk/kernels.hpp"
#include "grsk/limits.hpp"
#include "grsk/measures.hpp"
#include "grsk/parallel.hpp"
#include "grsk/paths.hpp"
#include "grsk/stationarity.hpp"
#include "grsk/whittaker.hpp"

namespace grsk {

namespace {

using Q = boost::rational<long long>;

struct Scale {
    bool full;
    std::size_t pick(std::size_t full_value, std::size_t quick_value) const { return full ? full_value : quick_value; }
};

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(4);
    os << x;
    return os.str();
}

double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }
double rel_err(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

struct Attempt {
    bool passed = false;
    json details;
};

/// Runs a hypothesis-test gate on seed, then on up to kMaxRetries fresh seeds.
Attempt with_retries(std::uint64_t seed, int& retries, const std::function<Attempt(std::uint64_t)>& gate) {
    Attempt a;
    json tries = json::array();
    for (int r = 0; r <= kMaxRetries; ++r) {
        const std::uint64_t s = r == 0 ? seed : derive_seed(seed, 0x7e7 + r);
        a = gate(s);
        a.details["seed"] = s;
        tries.push_back(a.details);
        if (r > 0) ++retries;
        if (a.passed) break;
    }
    return {a.passed, tries};
}

// 1. Exact rational example.
CriterionOutcome c_example(const Scale&, std::uint64_t) {
    CriterionOutcome c;
    auto word = [](std::size_t start, std::vector<Q> e) { return BasicWord<Q>{start, std::move(e)}; };
    const auto [xi, bp] = row_insert(word(1, {3, 2}), word(1, {1, 5}));
    Pattern<Q> z(3, 3);
    z.set_diagonal(1, word(1, {4, 1, 3}));
    z.set_diagonal(2, word(2, {3, 7}));
    z.set_diagonal(3, word(3, {2}));
    const auto r = insert_row(z, word(1, {2, 2, 4}));
    const bool word_ok = xi.entries == std::vector<Q>{3, 25} && bp.start == 2 && bp.entries == std::vector<Q>{Q(2, 5)};
    const bool z_ok = r.z.diagonal(1).entries == std::vector<Q>{8, 18, 84} &&
                      r.z.diagonal(2).entries == std::vector<Q>{Q(2, 3), Q(138, 7)} &&
                      r.z.diagonal(3).entries == std::vector<Q>{Q(28, 69)};
    const bool a_ok = r.a.diagonal(2).entries == std::vector<Q>{Q(2, 9), Q(18, 7)} &&
                      r.a.diagonal(3).entries == std::vector<Q>{Q(14, 69)};
    c.passed = word_ok && z_ok && a_ok;
    c.observed = std::string("word ") + (word_ok ? "exact" : "differs") + ", array " + (z_ok ? "exact" : "differs") +
                 ", intermediates " + (a_ok ? "exact" : "differs");
    c.expected = "all exact";
    return c;
}

// 2. Insertion against minors.
CriterionOutcome c_equivalence(const Scale& sc, std::uint64_t seed) {
    CriterionOutcome c;
    const std::size_t trials = sc.pick(100, 20);
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        RngStream rng(seed, t);
        const std::size_t n = 1 + rng.next_u64() % 6, N = 1 + rng.next_u64() % 6;
        WeightMatrix d(n, N);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= N; ++j) d(i, j) = 0.1 + 9.9 * rng.uniform();
        const auto a = evolve_from_empty(d, n);
        const auto b = p_tableau(d, n);
        for (std::size_t k = 1; k <= N; ++k)
            for (std::size_t l = 1; l <= std::min(k, n); ++l) worst = std::max(worst, rel_err(a(k, l), b(k, l)));
    }
    c.passed = worst < 1e-9;
    c.observed = "max rel " + fmt(worst) + " over " + std::to_string(trials) + " matrices";
    c.expected = "< 1e-09";
    c.details = {{"trials", trials}, {"max_rel", worst}};
    return c;
}

// 3. Minors against path enumeration.
CriterionOutcome c_lgv(const Scale& sc, std::uint64_t seed) {
    CriterionOutcome c;
    const std::size_t trials = sc.pick(50, 10);
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        RngStream rng(seed, t);
        const std::size_t n = 1 + rng.next_u64() % 4, N = 1 + rng.next_u64() % 4;
        WeightMatrix d(n, N);
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= N; ++j) d(i, j) = 0.1 + 9.9 * rng.uniform();
        for (std::size_t k = 1; k <= N; ++k)
            for (std::size_t l = 1; l <= std::min(k, n); ++l)
                worst = std::max(worst, rel_err(tau_by_minors(d, k, l, n), tau_by_paths(d, k, l, n)));
    }
    c.passed = worst < 1e-10;
    c.observed = "max rel " + fmt(worst) + " over " + std::to_string(trials) + " matrices";
    c.expected = "< 1e-10";
    c.details = {{"trials", trials}, {"max_rel", worst}};
    return c;
}

// 4. Integral identity at two rows.
CriterionOutcome c_bump_stade(const Scale& sc, std::uint64_t) {
    CriterionOutcome c;
    struct Point {
        double s;
        std::vector<cplx> lam, nu;
        bool prime;
    };
    std::vector<Point> pts{{1.0, {-0.3, -0.6}, {-0.4, -0.2}, false},
                           {0.7, {0.3, 0.6}, {0.4, 0.2}, true},
                           {1.6, {-0.25, -0.5}, {-0.35, -0.45}, false}};
    pts.resize(sc.pick(3, 1));
    double worst = 0.0;
    json rows = json::array();
    for (const auto& p : pts) {
        const auto r = bump_stade(p.s, p.lam, p.nu, p.prime);
        const double e = r.converged ? r.rel_diff : 1.0;
        worst = std::max(worst, e);
        rows.push_back({{"s", p.s}, {"rel_diff", r.rel_diff}, {"converged", r.converged}});
    }
    c.passed = worst < 1e-6;
    c.observed = "max rel " + fmt(worst) + " at " + std::to_string(pts.size()) + " points";
    c.expected = "< 1e-06";
    c.details = {{"points", rows}};
    return c;
}

// 5. Reflection.
CriterionOutcome c_reflection(const Scale& sc, std::uint64_t seed) {
    CriterionOutcome c;
    const std::size_t points = sc.pick(5, 2);
    double worst[4] = {0, 0, 0, 0};
    for (std::size_t N : {2u, 3u}) {
        RngStream rng(seed, N);
        for (std::size_t k = 0; k < points; ++k) {
            std::vector<cplx> l(N), ml(N);
            std::vector<double> y(N);
            for (std::size_t i = 0; i < N; ++i) {
                l[i] = -0.8 + 1.6 * rng.uniform();
                ml[i] = -l[i];
                y[i] = std::exp(-1.5 + 3.0 * rng.uniform());
            }
            const auto a = whittaker_eval(l, y), b = whittaker_eval(ml, reflect(y));
            worst[N] = std::max(worst[N], rel_err(a.value(), b.value()));
        }
    }
    c.passed = worst[2] < 1e-6 && worst[3] < 1e-4;
    c.observed = "N=2 " + fmt(worst[2]) + ", N=3 " + fmt(worst[3]);
    c.expected = "< 1e-06, < 1e-04";
    c.details = {{"points", points}, {"max_rel_N2", worst[2]}, {"max_rel_N3", worst[3]}};
    return c;
}

// 6. Eigenfunction relation.
CriterionOutcome c_eigen(const Scale& sc, std::uint64_t seed, unsigned threads, int& retries) {
    CriterionOutcome c;
    const KernelContext ctx(SolvableParams{{0.9, 1.2, 1.1}, {-0.4, -0.2}}, 1, 2);
    const std::vector<double> y{1.3, 0.7};
    const std::size_t reps = sc.pick(1000000, 20000);
    struct Case {
        const char* name;
        EigenMode mode;
        std::vector<cplx> lambda;
    };
    const std::vector<Case> cases{{"theta", EigenMode::W, {}},
                                  {"theta+(0.1,-0.1)", EigenMode::PsiRatio, {-0.3, -0.3}},
                                  {"(0.5i,-0.5i)", EigenMode::PsiRatio, {cplx(0, 0.5), cplx(0, -0.5)}}};
    bool all = true;
    double worst = 0.0;
    json rows = json::array();
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& cs = cases[i];
        const auto a = with_retries(derive_seed(seed, i), retries, [&](std::uint64_t s) {
            const auto r = eigenfunction_check(y, ctx, cs.mode, cs.lambda, reps, s, threads);
            return Attempt{std::abs(r.z_score) < 4.0 && !r.inconclusive,
                           {{"z", r.z_score}, {"estimate", r.estimate.real()}, {"predicted", r.predicted.real()}}};
        });
        all = all && a.passed;
        worst = std::max(worst, std::abs(a.details.back()["z"].get<double>()));
        rows.push_back({{"lambda", cs.name}, {"attempts", a.details}});
    }
    c.passed = all;
    c.observed = "max |z| " + fmt(worst) + " at " + std::to_string(reps) + " replicas";
    c.expected = "|z| < 4";
    c.details = {{"cases", rows}};
    return c;
}

// 7. Two-row intertwining.
CriterionOutcome c_intertwining(const Scale& sc, std::uint64_t) {
    CriterionOutcome c;
    const KernelContext ctx(SolvableParams{{0.9, 1.2, 1.1}, {-0.4, -0.2}}, 2, 2);
    const std::vector<double> y{1.3, 0.7};
    std::vector<PairTestFunction> fs{
        [](auto, auto) { return 1.0; },
        [](auto x, auto z) {
            const double a = std::log(x[0]) + 0.2, u = std::log(z[0]) - 0.3, v = std::log(z[1]) + 0.4;
            return std::exp(-(a * a + u * u + v * v) / 1.5);
        },
        [](auto x, auto z) {
            const double a = std::log(x[0]), g = std::log(z[0]) - std::log(z[1]);
            return 1.0 / (1.0 + a * a + g * g);
        }};
    fs.resize(sc.pick(3, 1));
    double worst = 0.0;
    for (const auto& f : fs) {
        const auto r = two_row_intertwining_check(y, ctx, f);
        worst = std::max(worst, r.diff / std::abs(r.lhs));
    }
    c.passed = worst < 1e-5;
    c.observed = "max rel " + fmt(worst) + " on " + std::to_string(fs.size()) + " functions";
    c.expected = "< 1e-05";
    c.details = {{"max_rel", worst}};
    return c;
}

// 8. Laplace transform.
CriterionOutcome c_laplace(const Scale& sc, std::uint64_t seed, unsigned threads, int& retries) {
    CriterionOutcome c;
    const SolvableParams one{{0.8}, {-0.3}};
    double bessel = 0.0;
    for (double s : {0.5, 1.0, 2.0}) {
        const double g = one.gamma(1, 1);
        const double exact = 2.0 * std::pow(s, 0.5 * g) * boost::math::cyl_bessel_k(g, 2.0 * std::sqrt(s)) / std::tgamma(g);
        bessel = std::max(bessel, rel_err(laplace_contour(s, 1, 1, one).value, exact));
    }
    const SolvableParams p{{0.8, 0.9, 1.1}, {-0.4, -0.1}};
    const std::size_t reps = sc.pick(1000000, 20000);
    std::vector<double> contour;
    for (std::size_t n : {2u, 3u})
        for (double s : {0.5, 1.0, 2.0}) contour.push_back(laplace_contour(s, n, 2, p).value);
    const auto a = with_retries(seed, retries, [&](std::uint64_t sd) {
        json rows = json::array();
        double worst = 0.0;
        std::size_t i = 0;
        for (std::size_t n : {2u, 3u})
            for (double s : {0.5, 1.0, 2.0}) {
                const auto mc = laplace_mc(s, n, 2, p, reps, derive_seed(sd, i), threads);
                const double sig = std::abs(mc.mean - contour[i]) / mc.std_error;
                worst = std::max(worst, sig);
                rows.push_back({{"n", n}, {"s", s}, {"contour", contour[i]}, {"mc", mc.mean}, {"sigma", sig}});
                ++i;
            }
        return Attempt{worst < 3.0, {{"max_sigma", worst}, {"rows", rows}}};
    });
    const double sigma = a.details.back()["max_sigma"].get<double>();
    c.passed = a.passed && bessel < 1e-8;
    c.observed = "max " + fmt(sigma) + " SE at " + std::to_string(reps) + " replicas; Bessel rel " + fmt(bessel);
    c.expected = "< 3 SE; < 1e-08";
    c.details = {{"bessel_rel", bessel}, {"attempts", a.details}};
    return c;
}

// 9. Shape law at n = N.
CriterionOutcome c_mu_NN(const Scale& sc, std::uint64_t seed, unsigned threads, int& retries) {
    CriterionOutcome c;
    const double mass = mu_NN_mass(2, SolvableParams{{1.2, 0.9}, {-0.3, 0.1}});
    const std::size_t reps = sc.pick(100000, 10000);
    const auto a = with_retries(seed, retries, [&](std::uint64_t s) {
        const auto r = z_NN_check(SolvableParams{{0.9, 1.1, 1.3}, {-0.2, 0.1, 0.3}}, reps, s, threads);
        return Attempt{r.p_value > kPGate, {{"ks_p", r.p_value}, {"shape", r.shape}}};
    });
    const double p = a.details.back()["ks_p"].get<double>();
    c.passed = std::abs(mass - 1.0) < 1e-3 && a.passed;
    c.observed = "mass " + fmt(mass) + "; KS p " + fmt(p);
    c.expected = "|mass-1| < 1e-03; p > 0.01";
    c.details = {{"mass", mass}, {"attempts", a.details}};
    return c;
}

// 10. Stationarity.
CriterionOutcome c_burke(const Scale& sc, std::uint64_t seed, unsigned threads, int& retries) {
    CriterionOutcome c;
    const SolvableParams p{{1.3, 1.5, 1.7, 1.4, 1.6}, {-1.0, -0.5, 0.2, 0.4}};
    const std::size_t reps = sc.pick(100000, 5000);
    // Quick runs keep the same multiple of the sampling noise.
    const double corr_gate = 0.01 * std::sqrt(100000.0 / static_cast<double>(reps));
    const auto a = with_retries(seed, retries, [&](std::uint64_t s) {
        const auto r = burke_check(p, 2, 5, reps, s, threads);
        return Attempt{r.passed(kPGate, corr_gate),
                       {{"min_ks_p", r.min_ks_p},
                        {"max_abs_corr", r.max_abs_spearman},
                        {"worst_pair", r.worst_pair},
                        {"variables", r.marginals.size()},
                        {"rank_histogram_p", r.rank_histogram_p}}};
    });
    const auto& last = a.details.back();
    c.passed = a.passed;
    c.observed = "min KS p " + fmt(last["min_ks_p"].get<double>()) + ", max |corr| " +
                 fmt(last["max_abs_corr"].get<double>());
    c.expected = "p > 0.01, |corr| < " + fmt(corr_gate);
    c.details = {{"attempts", a.details}};
    return c;
}

// 11. Free energy.
CriterionOutcome c_free_energy(const Scale& sc, std::uint64_t seed, unsigned threads) {
    CriterionOutcome c;
    const std::size_t n = sc.pick(2000, 200), reps = sc.pick(200, 50);
    const auto r = free_energy_run(1.0, n, reps, seed, threads);
    c.passed = r.within();
    c.observed = "mean " + fmt(r.mean) + " vs " + fmt(r.target) + ", |diff| " + fmt(r.abs_diff) + " (n=" +
                 std::to_string(n) + ")";
    c.expected = "|diff| < " + fmt(r.tolerance);
    c.details = {{"n", n},          {"replicas", reps},         {"mean", r.mean},        {"std_error", r.std_error},
                 {"target", r.target}, {"abs_diff", r.abs_diff}, {"tolerance", r.tolerance}, {"seed", seed}};
    return c;
}

// 12. Zero-temperature limit.
CriterionOutcome c_tropical(const Scale& sc, std::uint64_t seed, unsigned threads) {
    CriterionOutcome c;
    const SolvableParams p{std::vector<double>(4, 0.5), std::vector<double>(4, 0.5)};
    const std::size_t reps = sc.pick(2000, 200);
    const auto r = tropical_limit_run(p, 4, 4, {0.5, 0.2, 0.1, 0.05}, reps, seed, threads);
    std::size_t violations = 0;
    json rows = json::array();
    std::string trail;
    for (const auto& row : r.rows) {
        violations += row.envelope_violations;
        rows.push_back({{"eps", row.eps}, {"mean_sup", row.mean_sup}, {"std_error", row.std_error},
                        {"max_sup", row.max_sup}, {"envelope_violations", row.envelope_violations}});
        trail += (trail.empty() ? "" : " > ") + fmt(row.mean_sup);
    }
    c.passed = r.decreasing() && r.rows.back().mean_sup < 0.15 && violations == 0;
    c.observed = "sup distance " + trail + (r.decreasing() ? "" : " (not decreasing)") + ", envelope violations " +
                 std::to_string(violations);
    c.expected = "decreasing, < 0.15 at eps=0.05";
    c.details = {{"replicas", reps}, {"seed", seed}, {"rows", rows}};
    return c;
}

// 13. Eigenvalue identity and closed-form density.
CriterionOutcome c_lue(const Scale& sc, std::uint64_t seed, unsigned threads, int& retries) {
    CriterionOutcome c;
    const std::size_t reps = sc.pick(100000, 10000);
    const SolvableParams hom{{0.5, 0.5}, {0.5, 0.5}}, inh{{0.9, 1.2}, {-0.2, 0.1}};
    auto lue = [&](const SolvableParams& p, std::uint64_t sd) {
        return with_retries(sd, retries, [&](std::uint64_t s) {
            const auto r = lue_compare(p, 2, 2, reps, s, threads);
            return Attempt{r.p_value > kPGate, {{"ks_p", r.p_value}, {"ks", r.ks_statistic}}};
        });
    };
    const auto a = lue(hom, derive_seed(seed, 1));
    const auto b = lue(inh, derive_seed(seed, 2));
    double norm = 0.0;
    const auto d = with_retries(derive_seed(seed, 3), retries, [&](std::uint64_t s) {
        const auto r = lpp_density_check(inh, reps, s, 20, threads);
        norm = r.normalization;
        return Attempt{r.p_value > kPGate && r.min_density_on_samples >= 0.0,
                       {{"chi_square", r.chi_square}, {"dof", r.dof}, {"p", r.p_value}, {"cells", r.cells}}};
    });
    const double pa = a.details.back()["ks_p"].get<double>(), pb = b.details.back()["ks_p"].get<double>(),
                 pd = d.details.back()["p"].get<double>();
    c.passed = a.passed && b.passed && d.passed;
    c.observed = "KS p " + fmt(pa) + " / " + fmt(pb) + ", density GOF p " + fmt(pd);
    c.expected = "all p > 0.01";
    c.details = {{"homogeneous", a.details}, {"inhomogeneous", b.details}, {"density", d.details},
                 {"normalization", norm}};
    return c;
}

// 14. Entrance law.
CriterionOutcome c_entrance(const Scale&, std::uint64_t seed) {
    CriterionOutcome c;
    const auto mx = maximize_F0(3);
    double row_sum = 0.0;
    for (std::size_t k = 1; k < 3; ++k) {
        double s = 0.0;
        for (std::size_t l = 1; l <= k; ++l) s += mx.t0(k, l);
        row_sum = std::max(row_sum, std::abs(s));
    }
    RngStream rng(seed, 0);
    double hmax = -1e300;
    for (int i = 0; i < 100; ++i) {
        std::vector<double> alpha(mx.t0.t.size());
        for (double& a : alpha) a = rng.normal();
        hmax = std::max(hmax, hessian_form(mx.t0, alpha));
    }
    WeightMatrix d(3, 3);
    for (std::size_t i = 1; i <= 3; ++i)
        for (std::size_t j = 1; j <= 3; ++j)
            d(i, j) = 0.4 + 0.3 * static_cast<double>(i) + 0.2 * static_cast<double>(j * j);
    const std::vector<double> M{20, 30, 40, 50, 60};
    const auto r = entrance_limit_check(3, 3, M, d);
    double slope_err = 0.0;
    for (double s : r.leading_slopes) slope_err = std::max(slope_err, std::abs(s + 0.5) / 0.5);
    c.passed = row_sum < 1e-8 && hmax < 0.0 && slope_err < 0.1 && r.diagonal_error < 1e-6;
    c.observed = "row sums " + fmt(row_sum) + ", max form " + fmt(hmax) + ", slope rel " + fmt(slope_err) +
                 ", diagonal " + fmt(r.diagonal_error);
    c.expected = "< 1e-08, < 0, < 0.1, < 1e-06";
    c.details = {{"row_sum", row_sum}, {"max_form", hmax}, {"diagonal_error", r.diagonal_error}};
    c.details["leading_slopes"] = r.leading_slopes;
    return c;
}

CriterionOutcome run_one(int id, const Scale& sc, std::uint64_t base, unsigned threads);

// 15. Determinism of the quick suite.
CriterionOutcome c_determinism(std::uint64_t seed) {
    CriterionOutcome c;
    SuiteOptions o;
    o.budget = Budget::Quick;
    o.seed = seed;
    for (int i = 1; i < kCriteria; ++i) o.only.push_back(i);
    const unsigned saved = default_threads();
    auto run = [&](unsigned t) {
        set_default_threads(t);
        o.threads = t;
        return dump_report(acceptance_report(o, run_acceptance(o)));
    };
    const std::string a = run(4), b = run(4), one = run(1);
    set_default_threads(saved);
    const bool repeat = a == b, threads = a == one;
    c.passed = repeat && threads;
    c.observed = std::string("repeat ") + (repeat ? "identical" : "differs") + ", threads 1 vs 4 " +
                 (threads ? "identical" : "differs");
    c.expected = "identical, identical";
    c.details = {{"report_bytes", a.size()}};
    return c;
}

CriterionOutcome run_one(int id, const Scale& sc, std::uint64_t base, unsigned threads) {
    const std::uint64_t seed = derive_seed(base, static_cast<std::uint64_t>(id));
    int retries = 0;
    CriterionOutcome c;
    switch (id) {
        case 1: c = c_example(sc, seed); break;
        case 2: c = c_equivalence(sc, seed); break;
        case 3: c = c_lgv(sc, seed); break;
        case 4: c = c_bump_stade(sc, seed); break;
        case 5: c = c_reflection(sc, seed); break;
        case 6: c = c_eigen(sc, seed, threads, retries); break;
        case 7: c = c_intertwining(sc, seed); break;
        case 8: c = c_laplace(sc, seed, threads, retries); break;
        case 9: c = c_mu_NN(sc, seed, threads, retries); break;
        case 10: c = c_burke(sc, seed, threads, retries); break;
        case 11: c = c_free_energy(sc, seed, threads); break;
        case 12: c = c_tropical(sc, seed, threads); break;
        case 13: c = c_lue(sc, seed, threads, retries); break;
        case 14: c = c_entrance(sc, seed); break;
        case 15: c = c_determinism(base); break;
        default: throw ContractError("acceptance: unknown criterion " + std::to_string(id));
    }
    c.id = id;
    c.retries = retries;
    return c;
}

const char* kTitles[kCriteria] = {
    "worked insertion example, exact rationals",
    "insertion evolution equals minor construction",
    "minors equal path-tuple sums",
    "Whittaker integral identity at two rows",
    "Whittaker reflection symmetry",
    "eigenfunction relation of the one-step kernel",
    "two-row intertwining",
    "Laplace transform: contour against Monte Carlo",
    "closed-form shape law at n = N",
    "stationarity of ratio variables",
    "free energy of the square polymer",
    "zero-temperature limit",
    "top eigenvalue identity and closed-form density",
    "entrance law",
    "determinism of the quick suite",
};

}  // namespace

std::vector<CriterionOutcome> run_acceptance(const SuiteOptions& opts, const CriterionCallback& done) {
    const Scale sc{opts.budget == Budget::Full};
    std::vector<int> ids = opts.only;
    if (ids.empty())
        for (int i = 1; i <= kCriteria; ++i) ids.push_back(i);
    std::vector<CriterionOutcome> out;
    for (int id : ids) {
        if (id < 1 || id > kCriteria) throw ContractError("acceptance: criterion ids are 1.." + std::to_string(kCriteria));
        const auto t0 = std::chrono::steady_clock::now();
        CriterionOutcome c;
        try {
            c = run_one(id, sc, opts.seed, opts.threads);
        } catch (const std::exception& e) {
            c = CriterionOutcome{};
            c.id = id;
            c.observed = std::string("error: ") + e.what();
            c.expected = "no error";
        }
        c.title = kTitles[id - 1];
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (done) done(c, secs);
        out.push_back(std::move(c));
    }
    return out;
}

json acceptance_report(const SuiteOptions& opts, const std::vector<CriterionOutcome>& outcomes) {
    json r = make_report("acceptance", opts.seed);
    r["params"] = {{"budget", opts.budget == Budget::Full ? "full" : "quick"},
                   {"retry_policy",
                    {{"max_retries", kMaxRetries},
                     {"p_gate", kPGate},
                     {"seeds", "independent, derived from the criterion seed"},
                     {"scope", "hypothesis-test gates (KS, chi-square, correlation, z-score, SE agreement)"}}}};
    json rows = json::array();
    int failed = 0;
    for (const auto& c : outcomes) {
        rows.push_back({{"id", c.id},
                        {"title", c.title},
                        {"passed", c.passed},
                        {"observed", c.observed},
                        {"expected", c.expected},
                        {"retries", c.retries},
                        {"details", c.details}});
        if (!c.passed) ++failed;
    }
    r["results"] = {{"criteria", rows}, {"failed", failed}, {"total", outcomes.size()}};
    return r;
}

std::string format_outcome(const CriterionOutcome& c) {
    std::string s = "criterion " + std::to_string(c.id) + ": " + (c.passed ? "PASS" : "FAIL") + "  " + c.title +
                    "  " + c.observed + " (expected " + c.expected + ")";
    if (c.retries > 0) s += " [" + std::to_string(c.retries) + (c.retries == 1 ? " retry]" : " retries]");
    return s;
}

}  // namespace grsk
