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

#include "grsk/stationarity.hpp"

#include <algorithm>
#include <cmath>

#include "grsk/errors.hpp"
#include "grsk/insertion.hpp"
#include "grsk/parallel.hpp"
#include "grsk/specfun.hpp"
#include "grsk/stats.hpp"

namespace grsk {

namespace {

void check_order(const SolvableParams& p, std::size_t j) {
    const std::size_t N = p.N();
    if (j < 1 || j >= N) throw ContractError("stationary: need 1 <= j < N");
    for (std::size_t l = 1; l < j; ++l)
        if (!(p.theta[l - 1] < p.theta[l])) throw ContractError("stationary: theta_1 < ... < theta_j required");
    for (std::size_t k = j + 1; k <= N; ++k)
        if (!(p.theta[j - 1] < p.theta[k - 1])) throw ContractError("stationary: theta_j < min(theta_{j+1..N}) required");
}

}  // namespace

StationaryState init_stationary(const SolvableParams& p, std::size_t j, RngStream& rng) {
    check_order(p, j);
    StationaryState s;
    s.N = p.N();
    s.j = j;
    for (std::size_t l = 1; l <= j; ++l) {
        Word w{l + 1, {}};
        for (std::size_t k = l + 1; k <= s.N; ++k) w.entries.push_back(sample_inverse_gamma(p.theta[k - 1] - p.theta[l - 1], rng));
        s.eta.push_back(std::move(w));
    }
    return s;
}

StationaryState burke_step(const StationaryState& s, const Word& b) {
    if (b.start != 1 || b.size() != s.N) throw ContractError("burke_step: word must be (b_1..b_N)");
    StationaryState out = s;
    Word word = b;
    std::vector<double> exits(s.j);
    for (std::size_t l = 1; l <= s.j; ++l) {
        auto r = ratio_insert(s.eta[l - 1], word);
        out.eta[l - 1] = std::move(r.eta);
        exits[l - 1] = r.zeta_last;
        word = std::move(r.b);
    }
    out.exits.push_back(std::move(exits));
    ++out.time;
    return out;
}

StationaryState burke_step(const StationaryState& s, const SolvableParams& p, RngStream& rng) {
    const std::size_t n = s.time + 1;
    p.validate(n);
    Word b{1, {}};
    for (std::size_t k = 1; k <= s.N; ++k) b.entries.push_back(sample_inverse_gamma(p.gamma(n, k), rng));
    return burke_step(s, b);
}

TriangularArray array_from_ratios(const StationaryState& s) {
    TriangularArray z(s.N, s.N);
    for (std::size_t l = 1; l <= s.N; ++l) {
        z(l, l) = 1.0;
        for (std::size_t k = l + 1; k <= s.N; ++k) z(k, l) = l <= s.j ? z(k - 1, l) * s.eta[l - 1][k] : 1.0;
    }
    return z;
}

bool BurkeReport::passed(double p_gate, double corr_gate) const {
    return min_ks_p > p_gate && max_abs_spearman < corr_gate;
}

BurkeReport burke_check(const SolvableParams& p, std::size_t j, std::size_t steps, std::size_t replicas,
                        std::uint64_t seed, unsigned threads) {
    check_order(p, j);
    p.validate(steps);
    const std::size_t N = p.N();
    BurkeReport rep;
    rep.N = N;
    rep.j = j;
    rep.steps = steps;
    rep.replicas = replicas;
    rep.seed = seed;
    for (std::size_t l = 1; l <= j; ++l)
        for (std::size_t k = l + 1; k <= N; ++k)
            rep.marginals.push_back({"eta_" + std::to_string(k) + std::to_string(l), p.theta[k - 1] - p.theta[l - 1]});
    for (std::size_t m = 1; m <= steps; ++m)
        for (std::size_t l = 1; l <= j; ++l)
            rep.marginals.push_back(
                {"exit_" + std::to_string(m) + "_" + std::to_string(l), p.gamma(m, l)});
    const std::size_t V = rep.marginals.size();

    const auto rows = run_replicas(
        replicas, seed,
        [&](RngStream& rng, std::size_t) {
            StationaryState s = init_stationary(p, j, rng);
            for (std::size_t m = 0; m < steps; ++m) s = burke_step(s, p, rng);
            std::vector<double> v;
            v.reserve(V);
            for (const auto& w : s.eta) v.insert(v.end(), w.entries.begin(), w.entries.end());
            for (const auto& e : s.exits) v.insert(v.end(), e.begin(), e.end());
            return v;
        },
        threads);

    std::vector<std::vector<double>> cols(V, std::vector<double>(replicas));
    for (std::size_t r = 0; r < replicas; ++r)
        for (std::size_t v = 0; v < V; ++v) cols[v][r] = rows[r][v];
    for (std::size_t v = 0; v < V; ++v) {
        const double shape = rep.marginals[v].shape;
        rep.marginals[v].ks_p = stats::ks_test(cols[v], [shape](double x) { return inverse_gamma_cdf(x, shape); }).p_value;
        rep.min_ks_p = std::min(rep.min_ks_p, rep.marginals[v].ks_p);
    }
    std::vector<std::vector<double>> rk(V);
    for (std::size_t v = 0; v < V; ++v) rk[v] = stats::ranks(cols[v]);
    for (std::size_t a = 0; a < V; ++a)
        for (std::size_t b = a + 1; b < V; ++b) {
            const double c = std::abs(stats::pearson(rk[a], rk[b]));
            if (c > rep.max_abs_spearman) {
                rep.max_abs_spearman = c;
                rep.worst_pair = rep.marginals[a].name + "~" + rep.marginals[b].name;
            }
        }
    RngStream pick(derive_seed(seed, 0xb0b), 0);
    for (int i = 0; i < 10 && V >= 2; ++i) {
        const std::size_t a = pick.next_u64() % V;
        std::size_t b = pick.next_u64() % (V - 1);
        if (b >= a) ++b;
        rep.rank_histogram_p.push_back(stats::rank_histogram_independence(cols[a], cols[b], 5).p_value);
    }
    return rep;
}

double log_partition_square(double gamma, std::size_t n, RngStream& rng) {
    if (!(gamma > 0.0)) throw DomainError("log_partition_square: gamma must be positive");
    if (n == 0) throw ContractError("log_partition_square: n must be positive");
    std::vector<double> row(n);
    for (std::size_t i = 0; i < n; ++i) {
        double left = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double logd = -sample_log_gamma(gamma, rng);
            double acc;
            if (i == 0 && j == 0) acc = 0.0;
            else if (i == 0) acc = left;
            else if (j == 0) acc = row[0];
            else acc = log_add_exp(row[j], left);
            row[j] = acc + logd;
            left = row[j];
        }
    }
    return row[n - 1];
}

FreeEnergyReport free_energy_run(double gamma, std::size_t n, std::size_t replicas, std::uint64_t seed,
                                 unsigned threads) {
    if (replicas < 2) throw ContractError("free_energy_run: need at least 2 replicas");
    const auto logs = run_replicas(
        replicas, seed, [&](RngStream& rng, std::size_t) { return log_partition_square(gamma, n, rng); }, threads);
    std::vector<double> f(logs);
    for (double& v : f) v /= static_cast<double>(n);
    const auto s = stats::summarize(f);
    FreeEnergyReport r;
    r.gamma = gamma;
    r.n = n;
    r.replicas = replicas;
    r.seed = seed;
    r.mean = s.mean;
    r.std_error = s.std_error;
    r.variance_log_Z = stats::summarize(logs).variance;
    r.target = -2.0 * digamma(0.5 * gamma);
    r.abs_diff = std::abs(r.mean - r.target);
    r.tolerance = std::max(3.0 * r.std_error, 0.01);
    return r;
}

FreeEnergyScan free_energy_scan(double gamma, const std::vector<std::size_t>& n_list, std::size_t replicas,
                                std::uint64_t seed, unsigned threads) {
    FreeEnergyScan out;
    std::vector<double> ln, lv;
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        out.runs.push_back(free_energy_run(gamma, n_list[i], replicas, derive_seed(seed, n_list[i]), threads));
        ln.push_back(std::log(static_cast<double>(n_list[i])));
        lv.push_back(std::log(out.runs.back().variance_log_Z));
    }
    if (n_list.size() >= 2) out.variance_exponent = stats::fit_slope(ln, lv);
    return out;
}

}  // namespace grsk
