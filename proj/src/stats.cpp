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

#include "grsk/stats.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numeric>

#include "grsk/errors.hpp"

namespace grsk::stats {

namespace {

constexpr std::size_t kMinSamples = 100;

double ks_p(double d, double n_eff) {
    const double s = std::sqrt(n_eff);
    return kolmogorov_q((s + 0.12 + 0.11 / s) * d);
}

}  // namespace

double kolmogorov_q(double x) {
    if (x < 0.2) return 1.0;
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = sign * std::exp(-2.0 * k * k * x * x);
        sum += term;
        if (std::abs(term) < 1e-18) break;
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

TestResult ks_test(std::span<const double> samples, const std::function<double(double)>& cdf) {
    if (samples.size() < kMinSamples) throw ContractError("ks_test: need at least 100 samples");
    std::vector<double> x(samples.begin(), samples.end());
    std::sort(x.begin(), x.end());
    const double n = static_cast<double>(x.size());
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double f = cdf(x[i]);
        d = std::max({d, (i + 1) / n - f, f - i / n});
    }
    return {d, ks_p(d, n)};
}

TestResult ks_two_sample(std::span<const double> a, std::span<const double> b) {
    if (a.size() < kMinSamples || b.size() < kMinSamples)
        throw ContractError("ks_two_sample: need at least 100 samples per side");
    std::vector<double> x(a.begin(), a.end()), y(b.begin(), b.end());
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    const double na = static_cast<double>(x.size()), nb = static_cast<double>(y.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < x.size() && j < y.size()) {
        const double v = std::min(x[i], y[j]);
        while (i < x.size() && x[i] == v) ++i;
        while (j < y.size() && y[j] == v) ++j;
        d = std::max(d, std::abs(i / na - j / nb));
    }
    return {d, ks_p(d, na * nb / (na + nb))};
}

double chi_square_sf(double x, double dof) {
    if (x <= 0.0) return 1.0;
    return boost::math::gamma_q(0.5 * dof, 0.5 * x);
}

TestResult chi_square(std::span<const double> observed, std::span<const double> expected, int dof) {
    if (observed.size() != expected.size()) throw ContractError("chi_square: size mismatch");
    double stat = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        if (expected[i] <= 0.0) continue;
        const double r = observed[i] - expected[i];
        stat += r * r / expected[i];
    }
    return {stat, chi_square_sf(stat, dof)};
}

double pearson(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size() || a.size() < 2) throw ContractError("pearson: size mismatch");
    const double n = static_cast<double>(a.size());
    const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
    const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double da = a[i] - ma, db = b[i] - mb;
        sab += da * db;
        saa += da * da;
        sbb += db * db;
    }
    return sab / std::sqrt(saa * sbb);
}

std::vector<double> ranks(std::span<const double> a) {
    std::vector<std::size_t> idx(a.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return a[i] < a[j]; });
    std::vector<double> r(a.size());
    std::size_t i = 0;
    while (i < idx.size()) {
        std::size_t j = i;
        while (j + 1 < idx.size() && a[idx[j + 1]] == a[idx[i]]) ++j;
        const double avg = 0.5 * (i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) r[idx[k]] = avg;
        i = j + 1;
    }
    return r;
}

double spearman(std::span<const double> a, std::span<const double> b) {
    const auto ra = ranks(a), rb = ranks(b);
    return pearson(ra, rb);
}

TestResult rank_histogram_independence(std::span<const double> a, std::span<const double> b, int bins) {
    if (a.size() != b.size()) throw ContractError("rank_histogram_independence: size mismatch");
    if (bins < 2) throw ContractError("rank_histogram_independence: need at least 2 bins");
    const auto ra = ranks(a), rb = ranks(b);
    const double n = static_cast<double>(a.size());
    std::vector<double> obs(static_cast<std::size_t>(bins * bins), 0.0);
    std::vector<double> row(bins, 0.0), col(bins, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int u = std::min(bins - 1, static_cast<int>((ra[i] - 1.0) / n * bins));
        const int v = std::min(bins - 1, static_cast<int>((rb[i] - 1.0) / n * bins));
        obs[u * bins + v] += 1.0;
        row[u] += 1.0;
        col[v] += 1.0;
    }
    std::vector<double> exp(obs.size());
    for (int u = 0; u < bins; ++u)
        for (int v = 0; v < bins; ++v) exp[u * bins + v] = row[u] * col[v] / n;
    return chi_square(obs, exp, (bins - 1) * (bins - 1));
}

TestResult jarque_bera(std::span<const double> samples) {
    const double n = static_cast<double>(samples.size());
    if (samples.size() < kMinSamples) throw ContractError("jarque_bera: need at least 100 samples");
    const double m = std::accumulate(samples.begin(), samples.end(), 0.0) / n;
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double x : samples) {
        const double d = x - m, d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;
    const double skew = m3 / std::pow(m2, 1.5);
    const double kurt = m4 / (m2 * m2) - 3.0;
    const double jb = n / 6.0 * (skew * skew + 0.25 * kurt * kurt);
    return {jb, chi_square_sf(jb, 2.0)};
}

Summary summarize(std::span<const double> a) {
    Summary s;
    s.count = a.size();
    if (a.empty()) return s;
    const double n = static_cast<double>(a.size());
    s.mean = std::accumulate(a.begin(), a.end(), 0.0) / n;
    if (a.size() > 1) {
        double ss = 0.0;
        for (double x : a) ss += (x - s.mean) * (x - s.mean);
        s.variance = ss / (n - 1.0);
        s.std_error = std::sqrt(s.variance / n);
    }
    return s;
}

double fit_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw ContractError("fit_slope: size mismatch");
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

}  // namespace grsk::stats
