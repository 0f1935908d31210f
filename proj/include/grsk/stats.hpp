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

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace grsk::stats {

struct TestResult {
    double statistic = 0.0;
    double p_value = 1.0;
};

/// Asymptotic Kolmogorov tail Q(x) = 2 sum (-1)^{k-1} exp(-2 k^2 x^2).
double kolmogorov_q(double x);

/// One-sample KS with the Stephens small-sample correction. Needs >= 100 samples.
TestResult ks_test(std::span<const double> samples, const std::function<double(double)>& cdf);
TestResult ks_two_sample(std::span<const double> a, std::span<const double> b);

/// Pearson chi-square of observed counts against expected counts.
TestResult chi_square(std::span<const double> observed, std::span<const double> expected, int dof);
double chi_square_sf(double x, double dof);

double pearson(std::span<const double> a, std::span<const double> b);
double spearman(std::span<const double> a, std::span<const double> b);
/// Chi-square independence test on a bins x bins histogram of ranks.
TestResult rank_histogram_independence(std::span<const double> a, std::span<const double> b, int bins);
TestResult jarque_bera(std::span<const double> samples);

std::vector<double> ranks(std::span<const double> a);

struct Summary {
    double mean = 0.0;
    double variance = 0.0;  // unbiased
    double std_error = 0.0;
    std::size_t count = 0;
};
Summary summarize(std::span<const double> a);

/// Least-squares slope of y on x.
double fit_slope(std::span<const double> x, std::span<const double> y);

}  // namespace grsk::stats
