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
#include <cstdint>
#include <string>
#include <vector>

#include "grsk/arrays.hpp"
#include "grsk/params.hpp"
#include "grsk/rng.hpp"

namespace grsk {

/// Ratio diagonals eta_l = (eta_{l+1,l}, ..., eta_{N,l}) for l <= j, plus the
/// bottom-row increments z_{N,l}(m) / z_{N,l}(m-1) seen so far.
struct StationaryState {
    std::size_t N = 0;
    std::size_t j = 0;
    std::size_t time = 0;
    std::vector<Word> eta;                   // eta[l-1] starts at l+1
    std::vector<std::vector<double>> exits;  // exits[m-1][l-1]
};

/// Independent eta_{kl} ~ InvGamma(theta_k - theta_l). Needs
/// theta_1 < ... < theta_j < min(theta_{j+1}, ..., theta_N).
StationaryState init_stationary(const SolvableParams& params, std::size_t j, RngStream& rng);

/// Inserts the word b (b_1..b_N) along the first j diagonals.
StationaryState burke_step(const StationaryState& s, const Word& b);
/// Same with b_k ~ InvGamma(theta_hat_{time+1} + theta_k).
StationaryState burke_step(const StationaryState& s, const SolvableParams& params, RngStream& rng);

/// Array with the given ratio diagonals (first j) and unit diagonal entries z_{l,l};
/// diagonals past j are filled with ones.
TriangularArray array_from_ratios(const StationaryState& s);

struct MarginalCheck {
    std::string name;
    double shape = 0.0;
    double ks_p = 0.0;
};

struct BurkeReport {
    std::size_t N = 0, j = 0, steps = 0, replicas = 0;
    std::uint64_t seed = 0;
    std::vector<MarginalCheck> marginals;
    double min_ks_p = 1.0;
    double max_abs_spearman = 0.0;
    std::string worst_pair;
    std::vector<double> rank_histogram_p;  // 10 seeded random pairs
    bool passed(double p_gate = 0.01, double corr_gate = 0.01) const;
};

/// Runs `steps` steps from the stationary start and screens the final ratios
/// together with all bottom-row increments.
BurkeReport burke_check(const SolvableParams& params, std::size_t j, std::size_t steps, std::size_t replicas,
                        std::uint64_t seed, unsigned threads = 0);

/// log Z_n for an n x n square of InvGamma(gamma) weights, in log domain.
double log_partition_square(double gamma, std::size_t n, RngStream& rng);

struct FreeEnergyReport {
    double gamma = 0.0;
    std::size_t n = 0, replicas = 0;
    std::uint64_t seed = 0;
    double mean = 0.0;       // of (1/n) log Z_n
    double std_error = 0.0;
    double variance_log_Z = 0.0;
    double target = 0.0;     // -2 digamma(gamma / 2)
    double abs_diff = 0.0;
    double tolerance = 0.0;  // max(3 SE, 0.01)
    bool within() const { return abs_diff < tolerance; }
};
FreeEnergyReport free_energy_run(double gamma, std::size_t n, std::size_t replicas, std::uint64_t seed,
                                 unsigned threads = 0);

struct FreeEnergyScan {
    std::vector<FreeEnergyReport> runs;
    /// Slope of log var(log Z_n) against log n.
    double variance_exponent = 0.0;
};
FreeEnergyScan free_energy_scan(double gamma, const std::vector<std::size_t>& n_list, std::size_t replicas,
                                std::uint64_t seed, unsigned threads = 0);

}  // namespace grsk
