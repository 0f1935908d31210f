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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "grsk/report.hpp"

namespace grsk {

enum class Budget { Quick, Full };

inline constexpr std::uint64_t kAcceptanceSeed = 20260101;
inline constexpr int kCriteria = 15;
/// Extra attempts on independent seeds for hypothesis-test gates.
inline constexpr int kMaxRetries = 3;
inline constexpr double kPGate = 0.01;

struct SuiteOptions {
    Budget budget = Budget::Full;
    std::uint64_t seed = kAcceptanceSeed;
    unsigned threads = 0;
    std::vector<int> only;  // empty: all criteria
};

struct CriterionOutcome {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string observed;
    std::string expected;
    int retries = 0;  // summed over the criterion's gates
    json details = json::object();
};

using CriterionCallback = std::function<void(const CriterionOutcome&, double seconds)>;

/// Runs the selected criteria in order. Outcomes depend only on (budget, seed).
std::vector<CriterionOutcome> run_acceptance(const SuiteOptions& opts, const CriterionCallback& done = {});

/// Summary report; holds no timings so that equal inputs give equal bytes.
json acceptance_report(const SuiteOptions& opts, const std::vector<CriterionOutcome>& outcomes);

/// "criterion 7: PASS  title  observed (expected)".
std::string format_outcome(const CriterionOutcome& c);

}  // namespace grsk
