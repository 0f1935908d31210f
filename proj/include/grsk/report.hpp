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
#include <string>

#include "json.hpp"

namespace grsk {

using json = nlohmann::json;

inline constexpr const char* kReportSchema = "grsk-report/1";

/// {"schema", "kind", "seed"}; callers append "params" and "results".
json make_report(const std::string& kind, std::uint64_t seed);

/// Stable text form: sorted keys, two-space indent, trailing newline.
std::string dump_report(const json& report);

/// Writes rows of a flat json array of objects as CSV with the keys of the first row as header.
std::string to_csv(const json& rows);

}  // namespace grsk
