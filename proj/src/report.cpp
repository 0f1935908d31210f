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


#include "grsk/report.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "grsk/errors.hpp"
#include "grsk/parallel.hpp"

namespace grsk {

namespace {
std::atomic<unsigned> g_threads{0};
}

unsigned default_threads() {
    const unsigned t = g_threads.load();
    if (t != 0) return t;
    return std::max(1u, std::thread::hardware_concurrency());
}

void set_default_threads(unsigned n) { g_threads.store(n); }

json make_report(const std::string& kind, std::uint64_t seed) {
    json r;
    r["schema"] = kReportSchema;
    r["kind"] = kind;
    r["seed"] = seed;
    return r;
}

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

std::string to_csv(const json& rows) {
    if (!rows.is_array()) throw ContractError("to_csv: expected an array of objects");
    std::ostringstream out;
    if (rows.empty()) return "";
    std::vector<std::string> keys;
    for (auto it = rows[0].begin(); it != rows[0].end(); ++it) keys.push_back(it.key());
    for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < keys.size(); ++i) {
            const auto& v = row.at(keys[i]);
            out << (i ? "," : "") << (v.is_string() ? v.get<std::string>() : v.dump());
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace grsk
