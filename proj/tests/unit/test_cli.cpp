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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

using json = nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + GRSK_CLI_PATH + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& f) { return std::string(GRSK_DATA_DIR) + "/" + f; }

std::filesystem::path scratch() {
    auto d = std::filesystem::temp_directory_path() / "grsk_cli_test";
    std::filesystem::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("worked example in exact mode") {
    const auto r = run("rsk insert --exact --initial " + data("example23_initial.json") + " --matrix " +
                       data("example23_word.csv"));
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["schema"] == "grsk-report/1");
    const auto& z = j["results"]["z"]["rows"];
    CHECK(z[0] == json::array({"8"}));
    CHECK(z[1] == json::array({"18", "2/3"}));
    CHECK(z[2] == json::array({"84", "138/7", "28/69"}));
    CHECK(j["results"]["a"]["rows"][2] == json::array({"4", "18/7", "14/69"}));
}

TEST_CASE("growth from the empty array in floating point") {
    const auto path = scratch() / "m.csv";
    std::ofstream(path) << "1,2\n3,4\n";
    const auto r = run("rsk insert --matrix " + path.string());
    REQUIRE(r.code == 0);
    const auto z = json::parse(r.out)["results"]["z"]["rows"];
    CHECK(z[1][0].get<double>() == doctest::Approx(1.0 * 2.0 * 4.0 + 1.0 * 3.0 * 4.0));
}

TEST_CASE("property run exits cleanly") {
    const auto r = run("verify equivalence --n 5 --N 4 --trials 100 --seed 7");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["results"]["passed"] == true);
}

TEST_CASE("laplace contour and Monte Carlo agree") {
    const auto r = run("laplace --N 2 --n 3 --s 1 --method both --replicas 200000 --theta-file " +
                       data("params_n3_N2.json"));
    REQUIRE(r.code == 0);
    const auto res = json::parse(r.out)["results"];
    CHECK(res["agree_sigma"].get<double>() < 3.0);
    CHECK(res.contains("contour_value"));
    CHECK(res.contains("mc_stderr"));
}

TEST_CASE("whittaker commands") {
    const auto e = run("whittaker eval --N 2 --lambda 0:0.5,0:-0.5 --y 1.3,0.7");
    REQUIRE(e.code == 0);
    const auto v = json::parse(e.out)["results"];
    CHECK(std::abs(v["value_im"].get<double>()) < 1e-12);
    CHECK(v["value_re"].get<double>() > 0.0);
    const auto b = run("whittaker bump-stade --N 2 --s 1");
    REQUIRE(b.code == 0);
    CHECK(json::parse(b.out)["results"]["rel_diff"].get<double>() < 1e-6);
}

TEST_CASE("exit codes") {
    CHECK(run("laplace --N 3").code == 2);
    CHECK(run("no-such-command").code == 2);
    CHECK(run("tropical --eps 0.1,0.2 --replicas 10").code == 1);
    const auto bad = run("lue --N 2 --n 2 --replicas 10");
    CHECK(bad.code == 1);
    CHECK(json::parse(bad.out)["error"] == "contract");
    CHECK(run("laplace --N 2 --n 2", "GRSK_SEED=abc").code == 2);
}

TEST_CASE("seeding, thread count and output files") {
    const std::string args = "tropical --n 3 --N 3 --replicas 200 --eps 0.5,0.1";
    const auto a = run(args, "GRSK_SEED=5");
    const auto b = run(args + " --seed 5");
    const auto c = run(args + " --seed 5 --threads 1");
    const auto d = run(args + " --seed 6");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(a.out != d.out);

    const auto dir = scratch() / "reports";
    std::filesystem::remove_all(dir);
    REQUIRE(run(args + " --format csv --out " + dir.string()).code == 0);
    std::ifstream f(dir / "tropical.csv");
    std::string header;
    std::getline(f, header);
    CHECK(header.find("mean_sup") != std::string::npos);
}

TEST_CASE("other experiments") {
    const auto lue = run("lue --N 2 --n 2 --replicas 2000");
    REQUIRE(lue.code == 0);
    CHECK(json::parse(lue.out)["results"].contains("p_value"));
    const auto fe = run("free-energy --n 20,40 --replicas 50 --format csv");
    REQUIRE(fe.code == 0);
    CHECK(fe.out.rfind("abs_diff", 0) == 0);
    const auto bk = run("burke --j 1 --steps 2 --replicas 2000");
    REQUIRE(bk.code == 0);
    CHECK(json::parse(bk.out)["results"]["rows"].size() == 3 + 2);
}

TEST_CASE("acceptance driver") {
    const auto r = run("acceptance --only 1,2,3");
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["results"]["total"] == 3);
    CHECK(j["params"]["retry_policy"]["max_retries"] == 3);
}
