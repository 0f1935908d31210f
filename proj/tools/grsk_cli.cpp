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

// Exit codes: 0 ok, 1 numerical or contract failure (JSON diagnostics on
// stdout), 2 usage error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "grsk/acceptance.hpp"
#include "grsk/errors.hpp"
#include "grsk/insertion.hpp"
#include "grsk/io.hpp"
#include "grsk/limits.hpp"
#include "grsk/measures.hpp"
#include "grsk/parallel.hpp"
#include "grsk/paths.hpp"
#include "grsk/report.hpp"
#include "grsk/stationarity.hpp"
#include "grsk/whittaker.hpp"

using namespace grsk;

namespace {

struct Globals {
    std::uint64_t seed = 1;
    unsigned threads = 0;
    std::string out;
    std::string format = "json";
};

/// Report with a "rows" array is emitted as CSV row by row; otherwise the
/// results object becomes a single row.
void emit(const Globals& g, const std::string& name, const json& report) {
    std::string text;
    if (g.format == "csv") {
        const json& res = report.at("results");
        if (res.contains("rows")) {
            text = to_csv(res["rows"]);
        } else {
            json row = json::object();
            for (auto it = res.begin(); it != res.end(); ++it)
                if (!it->is_structured()) row[it.key()] = *it;
            text = to_csv(json::array({row}));
        }
    } else {
        text = dump_report(report);
    }
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::filesystem::create_directories(g.out);
    const auto path = std::filesystem::path(g.out) / (name + (g.format == "csv" ? ".csv" : ".json"));
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << text;
}

/// "a" or "a:b" (real:imag).
cplx parse_cplx(const std::string& s) {
    const auto c = s.find(':');
    if (c == std::string::npos) return std::stod(s);
    return {std::stod(s.substr(0, c)), std::stod(s.substr(c + 1))};
}

std::vector<cplx> parse_cplx_list(const std::vector<std::string>& v) {
    std::vector<cplx> out;
    for (const auto& s : v) out.push_back(parse_cplx(s));
    return out;
}

json cplx_json(cplx z) { return json::array({z.real(), z.imag()}); }

SolvableParams load_params(const std::string& file, double gamma, std::size_t n, std::size_t N) {
    if (!file.empty()) return io::read_params_file(file);
    return SolvableParams{std::vector<double>(n, 0.5 * gamma), std::vector<double>(N, 0.5 * gamma)};
}

int fail(const std::string& kind, const std::string& message) {
    json d = {{"schema", kReportSchema}, {"error", kind}, {"message", message}};
    std::cout << d.dump(2) << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"grsk: geometric RSK, polymers and Whittaker measures"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    if (const char* env = std::getenv("GRSK_SEED")) {
        try {
            g.seed = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "GRSK_SEED must be an unsigned integer\n";
            return 2;
        }
    }
    app.add_option("--seed", g.seed, "base seed (default: GRSK_SEED or 1)");
    app.add_option("--threads", g.threads, "worker threads, 0 for all cores");
    app.add_option("--out", g.out, "directory for report files (default: stdout)");
    app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    std::function<int()> action;

    // rsk insert
    auto* rsk = app.add_subcommand("rsk", "geometric RSK");
    rsk->require_subcommand(1);
    auto* ins = rsk->add_subcommand("insert", "insert the rows of a matrix");
    std::string matrix_file, initial_file;
    bool exact = false;
    ins->add_option("--matrix", matrix_file, "CSV of weights, one row per time step")->required()->check(CLI::ExistingFile);
    ins->add_option("--initial", initial_file, "JSON array to insert into (default: empty)")->check(CLI::ExistingFile);
    ins->add_flag("--exact", exact, "rational arithmetic; entries like 3 or 2/5");
    ins->callback([&] {
        action = [&] {
            json rep = make_report("rsk-insert", g.seed);
            rep["params"] = {{"matrix", matrix_file}, {"initial", initial_file}, {"exact", exact}};
            auto run = [&](const auto& d, auto z, auto to_js) {
                if (z.N() != d.cols()) throw ContractError("rsk insert: matrix width must equal the array size");
                decltype(z) a;
                for (std::size_t i = 1; i <= d.rows(); ++i) {
                    auto r = grow_row(z, d.row_word(i));
                    z = std::move(r.z);
                    a = std::move(r.a);
                }
                rep["results"] = {{"z", to_js(z)}, {"a", to_js(a)}};
            };
            if (exact) {
                const auto d = io::read_rational_csv_file(matrix_file);
                Pattern<io::Rational> z0 = initial_file.empty()
                                               ? Pattern<io::Rational>(d.cols(), 0)
                                               : io::rational_array_from_json(json::parse(std::ifstream(initial_file)));
                run(d, z0, [](const Pattern<io::Rational>& p) { return io::to_json(p); });
            } else {
                const auto d = io::read_weight_csv_file(matrix_file);
                TriangularArray z0 = initial_file.empty() ? TriangularArray(d.cols(), 0)
                                                          : io::array_from_json(json::parse(std::ifstream(initial_file)));
                run(d, z0, [](const TriangularArray& p) { return io::to_json(p); });
            }
            emit(g, "rsk_insert", rep);
            return 0;
        };
    });

    // verify equivalence
    auto* ver = app.add_subcommand("verify", "property checks");
    ver->require_subcommand(1);
    auto* eq = ver->add_subcommand("equivalence", "insertion evolution against the minor construction");
    std::size_t vn = 5, vN = 4, trials = 100;
    eq->add_option("--n", vn, "time steps")->check(CLI::Range(1, 12));
    eq->add_option("--N", vN, "columns")->check(CLI::Range(1, 12));
    eq->add_option("--trials", trials, "random matrices")->check(CLI::PositiveNumber);
    eq->callback([&] {
        action = [&] {
            double worst = 0.0;
            for (std::size_t t = 0; t < trials; ++t) {
                RngStream rng(g.seed, t);
                WeightMatrix d(vn, vN);
                for (std::size_t i = 1; i <= vn; ++i)
                    for (std::size_t j = 1; j <= vN; ++j) d(i, j) = 0.1 + 9.9 * rng.uniform();
                const auto a = evolve_from_empty(d, vn);
                const auto b = p_tableau(d, vn);
                for (std::size_t k = 1; k <= vN; ++k)
                    for (std::size_t l = 1; l <= std::min(k, vn); ++l)
                        worst = std::max(worst, std::abs(a(k, l) - b(k, l)) / std::abs(b(k, l)));
            }
            json rep = make_report("verify-equivalence", g.seed);
            rep["params"] = {{"n", vn}, {"N", vN}, {"trials", trials}};
            rep["results"] = {{"max_rel_discrepancy", worst}, {"tolerance", 1e-9}, {"passed", worst < 1e-9}};
            emit(g, "verify_equivalence", rep);
            return worst < 1e-9 ? 0 : 1;
        };
    });

    // whittaker eval / bump-stade
    auto* wh = app.add_subcommand("whittaker", "Whittaker functions");
    wh->require_subcommand(1);
    auto* ev = wh->add_subcommand("eval", "Psi_lambda(y)");
    std::size_t wN = 2;
    std::vector<std::string> lam_s, nu_s;
    std::vector<double> yv;
    double bs_s = 1.0;
    bool prime = false;
    ev->add_option("--N", wN, "rank")->check(CLI::Range(1, 6));
    ev->add_option("--lambda", lam_s, "spectral parameters, re or re:im")->required()->delimiter(',');
    ev->add_option("--y", yv, "positive arguments")->required()->delimiter(',');
    ev->callback([&] {
        action = [&] {
            const auto lam = parse_cplx_list(lam_s);
            if (lam.size() != wN || yv.size() != wN) throw ContractError("whittaker eval: need N values for --lambda and --y");
            WhittakerOptions o;
            o.seed = g.seed;
            const auto v = whittaker_eval(lam, yv, o);
            const cplx val = v.value();
            json rep = make_report("whittaker-eval", g.seed);
            rep["params"] = {{"N", wN}, {"y", yv}};
            rep["params"]["lambda"] = json::array();
            for (cplx l : lam) rep["params"]["lambda"].push_back(cplx_json(l));
            rep["results"] = {{"value_re", val.real()},
                              {"value_im", val.imag()},
                              {"est_error", v.rel_error * std::abs(val)},
                              {"method", v.method},
                              {"converged", v.converged}};
            emit(g, "whittaker_eval", rep);
            return v.converged ? 0 : 1;
        };
    });
    auto* bs = wh->add_subcommand("bump-stade", "integral identity, quadrature against the Gamma product");
    bs->add_option("--N", wN, "rank")->check(CLI::Range(1, 2));
    bs->add_option("--s", bs_s, "scale")->check(CLI::PositiveNumber);
    bs->add_option("--lambda", lam_s, "first parameter set")->delimiter(',');
    bs->add_option("--nu", nu_s, "second parameter set")->delimiter(',');
    bs->add_flag("--prime", prime, "reflected form");
    bs->callback([&] {
        action = [&] {
            std::vector<cplx> lam = parse_cplx_list(lam_s), nu = parse_cplx_list(nu_s);
            if (lam.empty()) lam = wN == 1 ? std::vector<cplx>{-0.45} : std::vector<cplx>{-0.3, -0.6};
            if (nu.empty()) nu = wN == 1 ? std::vector<cplx>{-0.3} : std::vector<cplx>{-0.4, -0.2};
            if (lam.size() != wN || nu.size() != wN) throw ContractError("bump-stade: need N values for --lambda and --nu");
            const auto r = bump_stade(bs_s, lam, nu, prime);
            json rep = make_report("whittaker-bump-stade", g.seed);
            rep["params"] = {{"N", wN}, {"s", bs_s}, {"prime", prime}};
            rep["results"] = {{"value_re", r.lhs.real()}, {"value_im", r.lhs.imag()}, {"est_error", r.est_error},
                              {"rhs_re", r.rhs.real()},   {"rhs_im", r.rhs.imag()},   {"rel_diff", r.rel_diff},
                              {"converged", r.converged}};
            emit(g, "whittaker_bump_stade", rep);
            return r.converged ? 0 : 1;
        };
    });

    // laplace
    auto* lap = app.add_subcommand("laplace", "E[exp(-s z_{N,1}(n))]");
    std::size_t ln = 3, lN = 2, replicas = 100000;
    double ls = 1.0;
    std::string theta_file, method = "both";
    lap->add_option("--N", lN, "columns")->check(CLI::Range(1, 2));
    lap->add_option("--n", ln, "time")->check(CLI::PositiveNumber);
    lap->add_option("--s", ls, "transform variable")->check(CLI::PositiveNumber);
    lap->add_option("--theta-file", theta_file, "JSON {theta_hat, theta}")->check(CLI::ExistingFile);
    lap->add_option("--method", method, "contour, mc or both")->check(CLI::IsMember({"contour", "mc", "both"}));
    lap->add_option("--replicas", replicas, "Monte Carlo replicas")->check(CLI::PositiveNumber);
    lap->callback([&] {
        action = [&] {
            SolvableParams p = theta_file.empty()
                                   ? SolvableParams{std::vector<double>{0.8, 0.9, 1.1, 1.0, 1.2, 0.95}, std::vector<double>{-0.4, -0.1}}
                                   : io::read_params_file(theta_file);
            if (theta_file.empty()) p.theta.resize(lN);
            json rep = make_report("laplace", g.seed);
            rep["params"] = {{"N", lN}, {"n", ln}, {"s", ls}, {"method", method}, {"replicas", replicas}};
            rep["params"]["theta"] = io::to_json(p);
            json res = json::object();
            double cv = 0.0;
            if (method != "mc") {
                const auto c = laplace_contour(ls, ln, lN, p);
                cv = c.value;
                res["contour_value"] = c.value;
                res["contour_tail_bound"] = c.tail_bound;
                res["truncation_warning"] = c.truncation_warning;
            }
            if (method != "contour") {
                const auto mc = laplace_mc(ls, ln, lN, p, replicas, g.seed, g.threads);
                res["mc_value"] = mc.mean;
                res["mc_stderr"] = mc.std_error;
                if (method == "both") res["agree_sigma"] = std::abs(mc.mean - cv) / mc.std_error;
            }
            rep["results"] = res;
            emit(g, "laplace", rep);
            return 0;
        };
    });

    // burke
    auto* bk = app.add_subcommand("burke", "stationarity of ratio variables");
    std::size_t bj = 2, steps = 5;
    bk->add_option("--theta-file", theta_file, "JSON {theta_hat, theta}")->check(CLI::ExistingFile);
    bk->add_option("--j", bj, "tracked diagonals")->check(CLI::PositiveNumber);
    bk->add_option("--steps", steps, "row insertions")->check(CLI::PositiveNumber);
    bk->add_option("--replicas", replicas, "replicas")->check(CLI::PositiveNumber);
    bk->callback([&] {
        action = [&] {
            const SolvableParams p = theta_file.empty()
                                         ? SolvableParams{{1.3, 1.5, 1.7, 1.4, 1.6}, {-1.0, -0.5, 0.2, 0.4}}
                                         : io::read_params_file(theta_file);
            const auto r = burke_check(p, bj, steps, replicas, g.seed, g.threads);
            json rows = json::array();
            for (const auto& m : r.marginals) rows.push_back({{"variable", m.name}, {"shape", m.shape}, {"ks_p", m.ks_p}});
            json rep = make_report("burke", g.seed);
            rep["params"] = {{"j", bj}, {"steps", steps}, {"replicas", replicas}, {"theta", io::to_json(p)}};
            rep["results"] = {{"rows", rows},
                              {"min_ks_p", r.min_ks_p},
                              {"max_abs_corr", r.max_abs_spearman},
                              {"worst_pair", r.worst_pair},
                              {"rank_histogram_p", r.rank_histogram_p},
                              {"passed", r.passed()}};
            emit(g, "burke", rep);
            return 0;
        };
    });

    // free-energy
    auto* fe = app.add_subcommand("free-energy", "(1/n) log Z_n for the square polymer");
    double gamma = 1.0;
    std::vector<std::size_t> n_list{250, 500, 1000};
    fe->add_option("--gamma", gamma, "inverse-gamma parameter")->check(CLI::PositiveNumber);
    fe->add_option("--n", n_list, "sizes")->delimiter(',');
    fe->add_option("--replicas", replicas, "replicas")->check(CLI::Range(2, 100000000));
    fe->callback([&] {
        action = [&] {
            const auto scan = free_energy_scan(gamma, n_list, replicas, g.seed, g.threads);
            json rows = json::array();
            for (const auto& r : scan.runs)
                rows.push_back({{"n", r.n},
                                {"mean", r.mean},
                                {"std_error", r.std_error},
                                {"target", r.target},
                                {"abs_diff", r.abs_diff},
                                {"variance_log_Z", r.variance_log_Z}});
            json rep = make_report("free-energy", g.seed);
            rep["params"] = {{"gamma", gamma}, {"n", n_list}, {"replicas", replicas}};
            rep["results"] = {{"rows", rows}, {"variance_exponent", scan.variance_exponent}};
            emit(g, "free_energy", rep);
            return 0;
        };
    });

    // tropical
    auto* tr = app.add_subcommand("tropical", "coupled zero-temperature limit");
    std::vector<double> eps{0.5, 0.2, 0.1, 0.05};
    std::size_t tn = 4, tN = 4;
    tr->add_option("--eps", eps, "decreasing temperatures")->delimiter(',');
    tr->add_option("--n", tn, "time")->check(CLI::PositiveNumber);
    tr->add_option("--N", tN, "columns")->check(CLI::PositiveNumber);
    tr->add_option("--gamma", gamma, "homogeneous rate")->check(CLI::PositiveNumber);
    tr->add_option("--theta-file", theta_file, "JSON {theta_hat, theta}")->check(CLI::ExistingFile);
    tr->add_option("--replicas", replicas, "replicas")->check(CLI::Range(2, 100000000));
    tr->callback([&] {
        action = [&] {
            const SolvableParams p = load_params(theta_file, gamma, tn, tN);
            const auto r = tropical_limit_run(p, tn, tN, eps, replicas, g.seed, g.threads);
            json rows = json::array();
            for (const auto& x : r.rows)
                rows.push_back({{"eps", x.eps},
                                {"mean_sup", x.mean_sup},
                                {"std_error", x.std_error},
                                {"max_sup", x.max_sup},
                                {"envelope_violations", x.envelope_violations}});
            json rep = make_report("tropical", g.seed);
            rep["params"] = {{"n", tn}, {"N", tN}, {"replicas", replicas}, {"theta", io::to_json(p)}};
            rep["results"] = {{"rows", rows}, {"decreasing", r.decreasing()}};
            emit(g, "tropical", rep);
            return 0;
        };
    });

    // lue
    auto* lu = app.add_subcommand("lue", "top eigenvalue against last passage time");
    std::size_t un = 2, uN = 2;
    lu->add_option("--N", uN, "rows of A")->check(CLI::Range(1, 3));
    lu->add_option("--n", un, "columns of A")->check(CLI::PositiveNumber);
    lu->add_option("--gamma", gamma, "homogeneous rate")->check(CLI::PositiveNumber);
    lu->add_option("--theta-file", theta_file, "JSON {theta_hat, theta}")->check(CLI::ExistingFile);
    lu->add_option("--replicas", replicas, "replicas per side")->check(CLI::PositiveNumber);
    lu->callback([&] {
        action = [&] {
            const SolvableParams p = load_params(theta_file, gamma, un, uN);
            const auto r = lue_compare(p, un, uN, replicas, g.seed, g.threads);
            json rep = make_report("lue", g.seed);
            rep["params"] = {{"n", un}, {"N", uN}, {"replicas", replicas}, {"theta", io::to_json(p)}};
            rep["results"] = {{"ks_statistic", r.ks_statistic},
                              {"p_value", r.p_value},
                              {"mean_eigen", r.mean_eigen},
                              {"mean_lpp", r.mean_lpp}};
            emit(g, "lue", rep);
            return 0;
        };
    });

    // acceptance
    auto* acc = app.add_subcommand("acceptance", "run the acceptance criteria");
    std::string budget = "quick";
    std::vector<int> only;
    acc->add_option("--budget", budget, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    acc->add_option("--only", only, "criterion ids")->delimiter(',');
    acc->callback([&] {
        action = [&] {
            SuiteOptions o;
            o.budget = budget == "full" ? Budget::Full : Budget::Quick;
            o.seed = app.count("--seed") || std::getenv("GRSK_SEED") ? g.seed : kAcceptanceSeed;
            o.threads = g.threads;
            o.only = only;
            const auto res = run_acceptance(o, [](const CriterionOutcome& c, double) {
                std::cerr << format_outcome(c) << "\n";
            });
            const json rep = acceptance_report(o, res);
            emit(g, "acceptance", rep);
            return rep["results"]["failed"].get<int>() == 0 ? 0 : 1;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return e.get_exit_code() == 0 ? code : 2;
    }
    set_default_threads(g.threads);
    try {
        return action();
    } catch (const ContractError& e) {
        return fail("contract", e.what());
    } catch (const DomainError& e) {
        return fail("domain", e.what());
    } catch (const SizeError& e) {
        return fail("size", e.what());
    } catch (const ConvergenceError& e) {
        return fail("convergence", e.what());
    } catch (const InvariantError& e) {
        return fail("invariant", e.what());
    } catch (const json::exception& e) {
        return fail("input", e.what());
    } catch (const std::exception& e) {
        return fail("runtime", e.what());
    }
}
