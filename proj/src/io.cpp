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

#include "grsk/io.hpp"

#include <fstream>
#include <sstream>

namespace grsk::io {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <class T, class Parse>
BasicMatrix<T> read_csv(std::istream& in, Parse parse) {
    std::vector<std::vector<T>> rows;
    long hdr_n = -1, hdr_N = -1;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream h(line.substr(1));
            std::string tok;
            while (h >> tok) {
                if (tok.rfind("n=", 0) == 0) hdr_n = std::stol(tok.substr(2));
                if (tok.rfind("N=", 0) == 0) hdr_N = std::stol(tok.substr(2));
            }
            continue;
        }
        std::vector<T> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(parse(trim(cell)));
        if (!rows.empty() && row.size() != rows.front().size())
            throw ContractError("weight csv: ragged rows");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ContractError("weight csv: no data rows");
    if ((hdr_n >= 0 && static_cast<std::size_t>(hdr_n) != rows.size()) ||
        (hdr_N >= 0 && static_cast<std::size_t>(hdr_N) != rows.front().size()))
        throw ContractError("weight csv: header disagrees with data");
    BasicMatrix<T> d(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (!(rows[i][j] > T(0))) throw DomainError("weight csv: entries must be positive");
            d(i + 1, j + 1) = rows[i][j];
        }
    return d;
}

template <class T, class Conv>
json rows_json(const Pattern<T>& z, Conv conv) {
    json rows = json::array();
    for (std::size_t k = 1; k <= z.N(); ++k) {
        json r = json::array();
        for (const T& v : z.row(k)) r.push_back(conv(v));
        rows.push_back(r);
    }
    return rows;
}

template <class T, class Conv>
Pattern<T> array_from(const json& j, Conv conv) {
    const std::size_t N = j.at("N").get<std::size_t>();
    const std::size_t m = j.at("fill").get<std::size_t>();
    Pattern<T> z(N, m);
    const auto& rows = j.at("rows");
    if (rows.size() != N) throw ContractError("array json: row count differs from N");
    for (std::size_t k = 1; k <= N; ++k) {
        if (rows[k - 1].size() != std::min(k, m)) throw ContractError("array json: row length differs from fill");
        for (std::size_t l = 1; l <= std::min(k, m); ++l) {
            z(k, l) = conv(rows[k - 1][l - 1]);
            if (!(z(k, l) > T(0))) throw DomainError("array json: entries must be positive");
        }
    }
    return z;
}

std::ifstream open(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ContractError("cannot open " + path);
    return f;
}

}  // namespace

WeightMatrix read_weight_csv(std::istream& in) {
    return read_csv<double>(in, [](const std::string& s) {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw ContractError("weight csv: bad number '" + s + "'");
        return v;
    });
}

WeightMatrix read_weight_csv_file(const std::string& path) {
    auto f = open(path);
    return read_weight_csv(f);
}

void write_weight_csv(std::ostream& out, const WeightMatrix& d) {
    out << "# n=" << d.rows() << " N=" << d.cols() << "\n";
    out.precision(17);
    for (std::size_t i = 1; i <= d.rows(); ++i) {
        for (std::size_t j = 1; j <= d.cols(); ++j) out << (j > 1 ? "," : "") << d(i, j);
        out << "\n";
    }
}

Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    long long num = 0, den = 1;
    try {
        std::size_t pos = 0;
        num = std::stoll(s.substr(0, slash), &pos);
        if (pos != s.substr(0, slash).size()) throw std::invalid_argument(s);
        if (slash != std::string::npos) den = std::stoll(s.substr(slash + 1));
    } catch (const std::logic_error&) {
        throw ContractError("bad rational '" + s + "'");
    }
    if (den == 0) throw DomainError("rational with zero denominator");
    return Rational(num, den);
}

std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

BasicMatrix<Rational> read_rational_csv(std::istream& in) {
    return read_csv<Rational>(in, parse_rational);
}

BasicMatrix<Rational> read_rational_csv_file(const std::string& path) {
    auto f = open(path);
    return read_rational_csv(f);
}

json to_json(const TriangularArray& z) {
    return {{"N", z.N()}, {"fill", z.fill()}, {"rows", rows_json(z, [](double v) { return v; })}};
}

json to_json(const LogTriangularArray& t) {
    return {{"N", t.N()}, {"fill", t.fill()}, {"log_rows", rows_json(t, [](double v) { return v; })}};
}

json to_json(const Pattern<Rational>& z) {
    return {{"N", z.N()}, {"fill", z.fill()}, {"rows", rows_json(z, [](const Rational& q) { return to_string(q); })}};
}

TriangularArray array_from_json(const json& j) {
    return array_from<double>(j, [](const json& v) { return v.get<double>(); });
}

Pattern<Rational> rational_array_from_json(const json& j) {
    return array_from<Rational>(j, [](const json& v) {
        return v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long long>());
    });
}

SolvableParams params_from_json(const json& j) {
    SolvableParams p{j.at("theta_hat").get<std::vector<double>>(), j.at("theta").get<std::vector<double>>()};
    if (p.theta.empty()) throw ContractError("params json: theta is empty");
    return p;
}

json to_json(const SolvableParams& p) { return {{"theta_hat", p.theta_hat}, {"theta", p.theta}}; }

SolvableParams read_params_file(const std::string& path) {
    auto f = open(path);
    return params_from_json(json::parse(f));
}

}  // namespace grsk::io
