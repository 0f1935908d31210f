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

#include "grsk/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "grsk/errors.hpp"

namespace grsk::linalg {

long double determinant(MatrixLD a) {
    const std::size_t n = a.size();
    if (n == 0) return 1.0L;
    long double log_scale = 0.0L;
    // Balance rows, then columns, by the geometric mean of nonzero magnitudes.
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i < n; ++i) {
            long double s = 0.0L;
            int cnt = 0;
            for (std::size_t j = 0; j < n; ++j) {
                const long double v = pass == 0 ? a[i][j] : a[j][i];
                if (v != 0.0L) {
                    s += std::log(std::fabs(v));
                    ++cnt;
                }
            }
            if (cnt == 0) return 0.0L;
            const long double g = s / cnt;
            const long double f = std::exp(-g);
            for (std::size_t j = 0; j < n; ++j) (pass == 0 ? a[i][j] : a[j][i]) *= f;
            log_scale += g;
        }
    }
    long double det = 1.0L;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::fabs(a[r][c]) > std::fabs(a[p][c])) p = r;
        if (a[p][c] == 0.0L) return 0.0L;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const long double f = a[r][c] / a[c][c];
            if (f == 0.0L) continue;
            for (std::size_t j = c + 1; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det * std::exp(log_scale);
}

Matrix cholesky(const Matrix& a) {
    const std::size_t n = a.size();
    Matrix l(n, std::vector<double>(n, 0.0));
    for (std::size_t j = 0; j < n; ++j) {
        double s = a[j][j];
        for (std::size_t k = 0; k < j; ++k) s -= l[j][k] * l[j][k];
        if (!(s > 0.0)) return {};
        l[j][j] = std::sqrt(s);
        for (std::size_t i = j + 1; i < n; ++i) {
            double t = a[i][j];
            for (std::size_t k = 0; k < j; ++k) t -= l[i][k] * l[j][k];
            l[i][j] = t / l[j][j];
        }
    }
    return l;
}

bool cholesky_solve(const Matrix& a, const std::vector<double>& b, std::vector<double>& x) {
    const Matrix l = cholesky(a);
    if (l.empty() && !a.empty()) return false;
    const std::size_t n = a.size();
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[i];
        for (std::size_t k = 0; k < i; ++k) s -= l[i][k] * y[k];
        y[i] = s / l[i][i];
    }
    x.assign(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = y[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= l[k][i] * x[k];
        x[i] = s / l[i][i];
    }
    return true;
}

std::vector<double> hermitian_eigenvalues(const std::vector<std::vector<std::complex<double>>>& m) {
    using C = std::complex<double>;
    const std::size_t n = m.size();
    std::vector<double> ev;
    if (n == 0) return ev;
    if (n == 1) return {m[0][0].real()};
    if (n == 2) {
        const double a = m[0][0].real(), d = m[1][1].real();
        const double r = std::hypot(0.5 * (a - d), std::abs(m[0][1]));
        return {0.5 * (a + d) + r, 0.5 * (a + d) - r};
    }
    auto h = m;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0, diag = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            diag += std::norm(h[p][p]);
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(h[p][q]);
        }
        if (off <= 1e-30 * diag) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double g = std::abs(h[p][q]);
                if (g == 0.0) continue;
                // Unitary rotation zeroing h[p][q].
                const C phase = h[p][q] / g;
                const double app = h[p][p].real(), aqq = h[q][q].real();
                const double theta = 0.5 * std::atan2(2.0 * g, aqq - app);
                const double c = std::cos(theta), s = std::sin(theta);
                for (std::size_t k = 0; k < n; ++k) {
                    const C hkp = h[k][p], hkq = h[k][q];
                    h[k][p] = c * hkp - s * std::conj(phase) * hkq;
                    h[k][q] = s * phase * hkp + c * hkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const C hpk = h[p][k], hqk = h[q][k];
                    h[p][k] = c * hpk - s * phase * hqk;
                    h[q][k] = s * std::conj(phase) * hpk + c * hqk;
                }
            }
    }
    for (std::size_t i = 0; i < n; ++i) ev.push_back(h[i][i].real());
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

}  // namespace grsk::linalg
