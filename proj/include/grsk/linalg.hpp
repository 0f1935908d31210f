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

#include <array>
#include <complex>
#include <vector>

namespace grsk::linalg {

using MatrixLD = std::vector<std::vector<long double>>;
using Matrix = std::vector<std::vector<double>>;

/// Determinant by LU with partial pivoting after geometric-mean balancing of
/// rows and columns.
long double determinant(MatrixLD a);

/// Solves A x = b for symmetric positive definite A; returns false if the
/// factorization breaks down.
bool cholesky_solve(const Matrix& a, const std::vector<double>& b, std::vector<double>& x);
/// Lower Cholesky factor; empty on failure.
Matrix cholesky(const Matrix& a);

/// Eigenvalues of a Hermitian matrix, sorted descending. Closed form for
/// n <= 2, cyclic Jacobi otherwise.
std::vector<double> hermitian_eigenvalues(const std::vector<std::vector<std::complex<double>>>& m);

}  // namespace grsk::linalg
