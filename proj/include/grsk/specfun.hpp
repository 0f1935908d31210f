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

#include <complex>
#include <span>
#include <vector>

#include "grsk/rng.hpp"

namespace grsk {

using cplx = std::complex<double>;

/// log Gamma on the slit plane (cut along the negative real axis), continuous
/// in z off the cut. Throws PoleError at 0, -1, -2, ...
cplx log_gamma(cplx z);
double log_gamma(double x);
/// 1/Gamma(z); entire, exact zero at the poles of Gamma.
cplx rgamma(cplx z);

double digamma(double x);
double trigamma(double x);

double sample_gamma(double shape, RngStream& rng);
/// log of a Gamma(shape,1) variate; stays finite for shapes where the variate
/// itself underflows.
double sample_log_gamma(double shape, RngStream& rng);
double sample_inverse_gamma(double theta, RngStream& rng);
double sample_exponential(double rate, RngStream& rng);

/// Density x^{-theta-1} e^{-1/x} / Gamma(theta), logged.
double inverse_gamma_logpdf(double x, double theta);
double inverse_gamma_cdf(double x, double theta);

/// Spectral density 1/((2 pi i)^N N!) prod_{j != k} 1/Gamma(l_j - l_k).
cplx sklyanin_density(std::span<const cplx> lambda);

}  // namespace grsk
