/*
 * Copyright 2026 the lcpi authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LCPI_NORMAL_HPP_
#define LCPI_NORMAL_HPP_

// Gaussian special functions with pinned, platform-independent
// implementations. The error function follows W. J. Cody's rational
// Chebyshev approximation (SPECFUN "calerf", relative error < 1e-15);
// the quantile follows M. J. Wichura's algorithm AS 241 (PPND16).
// Using named algorithms instead of libm keeps golden test values
// byte-stable across toolchains.

namespace lcpi {

inline constexpr double kInvSqrt2Pi = 0.39894228040143267794;
inline constexpr double kSqrt2Pi = 2.5066282746310005024;

// Error function / complementary error function (Cody).
double erf_cody(double x);
double erfc_cody(double x);

// Density of N(mean, sd^2) at y. sd must be positive.
double normal_pdf(double y, double mean, double sd);

// Standard normal distribution function Phi(z).
double normal_cdf(double z);

// Phi((y - mean)/sd).
double normal_cdf(double y, double mean, double sd);

// P(lo <= Y <= hi) for Y ~ N(mean, sd^2); 0 when lo > hi.
double normal_interval_mass(double lo, double hi, double mean, double sd);

// Inverse of normal_cdf on (0, 1) (AS 241, ~1e-16 accuracy).
double normal_quantile(double p);

}  // namespace lcpi

#endif  // LCPI_NORMAL_HPP_
