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

#include "lcpi/normal.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lcpi {

namespace {

// Rational coefficients from Cody, "Rational Chebyshev approximation
// for the error function", Math. Comp. 23 (1969); as in SPECFUN calerf.
constexpr double kErfA[5] = {
    3.16112374387056560e00, 1.13864154151050156e02, 3.77485237685302021e02,
    3.20937758913846947e03, 1.85777706184603153e-1};
constexpr double kErfB[4] = {
    2.36012909523441209e01, 2.44024637934444173e02, 1.28261652607737228e03,
    2.84423683343917062e03};
constexpr double kErfC[9] = {
    5.64188496988670089e-1, 8.88314979438837594e00, 6.61191906371416295e01,
    2.98635138197400131e02, 8.81952221241769090e02, 1.71204761263407058e03,
    2.05107837782607147e03, 1.23033935479799725e03, 2.15311535474403846e-8};
constexpr double kErfD[8] = {
    1.57449261107098347e01, 1.17693950891312499e02, 5.37181101862009858e02,
    1.62138957456669019e03, 3.29079923573345963e03, 4.36261909014324716e03,
    3.43936767414372164e03, 1.23033935480374942e03};
constexpr double kErfP[6] = {
    3.05326634961232344e-1, 3.60344899949804439e-1, 1.25781726111229246e-1,
    1.60837851487422766e-2, 6.58749161529837803e-4, 1.63153871373020978e-2};
constexpr double kErfQ[5] = {
    2.56852019228982242e00, 1.87295284992346047e00, 5.27905102951428412e-1,
    6.05183413124413191e-2, 2.33520497626869185e-3};

constexpr double kErfThresh = 0.46875;
constexpr double kInvSqrtPi = 5.6418958354775628695e-1;

// erfc on [kErfThresh, 4]: exp(-x^2) * rational(x).
double erfc_mid(double y) {
  double xnum = kErfC[8] * y;
  double xden = y;
  for (int i = 0; i < 7; ++i) {
    xnum = (xnum + kErfC[i]) * y;
    xden = (xden + kErfD[i]) * y;
  }
  const double ratio = (xnum + kErfC[7]) / (xden + kErfD[7]);
  // Split exp(-y^2) to preserve accuracy for moderately large y.
  const double ysq = std::trunc(y * 16.0) / 16.0;
  const double del = (y - ysq) * (y + ysq);
  return std::exp(-ysq * ysq) * std::exp(-del) * ratio;
}

// erfc on (4, inf): exp(-x^2)/x * (1/sqrt(pi) - R(1/x^2)).
double erfc_tail(double y) {
  if (y >= 26.6) return 0.0;  // underflows double
  const double ysq = 1.0 / (y * y);
  double xnum = kErfP[5] * ysq;
  double xden = ysq;
  for (int i = 0; i < 4; ++i) {
    xnum = (xnum + kErfP[i]) * ysq;
    xden = (xden + kErfQ[i]) * ysq;
  }
  double ratio = ysq * (xnum + kErfP[4]) / (xden + kErfQ[4]);
  ratio = (kInvSqrtPi - ratio) / y;
  const double yint = std::trunc(y * 16.0) / 16.0;
  const double del = (y - yint) * (y + yint);
  return std::exp(-yint * yint) * std::exp(-del) * ratio;
}

}  // namespace

double erf_cody(double x) {
  const double y = std::fabs(x);
  if (y <= kErfThresh) {
    const double ysq = y > 1.11e-16 ? y * y : 0.0;
    double xnum = kErfA[4] * ysq;
    double xden = ysq;
    for (int i = 0; i < 3; ++i) {
      xnum = (xnum + kErfA[i]) * ysq;
      xden = (xden + kErfB[i]) * ysq;
    }
    return x * (xnum + kErfA[3]) / (xden + kErfB[3]);
  }
  const double ec = y <= 4.0 ? erfc_mid(y) : erfc_tail(y);
  return x < 0.0 ? ec - 1.0 : 1.0 - ec;
}

double erfc_cody(double x) {
  const double y = std::fabs(x);
  if (y <= kErfThresh) return 1.0 - erf_cody(x);
  const double ec = y <= 4.0 ? erfc_mid(y) : erfc_tail(y);
  return x < 0.0 ? 2.0 - ec : ec;
}

double normal_pdf(double y, double mean, double sd) {
  if (!(sd > 0.0)) throw std::invalid_argument("normal_pdf: sd must be > 0");
  const double z = (y - mean) / sd;
  return kInvSqrt2Pi / sd * std::exp(-0.5 * z * z);
}

double normal_cdf(double z) {
  // 0.5 * erfc(-z / sqrt(2)); the erfc route keeps the tails accurate.
  return 0.5 * erfc_cody(-z * 0.70710678118654752440);
}

double normal_cdf(double y, double mean, double sd) {
  if (!(sd > 0.0)) throw std::invalid_argument("normal_cdf: sd must be > 0");
  return normal_cdf((y - mean) / sd);
}

double normal_interval_mass(double lo, double hi, double mean, double sd) {
  if (lo > hi) return 0.0;
  return normal_cdf(hi, mean, sd) - normal_cdf(lo, mean, sd);
}

double normal_quantile(double p) {
  // Wichura, "Algorithm AS 241: the percentage points of the normal
  // distribution", Appl. Statist. 37 (1988), double-precision branch.
  static constexpr double a[8] = {
      3.3871328727963666080e0,  1.3314166789178437745e2,
      1.9715909503065514427e3,  1.3731693765509461125e4,
      4.5921953931549871457e4,  6.7265770927008700853e4,
      3.3430575583588128105e4,  2.5090809287301226727e3};
  static constexpr double b[7] = {
      4.2313330701600911252e1,  6.8718700749205790830e2,
      5.3941960214247511077e3,  2.1213794301586595867e4,
      3.9307895800092710610e4,  2.8729085735721942674e4,
      5.2264952788528545610e3};
  static constexpr double c[8] = {
      1.42343711074968357734e0, 4.63033784615654529590e0,
      5.76949722146069140550e0, 3.64784832476320460504e0,
      1.27045825245236838258e0, 2.41780725177450611770e-1,
      2.27238449892691845833e-2, 7.74545014278341407640e-4};
  static constexpr double d[7] = {
      2.05319162663775882187e0, 1.67638483018380384940e0,
      6.89767334985100004550e-1, 1.48103976427480074590e-1,
      1.51986665636164571966e-2, 5.47593808499534494600e-4,
      1.05075007164441684324e-9};
  static constexpr double e[8] = {
      6.65790464350110377720e0, 5.46378491116411436990e0,
      1.78482653991729133580e0, 2.96560571828504891230e-1,
      2.65321895265761230930e-2, 1.24266094738807843860e-3,
      2.71155556874348757815e-5, 2.01033439929228813265e-7};
  static constexpr double f[7] = {
      5.99832206555887937690e-1, 1.36929880922735805310e-1,
      1.48753612908506148525e-2, 7.86869131145613259100e-4,
      1.84631831751005468180e-5, 1.42151175831644588870e-7,
      2.04426310338993978564e-15};

  if (!(p > 0.0 && p < 1.0)) {
    if (p == 0.0) return -std::numeric_limits<double>::infinity();
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    throw std::invalid_argument("normal_quantile: p must be in (0,1)");
  }

  const double q = p - 0.5;
  if (std::fabs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    double num = a[7];
    double den = b[6];
    for (int i = 6; i >= 0; --i) num = num * r + a[i];
    for (int i = 5; i >= 0; --i) den = den * r + b[i];
    return q * num / (den * r + 1.0);
  }

  double r = q < 0.0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double val;
  if (r <= 5.0) {
    r -= 1.6;
    double num = c[7];
    double den = d[6];
    for (int i = 6; i >= 0; --i) num = num * r + c[i];
    for (int i = 5; i >= 0; --i) den = den * r + d[i];
    val = num / (den * r + 1.0);
  } else {
    r -= 5.0;
    double num = e[7];
    double den = f[6];
    for (int i = 6; i >= 0; --i) num = num * r + e[i];
    for (int i = 5; i >= 0; --i) den = den * r + f[i];
    val = num / (den * r + 1.0);
  }
  return q < 0.0 ? -val : val;
}

}  // namespace lcpi
