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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "lcpi/grid.hpp"
#include "lcpi/interval.hpp"
#include "lcpi/normal.hpp"
#include "lcpi/numeric.hpp"
#include "lcpi/rng.hpp"

using namespace lcpi;

TEST_CASE("grid points follow the left-endpoint formula") {
  const Grid g(1.0, 4);
  REQUIRE(g.size() == 4);
  CHECK(g.point(0) == -1.0);
  CHECK(g.point(1) == -0.5);
  CHECK(g.point(2) == 0.0);
  CHECK(g.point(3) == 0.5);
  CHECK(g.cell_width() == 0.5);

  const Grid g2(2.0, 2);
  CHECK(g2.point(0) == -2.0);
  CHECK(g2.point(1) == 0.0);

  const Grid g3(5.0, 1000);
  REQUIRE(g3.size() == 1000);
  CHECK(g3.point(0) == -5.0);
  CHECK(g3.point(1) - g3.point(0) == doctest::Approx(0.01).epsilon(1e-14));
}

TEST_CASE("grid rejects bad arguments") {
  CHECK_THROWS_AS(Grid(0.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(Grid(-1.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(Grid(1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(Grid(1.0, 0), std::invalid_argument);
}

TEST_CASE("grid spacing is exact to one ulp for random shapes") {
  SeededRng rng(2024, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const double s = rng.uniform(0.1, 50.0);
    const std::size_t m = 2 + static_cast<std::size_t>(rng.uniform() * 3000);
    const Grid g(s, m);
    const double width = 2.0 * s / static_cast<double>(m);
    // index-formula construction: each step differs from 2s/m by rounding
    // at the scale of the endpoints, with no drift across the grid
    const double tol = 4.0 * std::numeric_limits<double>::epsilon() * s;
    for (std::size_t k = 0; k + 1 < g.size(); ++k) {
      const double step = g.point(k + 1) - g.point(k);
      CHECK(std::fabs(step - width) <= tol);
    }
    CHECK(g.point(g.size() - 1) < s);
  }
}

TEST_CASE("interval length and membership") {
  CHECK(interval_length(PredictionInterval::empty()) == 0.0);
  CHECK(interval_length(PredictionInterval(-1.0, 1.0)) == 2.0);
  CHECK(interval_length(PredictionInterval(0.25, 0.75)) == 0.5);
  CHECK_FALSE(PredictionInterval::empty().contains(0.0));
  CHECK(PredictionInterval(0.0, 1.0).contains(0.0));
  CHECK(PredictionInterval(0.0, 1.0).contains(1.0));
  CHECK_FALSE(PredictionInterval(0.0, 1.0).contains(1.0000001));
  CHECK_THROWS_AS(PredictionInterval(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(
      PredictionInterval(0.0, std::numeric_limits<double>::infinity()),
      std::invalid_argument);
}

TEST_CASE("interval length is additive under disjoint splits") {
  SeededRng rng(11, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const double a = rng.uniform(-10.0, 10.0);
    const double b = a + rng.uniform(0.0, 5.0);
    const double m = rng.uniform(a, b);
    const double whole = PredictionInterval(a, b).length();
    const double parts = PredictionInterval(a, m).length() +
                         PredictionInterval(m, b).length();
    CHECK(whole == doctest::Approx(parts).epsilon(1e-12));
  }
}

TEST_CASE("equal (seed, stream) reproduces a million draws") {
  SeededRng a(123456789, 7);
  SeededRng b(123456789, 7);
  SeededRng other(123456789, 8);
  bool identical = true;
  bool distinct = false;
  for (int i = 0; i < 1000000; ++i) {
    const double ua = a.uniform();
    identical = identical && ua == b.uniform();
    distinct = distinct || ua != other.uniform();
  }
  CHECK(identical);
  CHECK(distinct);
}

TEST_CASE("uniform(lo, hi) stays in range") {
  SeededRng rng(5, 0);
  for (int i = 0; i < 10000; ++i) {
    const double v = rng.uniform(-2.5, 3.5);
    CHECK(v >= -2.5);
    CHECK(v < 3.5);
  }
  CHECK(rng.uniform(1.0, 1.0) == 1.0);
  CHECK(rng.uniform(0.0, 0.0) == 0.0);
}

TEST_CASE("error function matches libm to high accuracy") {
  for (int i = -600; i <= 600; ++i) {
    const double x = i * 0.01;
    CHECK(erf_cody(x) == doctest::Approx(std::erf(x)).epsilon(1e-13));
    const double ec = erfc_cody(x);
    const double ref = std::erfc(x);
    CHECK(std::fabs(ec - ref) <= 1e-13 * std::max(1e-300, std::fabs(ref)));
  }
  CHECK(erf_cody(0.5) == doctest::Approx(0.5204998778130465).epsilon(1e-14));
  CHECK(erfc_cody(1.0) == doctest::Approx(0.15729920705028513).epsilon(1e-13));
}

TEST_CASE("normal cdf/quantile are mutual inverses") {
  CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(normal_quantile(0.975) ==
        doctest::Approx(1.959963984540054).epsilon(1e-13));
  CHECK(normal_quantile(0.9) ==
        doctest::Approx(1.2815515655446004).epsilon(1e-13));
  for (int i = 1; i < 2000; ++i) {
    const double p = i / 2000.0;
    CHECK(normal_cdf(normal_quantile(p)) == doctest::Approx(p).epsilon(1e-12));
  }
  CHECK_THROWS_AS(normal_quantile(-0.1), std::invalid_argument);
}

TEST_CASE("normal pdf basics") {
  CHECK(normal_pdf(0.0, 0.0, 1.0) == doctest::Approx(kInvSqrt2Pi));
  CHECK(normal_pdf(3.0, 1.0, 2.0) ==
        doctest::Approx(kInvSqrt2Pi / 2.0 * std::exp(-0.5)));
  CHECK_THROWS_AS(normal_pdf(0.0, 0.0, 0.0), std::invalid_argument);
  CHECK(normal_interval_mass(-1.96, 1.96, 0.0, 1.0) ==
        doctest::Approx(0.95).epsilon(1e-3));
  CHECK(normal_interval_mass(2.0, 1.0, 0.0, 1.0) == 0.0);
}

TEST_CASE("pairwise sum and moments") {
  std::vector<double> v(1000, 0.1);
  CHECK(pairwise_sum(v) == doctest::Approx(100.0).epsilon(1e-13));
  CHECK(mean(v) == doctest::Approx(0.1).epsilon(1e-13));
  CHECK(sample_sd(v) == doctest::Approx(0.0));
  std::vector<double> w = {1.0, 2.0, 3.0, 4.0};
  CHECK(mean(w) == 2.5);
  CHECK(sample_sd(w) == doctest::Approx(std::sqrt(5.0 / 3.0)));
  CHECK_THROWS_AS(mean(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("trapezoid integration and line fit") {
  auto square = [](double x) { return x * x; };
  CHECK(trapezoid(square, 0.0, 1.0, 2000) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-6));
  CHECK(integrate_to_tol(square, 0.0, 1.0, 1e-10, 8) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  std::vector<double> xs = {1.0, 2.0, 3.0, 4.0};
  std::vector<double> ys = {3.0, 5.0, 7.0, 9.0};
  const LinearFit fit = fit_line(xs, ys);
  CHECK(fit.slope == doctest::Approx(2.0));
  CHECK(fit.intercept == doctest::Approx(1.0));
}
