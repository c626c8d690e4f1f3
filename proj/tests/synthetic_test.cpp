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
#include <sstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "lcpi/dataset.hpp"
#include "lcpi/normal.hpp"
#include "lcpi/numeric.hpp"
#include "lcpi/rng.hpp"
#include "lcpi/synthetic.hpp"

using namespace lcpi;

TEST_CASE("paper model evaluates the stated regression and scale") {
  const GaussianModel m1 = paper_model(1);
  const double zero = 0.0;
  const std::span<const double> x0(&zero, 1);
  CHECK(m1.regression(x0) == doctest::Approx(1.0));
  CHECK(m1.noise_scale(x0) == doctest::Approx(0.5));

  const double one = 1.0;
  const std::span<const double> x1(&one, 1);
  CHECK(m1.regression(x1) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(m1.noise_scale(x1) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));

  const GaussianModel m5 = paper_model(5);
  const std::vector<double> origin(5, 0.0);
  CHECK(m5.regression(origin) == doctest::Approx(1.0));
  CHECK(m5.noise_scale(origin) == doctest::Approx(2.5));
}

TEST_CASE("sampling is deterministic under a fixed stream") {
  const GaussianModel model = paper_model(2);
  SeededRng r1(99, 4);
  SeededRng r2(99, 4);
  const LabeledDataset a = model.sample(3, r1);
  const LabeledDataset b = model.sample(3, r2);
  REQUIRE(a.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(a.y(i) == b.y(i));
    for (std::size_t j = 0; j < 2; ++j) CHECK(a.x(i)[j] == b.x(i)[j]);
  }
}

TEST_CASE("a non-positive noise scale is rejected on draws") {
  const GaussianModel bad(
      1, [](std::span<const double>) { return 0.0; },
      [](std::span<const double>) { return 0.0; },
      [](SeededRng& rng, std::span<double> out) {
        for (double& v : out) v = rng.uniform();
      });
  SeededRng rng(1, 0);
  CHECK_THROWS_AS(bad.sample(1, rng), std::invalid_argument);
}

TEST_CASE("noise has the right location: CLT bound on Y - f(X)") {
  const GaussianModel model = paper_model(1);
  SeededRng rng(31, 0);
  const std::size_t n = 100000;
  const LabeledDataset data = model.sample(n, rng);
  std::vector<double> residuals(n);
  for (std::size_t i = 0; i < n; ++i)
    residuals[i] = data.y(i) - model.regression(data.x(i));
  // sigma is at most 1/2 for d=1, so 3*sigma_max/sqrt(n) bounds the mean.
  CHECK(std::fabs(mean(residuals)) <= 3.0 * 0.5 / std::sqrt(double(n)));
}

TEST_CASE("oracle density closed form") {
  const GaussianModel model = paper_model(1);
  const double x0 = 0.0;
  const std::span<const double> x(&x0, 1);
  // mode value with sd 1/2 at x=0: pdf(f(x)) = 1/(sqrt(2 pi) * 0.5)
  CHECK(model.density(x, 1.0) == doctest::Approx(2.0 * kInvSqrt2Pi));
  // N(1, 0.25) at 0, written out independently
  const double want = 1.0 / (std::sqrt(2.0 * M_PI) * 0.5) *
                      std::exp(-(0.0 - 1.0) * (0.0 - 1.0) / (2.0 * 0.25));
  CHECK(model.density(x, 0.0) == doctest::Approx(want).epsilon(1e-14));

  const GaussianModel unit(
      1, [](std::span<const double>) { return 0.3; },
      [](std::span<const double>) { return 1.0; },
      [](SeededRng& rng, std::span<double> out) {
        for (double& v : out) v = rng.uniform();
      });
  CHECK(unit.density(x, 0.3) == doctest::Approx(kInvSqrt2Pi));
  CHECK(unit.density(x, 1.3) ==
        doctest::Approx(kInvSqrt2Pi * std::exp(-0.5)));
}

TEST_CASE("oracle density integrates to one and peaks at the mean") {
  const GaussianModel model = paper_model(1);
  SeededRng rng(17, 0);
  std::vector<double> x(1);
  for (int trial = 0; trial < 5; ++trial) {
    model.draw_features(rng, x);
    const double f = model.regression(x);
    const double s = model.noise_scale(x);
    auto pdf = [&](double y) { return model.density(x, y); };
    const double total = trapezoid(pdf, f - 10.0 * s, f + 10.0 * s, 20000);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-6));

    double best_y = f - 10.0 * s;
    double best = 0.0;
    for (int i = 0; i <= 2000; ++i) {
      const double y = f - 10.0 * s + i * (20.0 * s / 2000.0);
      if (pdf(y) > best) {
        best = pdf(y);
        best_y = y;
      }
    }
    CHECK(std::fabs(best_y - f) <= 10.0 * s / 1000.0 + 1e-12);
  }
}

TEST_CASE("outputs stay within [-5,5] apart from a sub-percent fraction") {
  for (std::size_t d : {std::size_t{1}, std::size_t{5}}) {
    const GaussianModel model = paper_model(d);
    SeededRng rng(101 + d, 0);
    const LabeledDataset data = model.sample(10000, rng);
    std::size_t outside = 0;
    for (double y : data.labels())
      if (std::fabs(y) > 5.0) ++outside;
    CHECK(static_cast<double>(outside) / 10000.0 < 0.01);
  }
}

TEST_CASE("dataset CSV round trip at full precision") {
  LabeledDataset data(2);
  data.add(std::vector<double>{0.1, 0.2}, 1.0 / 3.0);
  data.add(std::vector<double>{-1.5, 2.25}, -0.7071067811865476);
  std::ostringstream out;
  data.write_csv(out);
  CHECK(out.str().substr(0, 9) == "x1,x2,y\n0");

  std::istringstream in(out.str());
  const LabeledDataset back = LabeledDataset::read_csv(in);
  REQUIRE(back.size() == 2);
  CHECK(back.dim() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(back.y(i) == data.y(i));  // bit-exact through 17 digits
    CHECK(back.x(i)[0] == data.x(i)[0]);
    CHECK(back.x(i)[1] == data.x(i)[1]);
  }
}

TEST_CASE("datasets reject malformed input") {
  LabeledDataset data(2);
  CHECK_THROWS_AS(data.add(std::vector<double>{1.0}, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(data.add(std::vector<double>{1.0, NAN}, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(data.add(std::vector<double>{1.0, 2.0}, NAN),
                  std::invalid_argument);
  std::istringstream bad("x1,y\n1.0\n");
  CHECK_THROWS_AS(LabeledDataset::read_csv(bad), std::invalid_argument);
}
