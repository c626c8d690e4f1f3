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
#include "lcpi/calibration.hpp"
#include "lcpi/density.hpp"
#include "lcpi/grid.hpp"
#include "lcpi/normal.hpp"
#include "lcpi/rng.hpp"
#include "lcpi/synthetic.hpp"

using namespace lcpi;

namespace {

// cell_mass = 2s/(M N) = 0.5 with these shapes
LengthCurve four_scores() {
  return LengthCurve({0.1, 0.4, 0.2, 0.3}, 1.0, 2, 2);
}

PluginDensity flat_density(double mean, double var, double support,
                           double u) {
  return PluginDensity([mean](std::span<const double>) { return mean; },
                       [var](std::span<const double>) { return var; },
                       support, u);
}

}  // namespace

TEST_CASE("curve evaluation counts strict exceedances") {
  const LengthCurve g = four_scores();
  CHECK(g.cell_mass() == doctest::Approx(0.5));
  CHECK(g.eval(0.0) == doctest::Approx(2.0));    // all four fire: 2s
  CHECK(g.eval(0.25) == doctest::Approx(1.0));   // two scores above
  CHECK(g.eval(0.35) == doctest::Approx(0.5));   // one score above
  CHECK(g.eval(0.4) == doctest::Approx(0.0));    // strict: the max excluded
  CHECK(g.eval(9.0) == 0.0);
  CHECK_THROWS_AS(g.eval(-0.1), std::invalid_argument);
}

TEST_CASE("generalized inverse by order statistics, hand-enumerated") {
  const LengthCurve g = four_scores();
  // demand 1.0: rank floor(1.0/0.5) = 2 -> third largest score
  CHECK(g.inverse(1.0) == doctest::Approx(0.2));
  CHECK(g.eval(0.2) <= 1.0);
  // demand 0.9: rank 1 -> second largest
  CHECK(g.inverse(0.9) == doctest::Approx(0.3));
  CHECK(g.eval(0.3) <= 0.9);
  CHECK(g.eval(0.29) > 0.9);
  // a demand at or past the whole support maps to threshold zero
  CHECK(g.inverse(2.0) == 0.0);
  CHECK(g.inverse(57.0) == 0.0);
  CHECK_THROWS_AS(g.inverse(0.0), std::invalid_argument);
  CHECK_THROWS_AS(g.inverse(-1.0), std::invalid_argument);
}

TEST_CASE("single-point curve is one step") {
  const double c = 0.37;
  const double z = 1e-4;
  const LengthCurve g({c + z, c + z, c + z, c + z}, 1.0, 4, 1);
  CHECK(g.eval(0.0) == doctest::Approx(2.0));
  CHECK(g.eval(c) == doctest::Approx(2.0));
  CHECK(g.eval(c + z) == 0.0);
  CHECK(g.inverse(1.3) == doctest::Approx(c + z));
}

TEST_CASE("generalized-inverse contract on random score multisets") {
  SeededRng rng(31337, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 1 + static_cast<std::size_t>(rng.uniform() * 20);
    const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform() * 20);
    const double s = rng.uniform(0.5, 4.0);
    std::vector<double> scores(m * n);
    for (double& v : scores) {
      v = rng.uniform(0.0, 1.5);
      if (rng.uniform() < 0.2 && &v != scores.data()) v = scores[0];  // ties
    }
    const LengthCurve g(std::move(scores), s, m, n);
    for (int j = 0; j < 40; ++j) {
      const double ell = rng.uniform(1e-9, 2.0 * s);
      const double t = g.inverse(ell);
      CHECK(g.eval(t) <= ell);
      if (t > 0.0) CHECK(g.eval(t * (1.0 - 1e-9)) > ell);
    }
  }
}

TEST_CASE("generalized inverse is non-increasing in the demand") {
  SeededRng rng(99, 0);
  std::vector<double> scores(200);
  for (double& v : scores) v = rng.uniform(0.0, 1.0);
  const LengthCurve g(std::move(scores), 2.0, 20, 10);
  double prev = g.inverse(1e-6);
  for (double ell = 0.05; ell <= 4.0; ell += 0.05) {
    const double cur = g.inverse(ell);
    CHECK(cur <= prev + 1e-15);
    prev = cur;
  }
}

TEST_CASE("curve construction from the plug-in density") {
  // u = 0: scores must equal the raw density values on the grid
  const PluginDensity d = flat_density(0.0, 1.0, 1.0, 0.0);
  UnlabeledDataset xs(1);
  xs.add(std::vector<double>{0.25});
  xs.add(std::vector<double>{0.75});
  const Grid grid(1.0, 2);
  SeededRng rng(1, 0);
  const LengthCurve g = calibrate_length(d, xs, grid, rng);
  REQUIRE(g.scores().size() == 4);
  // direct enumeration: both rows evaluate the same flat density
  std::vector<double> expected;
  for (int i = 0; i < 2; ++i)
    for (double y : grid.points()) expected.push_back(normal_pdf(y, 0.0, 1.0));
  std::sort(expected.begin(), expected.end(), std::greater<double>());
  for (std::size_t i = 0; i < 4; ++i) CHECK(g.scores()[i] == expected[i]);
}

TEST_CASE("jittered construction is reproducible and bounded by u") {
  const PluginDensity d = flat_density(0.0, 1.0, 1.0, 1e-3);
  const GaussianModel model = paper_model(1);
  SeededRng r1(5, 1);
  SeededRng r2(5, 1);
  const UnlabeledDataset xs = model.sample_features(6, r1);
  const UnlabeledDataset xs2 = model.sample_features(6, r2);
  const Grid grid(1.0, 8);
  const LengthCurve a = calibrate_length(d, xs, grid, r1);
  const LengthCurve b = calibrate_length(d, xs2, grid, r2);
  for (std::size_t i = 0; i < a.scores().size(); ++i)
    CHECK(a.scores()[i] == b.scores()[i]);

  SeededRng r3(6, 1);
  const LengthCurve c = calibrate_length(d, xs, grid, r3);
  // every jittered score sits within u of an unjittered density value
  SeededRng r4(7, 1);
  const PluginDensity d0 = flat_density(0.0, 1.0, 1.0, 0.0);
  const LengthCurve base = calibrate_length(d0, xs, grid, r4);
  for (std::size_t i = 0; i < c.scores().size(); ++i) {
    CHECK(c.scores()[i] >= base.scores()[i] - 1e-15);
    CHECK(c.scores()[i] <= base.scores()[i] + 1e-3 + 1e-15);
  }
}

TEST_CASE("support mismatch between grid and density is rejected") {
  const PluginDensity d = flat_density(0.0, 1.0, 1.0, 0.0);
  UnlabeledDataset xs(1);
  xs.add(std::vector<double>{0.5});
  SeededRng rng(1, 0);
  const Grid wrong(2.0, 4);
  CHECK_THROWS_AS(calibrate_length(d, xs, wrong, rng), std::invalid_argument);
  UnlabeledDataset none(1);
  const Grid ok(1.0, 4);
  CHECK_THROWS_AS(calibrate_length(d, none, ok, rng), std::invalid_argument);
}

TEST_CASE("markov-style bound on the exact-density curve") {
  const GaussianModel model = paper_model(1);
  const Grid grid(5.0, 2000);
  SeededRng rng(2718, 0);
  const LengthCurve g = oracle_length_curve(model, grid, 2000, rng);
  for (double t : {0.1, 0.2, 0.5})
    CHECK(g.eval(t) <= 1.05 / t);
}

TEST_CASE("coverage curve: evaluation and hand-built threshold") {
  const CoverageCurve h({0.1, 0.2, 0.3, 0.4});
  CHECK(h.eval(0.25) == doctest::Approx(0.5));
  CHECK(h.eval(0.2) == doctest::Approx(0.75));         // >= convention
  CHECK(h.eval_strict(0.2) == doctest::Approx(0.5));
  CHECK(h.eval(0.0) == 1.0);
  CHECK(h.eval(1.0) == 0.0);

  // beta = 0.25: rank floor(0.75 * 4) = 3 -> fourth largest
  CHECK(h.threshold(0.25) == doctest::Approx(0.1));
  CHECK(h.eval_strict(h.threshold(0.25)) <= 0.75);
  // beta near 1 keeps only the top score; tiny beta opens the support
  CHECK(h.threshold(1.0 - 1e-12) == doctest::Approx(0.4));
  CHECK(h.threshold(1e-300) == 0.0);
  CHECK_THROWS_AS(h.threshold(0.0), std::invalid_argument);
  CHECK_THROWS_AS(h.threshold(1.0), std::invalid_argument);
}

TEST_CASE("coverage threshold is a generalized inverse") {
  SeededRng rng(404, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + static_cast<std::size_t>(rng.uniform() * 50);
    std::vector<double> scores(k);
    for (double& v : scores) v = rng.uniform(0.0, 1.0);
    const CoverageCurve h(std::move(scores));
    for (int j = 0; j < 20; ++j) {
      const double beta = rng.uniform(1e-6, 1.0 - 1e-6);
      const double t = h.threshold(beta);
      CHECK(h.eval_strict(t) <= 1.0 - beta + 1e-15);
      if (t > 0.0) CHECK(h.eval(t * (1.0 - 1e-12)) > 1.0 - beta);
    }
    // monotone: larger beta (smaller 1-beta) never lowers the threshold
    double prev = h.threshold(1e-6);
    for (double beta = 0.05; beta < 1.0; beta += 0.05) {
      const double cur = h.threshold(beta);
      CHECK(cur >= prev - 1e-15);
      prev = cur;
    }
  }
}

TEST_CASE("coverage calibration scores labels at their own features") {
  const PluginDensity d = flat_density(0.0, 1.0, 1.0, 0.0);
  LabeledDataset cal(1);
  cal.add(std::vector<double>{0.1}, 0.0);    // inside support
  cal.add(std::vector<double>{0.2}, 3.0);    // outside -> score 0
  cal.add(std::vector<double>{0.3}, -2.0);   // outside -> score 0
  SeededRng rng(1, 0);
  const CoverageCurve h = calibrate_coverage(d, cal, rng);
  REQUIRE(h.size() == 3);
  CHECK(h.scores()[0] == doctest::Approx(kInvSqrt2Pi));
  CHECK(h.scores()[1] == 0.0);
  CHECK(h.scores()[2] == 0.0);

  LabeledDataset single(1);
  single.add(std::vector<double>{0.5}, 0.25);
  const CoverageCurve h1 = calibrate_coverage(d, single, rng);
  CHECK(h1.eval(0.0) == 1.0);
  CHECK((h1.eval(0.2) == 0.0 || h1.eval(0.2) == 1.0));
}

TEST_CASE("curves serialize to a sorted score column") {
  const LengthCurve g = four_scores();
  std::ostringstream out;
  g.write_csv(out);
  CHECK(out.str() ==
        "score\n0.40000000000000002\n0.29999999999999999\n"
        "0.20000000000000001\n0.10000000000000001\n");
}

TEST_CASE("default grid size honors the lower bound") {
  CHECK(default_grid_size(100) == 1000);
  CHECK(default_grid_size(1000000) == 4001);
  CHECK(default_grid_size(62001) == 1000);  // 4*sqrt(N)+1 = 998 < 1000
  CHECK(default_grid_size(70000) == 1060);  // ceil(4*264.575) + 1
}
