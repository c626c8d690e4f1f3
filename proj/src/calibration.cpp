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

#include "lcpi/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "lcpi/csv.hpp"
#include "lcpi/normal.hpp"

namespace lcpi {

namespace {

void sort_descending(std::vector<double>& scores) {
  for (double v : scores)
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument("calibration: scores must be finite, >= 0");
  std::sort(scores.begin(), scores.end(), std::greater<double>());
}

// scores sorted descending: # of entries strictly greater than t.
std::size_t count_greater(const std::vector<double>& scores, double t) {
  auto it = std::lower_bound(scores.begin(), scores.end(), t,
                             [](double a, double b) { return a > b; });
  return static_cast<std::size_t>(it - scores.begin());
}

// scores sorted descending: # of entries >= t.
std::size_t count_geq(const std::vector<double>& scores, double t) {
  auto it = std::upper_bound(scores.begin(), scores.end(), t,
                             [](double a, double b) { return a > b; });
  return static_cast<std::size_t>(it - scores.begin());
}

void write_score_csv(std::ostream& os, const std::vector<double>& scores) {
  write_csv_row(os, {"score"});
  for (double s : scores) write_csv_row(os, {format_double(s)});
}

}  // namespace

LengthCurve::LengthCurve(std::vector<double> scores, double support,
                         std::size_t grid_size, std::size_t sample_size)
    : scores_(std::move(scores)),
      support_(support),
      grid_size_(grid_size),
      sample_size_(sample_size) {
  if (!(support > 0.0))
    throw std::invalid_argument("LengthCurve: support must be > 0");
  if (grid_size == 0 || sample_size == 0 ||
      scores_.size() != grid_size * sample_size)
    throw std::invalid_argument("LengthCurve: score count != M * N");
  cell_mass_ = 2.0 * support /
               static_cast<double>(grid_size) /
               static_cast<double>(sample_size);
  sort_descending(scores_);
}

double LengthCurve::eval(double threshold) const {
  if (!(threshold >= 0.0))
    throw std::invalid_argument("LengthCurve::eval: threshold must be >= 0");
  return cell_mass_ * static_cast<double>(count_greater(scores_, threshold));
}

double LengthCurve::inverse(double target_length) const {
  if (!(target_length > 0.0))
    throw std::invalid_argument("LengthCurve::inverse: length must be > 0");
  const std::size_t total = scores_.size();
  if (target_length >= 2.0 * support_) return 0.0;

  auto rank = static_cast<std::size_t>(
      std::floor(target_length / cell_mass_));
  // Floating division can land one step off an exact multiple; restore
  // rank * cell_mass <= target < (rank + 1) * cell_mass.
  while (rank > 0 && static_cast<double>(rank) * cell_mass_ > target_length)
    --rank;
  while (static_cast<double>(rank + 1) * cell_mass_ <= target_length) ++rank;

  if (rank >= total) return 0.0;
  return scores_[rank];  // the (rank+1)-th largest score
}

void LengthCurve::write_csv(std::ostream& os) const {
  write_score_csv(os, scores_);
}

LengthCurve calibrate_length(const PluginDensity& density,
                             const UnlabeledDataset& calibration,
                             const Grid& grid, SeededRng& rng) {
  if (calibration.size() == 0)
    throw std::invalid_argument("calibrate_length: empty calibration set");
  if (grid.support() != density.support())
    throw std::invalid_argument(
        "calibrate_length: grid and density support differ");

  const std::size_t n = calibration.size();
  const std::size_t m = grid.size();
  std::vector<double> scores;
  scores.reserve(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    const double zeta = rng.uniform(0.0, density.perturbation_scale());
    const DensitySlice slice = density.at(calibration.x(i));
    for (std::size_t k = 0; k < m; ++k)
      scores.push_back(density.randomized_density(slice, grid.point(k), zeta));
  }
  return LengthCurve(std::move(scores), grid.support(), m, n);
}

LengthCurve oracle_length_curve(const GaussianModel& model, const Grid& grid,
                                std::size_t n_draws, SeededRng& rng) {
  if (n_draws == 0)
    throw std::invalid_argument("oracle_length_curve: n_draws must be >= 1");
  const std::size_t m = grid.size();
  std::vector<double> scores;
  scores.reserve(n_draws * m);
  std::vector<double> x(model.dim());
  for (std::size_t i = 0; i < n_draws; ++i) {
    model.draw_features(rng, x);
    const double mean = model.regression(x);
    const double sd = model.noise_scale(x);
    for (std::size_t k = 0; k < m; ++k)
      scores.push_back(normal_pdf(grid.point(k), mean, sd));
  }
  return LengthCurve(std::move(scores), grid.support(), m, n_draws);
}

CoverageCurve::CoverageCurve(std::vector<double> scores)
    : scores_(std::move(scores)) {
  if (scores_.empty())
    throw std::invalid_argument("CoverageCurve: need at least one score");
  sort_descending(scores_);
}

double CoverageCurve::eval(double t) const {
  return static_cast<double>(count_geq(scores_, t)) /
         static_cast<double>(scores_.size());
}

double CoverageCurve::eval_strict(double t) const {
  return static_cast<double>(count_greater(scores_, t)) /
         static_cast<double>(scores_.size());
}

double CoverageCurve::threshold(double beta) const {
  if (!(beta > 0.0 && beta < 1.0))
    throw std::invalid_argument("CoverageCurve::threshold: beta in (0,1)");
  const auto k = static_cast<double>(scores_.size());
  const auto rank = static_cast<std::size_t>(std::floor((1.0 - beta) * k));
  if (rank >= scores_.size()) return 0.0;
  return scores_[rank];
}

void CoverageCurve::write_csv(std::ostream& os) const {
  write_score_csv(os, scores_);
}

CoverageCurve calibrate_coverage(const PluginDensity& density,
                                 const LabeledDataset& calibration,
                                 SeededRng& rng) {
  if (calibration.size() == 0)
    throw std::invalid_argument("calibrate_coverage: empty calibration set");
  std::vector<double> scores;
  scores.reserve(calibration.size());
  for (std::size_t i = 0; i < calibration.size(); ++i) {
    const double zeta = rng.uniform(0.0, density.perturbation_scale());
    scores.push_back(
        density.randomized_density(calibration.x(i), calibration.y(i), zeta));
  }
  return CoverageCurve(std::move(scores));
}

std::size_t default_grid_size(std::size_t n_calibration) {
  const double root = std::sqrt(static_cast<double>(n_calibration));
  const auto lower = static_cast<std::size_t>(std::ceil(4.0 * root)) + 1;
  return std::max<std::size_t>(1000, lower);
}

}  // namespace lcpi
