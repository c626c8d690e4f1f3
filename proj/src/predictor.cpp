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

#include "lcpi/predictor.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "lcpi/csv.hpp"
#include "lcpi/normal.hpp"

namespace lcpi {

PredictionInterval superlevel_interval(double mean, double variance,
                                       double threshold, double support) {
  if (!(variance > 0.0))
    throw std::invalid_argument("superlevel_interval: variance must be > 0");
  if (!(support > 0.0))
    throw std::invalid_argument("superlevel_interval: support must be > 0");
  if (threshold <= 0.0) return PredictionInterval(-support, support);

  // q = threshold / max density; above 1 the level is never reached.
  const double q = kSqrt2Pi * threshold * std::sqrt(variance);
  if (q > 1.0) return PredictionInterval::empty();
  const double w = std::sqrt(-2.0 * variance * std::log(q));
  const double lo = std::max(mean - w, -support);
  const double hi = std::min(mean + w, support);
  if (lo > hi) return PredictionInterval::empty();
  return PredictionInterval(lo, hi);
}

namespace {

// {y in [-s,s] : density(y) + zeta >= threshold}; shared by both
// calibrated predictors.
PredictionInterval jittered_superlevel(const PluginDensity& density,
                                       std::span<const double> x,
                                       double threshold, double zeta) {
  const DensitySlice slice = density.at(x);
  return superlevel_interval(slice.mean, slice.sd * slice.sd,
                             threshold - zeta, density.support());
}

}  // namespace

LengthCalibratedPredictor::LengthCalibratedPredictor(PluginDensity density,
                                                     double threshold,
                                                     double requested_length)
    : density_(std::move(density)),
      threshold_(threshold),
      requested_length_(requested_length) {
  if (!(threshold >= 0.0))
    throw std::invalid_argument("LengthCalibratedPredictor: threshold < 0");
  if (!(requested_length > 0.0))
    throw std::invalid_argument("LengthCalibratedPredictor: length <= 0");
}

PredictionInterval LengthCalibratedPredictor::predict(
    std::span<const double> x, SeededRng& rng) const {
  return predict_with(x, rng.uniform(0.0, density_.perturbation_scale()));
}

PredictionInterval LengthCalibratedPredictor::predict_with(
    std::span<const double> x, double zeta) const {
  return jittered_superlevel(density_, x, threshold_, zeta);
}

CoverageCalibratedPredictor::CoverageCalibratedPredictor(PluginDensity density,
                                                         double threshold,
                                                         double beta)
    : density_(std::move(density)), threshold_(threshold), beta_(beta) {
  if (!(threshold >= 0.0))
    throw std::invalid_argument("CoverageCalibratedPredictor: threshold < 0");
  if (!(beta > 0.0 && beta < 1.0))
    throw std::invalid_argument("CoverageCalibratedPredictor: beta in (0,1)");
}

PredictionInterval CoverageCalibratedPredictor::predict(
    std::span<const double> x, SeededRng& rng) const {
  return predict_with(x, rng.uniform(0.0, density_.perturbation_scale()));
}

PredictionInterval CoverageCalibratedPredictor::predict_with(
    std::span<const double> x, double zeta) const {
  return jittered_superlevel(density_, x, threshold_, zeta);
}

OraclePredictor::OraclePredictor(const GaussianModel& model, double threshold,
                                 double support)
    : model_(&model), threshold_(threshold), support_(support) {
  if (!(threshold >= 0.0))
    throw std::invalid_argument("OraclePredictor: threshold < 0");
  if (!(support > 0.0))
    throw std::invalid_argument("OraclePredictor: support must be > 0");
}

PredictionInterval OraclePredictor::predict(std::span<const double> x) const {
  const double sd = model_->noise_scale(x);
  return superlevel_interval(model_->regression(x), sd * sd, threshold_,
                             support_);
}

double oracle_threshold(const GaussianModel& model, double target_length,
                        std::size_t n_draws, const Grid& grid,
                        SeededRng& rng) {
  if (!(target_length > 0.0))
    throw std::invalid_argument("oracle_threshold: length must be > 0");
  const LengthCurve curve = oracle_length_curve(model, grid, n_draws, rng);
  return curve.inverse(target_length);
}

void write_predictions_csv(std::ostream& os, const UnlabeledDataset& xs,
                           std::span<const PredictionInterval> intervals,
                           const std::vector<double>* labels) {
  if (intervals.size() != xs.size())
    throw std::invalid_argument("write_predictions_csv: size mismatch");
  if (labels && labels->size() != xs.size())
    throw std::invalid_argument("write_predictions_csv: label count mismatch");

  std::vector<std::string> cells;
  cells.reserve(xs.dim() + 4);
  for (std::size_t j = 1; j <= xs.dim(); ++j)
    cells.push_back("x" + std::to_string(j));
  cells.insert(cells.end(), {"lower", "upper", "length", "covered"});
  write_csv_row(os, cells);

  for (std::size_t i = 0; i < xs.size(); ++i) {
    cells.clear();
    const auto x = xs.x(i);
    for (double v : x) cells.push_back(format_double(v));
    const auto& iv = intervals[i];
    if (iv.is_empty()) {
      cells.emplace_back();
      cells.emplace_back();
    } else {
      cells.push_back(format_double(iv.lower()));
      cells.push_back(format_double(iv.upper()));
    }
    cells.push_back(format_double(iv.length()));
    if (labels)
      cells.push_back(iv.contains((*labels)[i]) ? "1" : "0");
    else
      cells.emplace_back();
    write_csv_row(os, cells);
  }
}

}  // namespace lcpi
