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

#ifndef LCPI_PREDICTOR_HPP_
#define LCPI_PREDICTOR_HPP_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "lcpi/calibration.hpp"
#include "lcpi/density.hpp"
#include "lcpi/grid.hpp"
#include "lcpi/interval.hpp"
#include "lcpi/rng.hpp"
#include "lcpi/synthetic.hpp"

namespace lcpi {

// Superlevel set {y : N(mean, variance) density >= threshold} intersected
// with [-support, support]. threshold <= 0 yields the whole support; a
// threshold above the density maximum yields the empty interval. The
// half-width solves pdf(mean +/- w) = threshold in closed form:
// w = sqrt(2 * variance * log(1 / (sqrt(2*pi) * threshold * sd))).
PredictionInterval superlevel_interval(double mean, double variance,
                                       double threshold, double support);

// Length-calibrated predictor: at a query, draws a fresh Uniform[0, u]
// jitter zeta and returns the superlevel set of the jittered density at
// the calibrated threshold; on the support that set is the plain Gaussian
// superlevel set at threshold - zeta. Empty outputs are legal (the local
// density can sit entirely below the threshold).
class LengthCalibratedPredictor {
 public:
  LengthCalibratedPredictor(PluginDensity density, double threshold,
                            double requested_length);

  PredictionInterval predict(std::span<const double> x, SeededRng& rng) const;
  // Deterministic core with an explicit jitter value (tests, debugging).
  PredictionInterval predict_with(std::span<const double> x,
                                  double zeta) const;

  double threshold() const { return threshold_; }
  double requested_length() const { return requested_length_; }
  const PluginDensity& density() const { return density_; }

 private:
  PluginDensity density_;
  double threshold_;
  double requested_length_;
};

// Coverage-calibrated predictor: same interval extraction, with the
// threshold chosen to hit a target error rate beta.
class CoverageCalibratedPredictor {
 public:
  CoverageCalibratedPredictor(PluginDensity density, double threshold,
                              double beta);

  PredictionInterval predict(std::span<const double> x, SeededRng& rng) const;
  PredictionInterval predict_with(std::span<const double> x,
                                  double zeta) const;

  double threshold() const { return threshold_; }
  double beta() const { return beta_; }
  const PluginDensity& density() const { return density_; }

 private:
  PluginDensity density_;
  double threshold_;
  double beta_;
};

// Superlevel sets of the exact conditional density at a fixed threshold.
// Deterministic (no jitter). Holds a reference to the model; the model
// must outlive the predictor.
class OraclePredictor {
 public:
  OraclePredictor(const GaussianModel& model, double threshold,
                  double support);

  PredictionInterval predict(std::span<const double> x) const;

  double threshold() const { return threshold_; }
  double support() const { return support_; }
  const GaussianModel& model() const { return *model_; }

 private:
  const GaussianModel* model_;
  double threshold_;
  double support_;
};

// Threshold for a target expected length, from the exact density: builds
// the oracle calibration curve over n_draws feature draws on the grid and
// takes its generalized inverse.
double oracle_threshold(const GaussianModel& model, double target_length,
                        std::size_t n_draws, const Grid& grid,
                        SeededRng& rng);

// Batch output: "x1..xd,lower,upper,length,covered". Empty intervals get
// blank endpoint cells, length 0 and covered 0. Pass labels to fill the
// covered column, nullptr to leave it blank.
void write_predictions_csv(std::ostream& os, const UnlabeledDataset& xs,
                           std::span<const PredictionInterval> intervals,
                           const std::vector<double>* labels);

}  // namespace lcpi

#endif  // LCPI_PREDICTOR_HPP_
