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

#ifndef LCPI_CALIBRATION_HPP_
#define LCPI_CALIBRATION_HPP_

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "lcpi/dataset.hpp"
#include "lcpi/density.hpp"
#include "lcpi/grid.hpp"
#include "lcpi/rng.hpp"
#include "lcpi/synthetic.hpp"

namespace lcpi {

// Empirical curve relating a density threshold to the expected measure of
// the superlevel set, built from grid_size x sample_size density scores.
// eval(t) counts scores strictly above t and weighs each by
// cell_mass = 2*support / (grid_size * sample_size), so it is a
// non-increasing step function from eval(0) = 2*support (when all scores
// are positive) down to 0. inverse(length) is the generalized inverse
// inf{t >= 0 : eval(t) <= length}, computed directly from order
// statistics: with r = floor(length / cell_mass), the answer is the
// (r+1)-th largest score, or 0 once r reaches the score count (a demand
// of the whole support maps to threshold 0).
class LengthCurve {
 public:
  // Scores need not be sorted; they must be finite and >= 0.
  LengthCurve(std::vector<double> scores, double support,
              std::size_t grid_size, std::size_t sample_size);

  double eval(double threshold) const;
  double inverse(double target_length) const;

  double cell_mass() const { return cell_mass_; }
  double support() const { return support_; }
  std::size_t grid_size() const { return grid_size_; }
  std::size_t sample_size() const { return sample_size_; }
  const std::vector<double>& scores() const { return scores_; }

  // Single "score" column, sorted descending.
  void write_csv(std::ostream& os) const;

 private:
  std::vector<double> scores_;  // sorted descending
  double support_;
  double cell_mass_;
  std::size_t grid_size_;
  std::size_t sample_size_;
};

// Builds the length-calibration curve from the plug-in density: one
// Uniform[0, u] jitter per calibration point, shared across that point's
// whole grid row. Requires grid.support() == density.support() (exactly)
// and a non-empty calibration set.
LengthCurve calibrate_length(const PluginDensity& density,
                             const UnlabeledDataset& calibration,
                             const Grid& grid, SeededRng& rng);

// Same construction from the exact conditional density of a generator,
// without jitter (true Gaussian scores are already atomless). Draws
// n_draws feature vectors internally.
LengthCurve oracle_length_curve(const GaussianModel& model, const Grid& grid,
                                std::size_t n_draws, SeededRng& rng);

// Empirical coverage curve: scores are jittered density values of the
// calibration labels at their own features. eval(t) is the fraction of
// scores >= t. threshold(beta) picks the (floor((1-beta)K)+1)-th largest
// score (0 when that index passes K), the generalized inverse at level
// 1 - beta.
class CoverageCurve {
 public:
  explicit CoverageCurve(std::vector<double> scores);

  double eval(double t) const;
  // Fraction of scores strictly above t; eval and eval_strict bracket the
  // step at each atom.
  double eval_strict(double t) const;
  double threshold(double beta) const;

  std::size_t size() const { return scores_.size(); }
  const std::vector<double>& scores() const { return scores_; }
  void write_csv(std::ostream& os) const;

 private:
  std::vector<double> scores_;  // sorted descending
};

CoverageCurve calibrate_coverage(const PluginDensity& density,
                                 const LabeledDataset& calibration,
                                 SeededRng& rng);

// Default grid resolution for a calibration set of size n:
// max(1000, ceil(4*sqrt(n)) + 1).
std::size_t default_grid_size(std::size_t n_calibration);

}  // namespace lcpi

#endif  // LCPI_CALIBRATION_HPP_
