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

#include "lcpi/metrics.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "lcpi/csv.hpp"
#include "lcpi/normal.hpp"
#include "lcpi/numeric.hpp"

namespace lcpi {

void EvalResult::write_csv_row(std::ostream& os,
                               const std::string& config_echo,
                               std::uint64_t seed) const {
  std::vector<std::string> cells = {
      format_double(mean_length),
      format_double(error_rate),
      excess_risk ? format_double(*excess_risk) : std::string(),
      sym_diff ? format_double(*sym_diff) : std::string(),
      std::to_string(n_test),
      std::to_string(n_empty),
      config_echo,
      std::to_string(seed)};
  lcpi::write_csv_row(os, cells);
}

double empirical_length(std::span<const PredictionInterval> intervals) {
  if (intervals.empty())
    throw std::invalid_argument("empirical_length: empty input");
  std::vector<double> lengths(intervals.size());
  for (std::size_t i = 0; i < intervals.size(); ++i)
    lengths[i] = intervals[i].length();
  return mean(lengths);
}

double empirical_error(std::span<const PredictionInterval> intervals,
                       std::span<const double> labels) {
  if (intervals.size() != labels.size())
    throw std::invalid_argument("empirical_error: size mismatch");
  if (intervals.empty())
    throw std::invalid_argument("empirical_error: empty input");
  std::size_t misses = 0;
  for (std::size_t i = 0; i < intervals.size(); ++i)
    if (!intervals[i].contains(labels[i])) ++misses;
  return static_cast<double>(misses) / static_cast<double>(intervals.size());
}

namespace {

void require_mc(std::size_t n_mc) {
  if (n_mc < 100)
    throw std::invalid_argument("metrics: n_mc must be >= 100");
}

}  // namespace

double excess_risk(const IntervalPredictor& pred,
                   const OraclePredictor& oracle, const GaussianModel& model,
                   std::size_t n_mc, std::size_t quad_points, SeededRng& rng) {
  require_mc(n_mc);
  const double lambda = oracle.threshold();
  const std::size_t init_panels = std::max<std::size_t>(8, quad_points);
  std::vector<double> per_draw(n_mc);
  std::vector<double> x(model.dim());
  for (std::size_t i = 0; i < n_mc; ++i) {
    model.draw_features(rng, x);
    const double mean_x = model.regression(x);
    const double sd_x = model.noise_scale(x);
    double acc = 0.0;
    for (const auto& piece : symmetric_difference(pred(x), oracle.predict(x))) {
      auto gap = [&](double y) {
        return std::fabs(normal_pdf(y, mean_x, sd_x) - lambda);
      };
      acc += integrate_to_tol(gap, piece.lower(), piece.upper(), 1e-6,
                              init_panels);
    }
    per_draw[i] = acc;
  }
  return mean(per_draw);
}

double symmetric_difference_risk(const IntervalPredictor& pred,
                                 const OraclePredictor& oracle,
                                 const GaussianModel& model, std::size_t n_mc,
                                 SeededRng& rng) {
  require_mc(n_mc);
  std::vector<double> per_draw(n_mc);
  std::vector<double> x(model.dim());
  for (std::size_t i = 0; i < n_mc; ++i) {
    model.draw_features(rng, x);
    per_draw[i] = symmetric_difference_length(pred(x), oracle.predict(x));
  }
  return mean(per_draw);
}

double interval_risk(const IntervalPredictor& pred, const GaussianModel& model,
                     double lambda_star, std::size_t n_mc, SeededRng& rng) {
  require_mc(n_mc);
  std::vector<double> per_draw(n_mc);
  std::vector<double> x(model.dim());
  for (std::size_t i = 0; i < n_mc; ++i) {
    model.draw_features(rng, x);
    const PredictionInterval iv = pred(x);
    double covered = 0.0;
    if (!iv.is_empty())
      covered = normal_interval_mass(iv.lower(), iv.upper(),
                                     model.regression(x),
                                     model.noise_scale(x));
    per_draw[i] = (1.0 - covered) + lambda_star * iv.length();
  }
  return mean(per_draw);
}

}  // namespace lcpi
