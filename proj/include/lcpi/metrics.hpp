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

#ifndef LCPI_METRICS_HPP_
#define LCPI_METRICS_HPP_

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "lcpi/interval.hpp"
#include "lcpi/predictor.hpp"
#include "lcpi/rng.hpp"
#include "lcpi/synthetic.hpp"

namespace lcpi {

using IntervalPredictor =
    std::function<PredictionInterval(std::span<const double>)>;

// Per-run evaluation summary. excess_risk and sym_diff need oracle access
// and stay unset on real data.
struct EvalResult {
  double mean_length = 0.0;
  double error_rate = 0.0;
  std::optional<double> excess_risk;
  std::optional<double> sym_diff;
  std::size_t n_test = 0;
  std::size_t n_empty = 0;

  // One CSV row: metrics, then a config echo string, then the seed. Unset
  // optional metrics become blank cells.
  void write_csv_row(std::ostream& os, const std::string& config_echo,
                     std::uint64_t seed) const;
};

// Mean interval length; empty input throws.
double empirical_length(std::span<const PredictionInterval> intervals);

// Fraction of labels outside their interval (empty intervals never
// cover). Sizes must match.
double empirical_error(std::span<const PredictionInterval> intervals,
                       std::span<const double> labels);

// Monte-Carlo estimate over feature draws of the excess risk integral
// int_{pred(x) sym-diff oracle(x)} |p(y|x) - lambda*| dy, each piece
// integrated by refining trapezoid quadrature to 1e-6 starting from
// quad_points panels. Draws exactly model.dim() uniforms per iteration,
// so equal-seeded calls to the three Monte-Carlo metrics see the same
// feature sequence.
double excess_risk(const IntervalPredictor& pred,
                   const OraclePredictor& oracle, const GaussianModel& model,
                   std::size_t n_mc, std::size_t quad_points, SeededRng& rng);

// Monte-Carlo mean of the Lebesgue measure of pred(x) sym-diff oracle(x).
double symmetric_difference_risk(const IntervalPredictor& pred,
                                 const OraclePredictor& oracle,
                                 const GaussianModel& model, std::size_t n_mc,
                                 SeededRng& rng);

// Monte-Carlo estimate of P(Y not in pred(X)) + lambda_star * E[length].
// The coverage term uses exact Gaussian interval mass at each x, so only
// features are sampled.
double interval_risk(const IntervalPredictor& pred, const GaussianModel& model,
                     double lambda_star, std::size_t n_mc, SeededRng& rng);

}  // namespace lcpi

#endif  // LCPI_METRICS_HPP_
