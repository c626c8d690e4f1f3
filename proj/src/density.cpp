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

#include "lcpi/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "lcpi/normal.hpp"
#include "lcpi/numeric.hpp"

namespace lcpi {

PluginDensity::PluginDensity(ScalarFn mean_fn, ScalarFn raw_variance_fn,
                             double support, double perturbation_scale)
    : mean_fn_(std::move(mean_fn)),
      raw_variance_fn_(std::move(raw_variance_fn)),
      support_(support),
      perturbation_scale_(perturbation_scale) {
  if (!mean_fn_ || !raw_variance_fn_)
    throw std::invalid_argument("PluginDensity: missing estimator function");
  if (!(support > 0.0) || !std::isfinite(support))
    throw std::invalid_argument("PluginDensity: support must be positive");
  if (!(perturbation_scale >= 0.0))
    throw std::invalid_argument("PluginDensity: perturbation scale < 0");
}

DensitySlice PluginDensity::at(std::span<const double> x) const {
  const double mean = mean_fn_(x);
  const double var = clamp_variance(raw_variance_fn_(x), support_);
  return {mean, std::sqrt(var)};
}

double PluginDensity::density(const DensitySlice& slice, double y) const {
  if (std::fabs(y) > support_) return 0.0;
  return normal_pdf(y, slice.mean, slice.sd);
}

double PluginDensity::density(std::span<const double> x, double y) const {
  if (std::fabs(y) > support_) return 0.0;  // skip the estimator query
  return density(at(x), y);
}

double PluginDensity::randomized_density(const DensitySlice& slice, double y,
                                         double zeta) const {
  if (std::fabs(y) > support_) return 0.0;
  return density(slice, y) + zeta;
}

double PluginDensity::randomized_density(std::span<const double> x, double y,
                                         double zeta) const {
  if (std::fabs(y) > support_) return 0.0;
  return randomized_density(at(x), y, zeta);
}

PluginDensity knn_density(std::shared_ptr<const KnnEstimator> estimator,
                          double support, double perturbation_scale) {
  if (!estimator) throw std::invalid_argument("knn_density: null estimator");
  return PluginDensity(
      [estimator](std::span<const double> x) { return estimator->regress(x); },
      [estimator](std::span<const double> x) { return estimator->variance(x); },
      support, perturbation_scale);
}

double practice_support(std::span<const double> labels) {
  if (labels.empty())
    throw std::invalid_argument("practice_support: empty labels");
  const auto [mn, mx] = std::minmax_element(labels.begin(), labels.end());
  const double s = std::max(-*mn, *mx);
  if (!(s > 0.0))
    throw std::invalid_argument("practice_support: degenerate labels");
  return s;
}

double theory_support(std::size_t n_train, std::size_t n_calibration) {
  const std::size_t m = std::min(n_train, n_calibration);
  if (m < 2) throw std::invalid_argument("theory_support: min(n, N) < 2");
  return std::log(static_cast<double>(m));
}

double l1_distance(const PluginDensity& estimate, const GaussianModel& truth,
                   const UnlabeledDataset& xs, std::size_t quad_points) {
  if (xs.size() == 0) throw std::invalid_argument("l1_distance: no points");
  if (quad_points < 100)
    throw std::invalid_argument("l1_distance: quad_points must be >= 100");
  const double s = estimate.support();
  std::vector<double> per_x(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto x = xs.x(i);
    const DensitySlice slice = estimate.at(x);
    const double true_mean = truth.regression(x);
    const double true_sd = truth.noise_scale(x);
    auto gap = [&](double y) {
      return std::fabs(estimate.density(slice, y) -
                       normal_pdf(y, true_mean, true_sd));
    };
    const double inside = trapezoid(gap, -s, s, quad_points);
    const double tail =
        1.0 - normal_interval_mass(-s, s, true_mean, true_sd);
    per_x[i] = inside + tail;
  }
  return mean(per_x);
}

}  // namespace lcpi
