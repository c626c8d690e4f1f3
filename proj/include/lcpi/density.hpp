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

#ifndef LCPI_DENSITY_HPP_
#define LCPI_DENSITY_HPP_

#include <cstddef>
#include <functional>
#include <memory>
#include <span>

#include "lcpi/dataset.hpp"
#include "lcpi/knn.hpp"
#include "lcpi/synthetic.hpp"

namespace lcpi {

// Conditional density parameters at one feature vector, after the
// variance clamp. Evaluating the density at many y for a fixed x should
// go through one of these so the base estimators run once per x.
struct DensitySlice {
  double mean;
  double sd;
};

// Plug-in conditional density: a Gaussian in y with estimated mean and
// clamped estimated variance, truncated to |y| <= support. The variance
// clamp forces sigma^2 into [1/support, support], which bounds the
// density by sqrt(support / (2*pi)). perturbation_scale is the width u of
// the Uniform[0, u] jitter added by the randomized variant.
//
// Any pair of estimator functions can be plugged in; lifetimes of
// captured state are the caller's responsibility (knn_density captures a
// shared_ptr and is self-contained).
class PluginDensity {
 public:
  using ScalarFn = std::function<double(std::span<const double>)>;

  // Throws std::invalid_argument unless support > 0 and
  // perturbation_scale >= 0.
  PluginDensity(ScalarFn mean_fn, ScalarFn raw_variance_fn, double support,
                double perturbation_scale);

  DensitySlice at(std::span<const double> x) const;

  // Density value at (x, y); 0 outside [-support, support].
  double density(std::span<const double> x, double y) const;
  double density(const DensitySlice& slice, double y) const;

  // density + zeta on the support, still 0 outside.
  double randomized_density(std::span<const double> x, double y,
                            double zeta) const;
  double randomized_density(const DensitySlice& slice, double y,
                            double zeta) const;

  double support() const { return support_; }
  double perturbation_scale() const { return perturbation_scale_; }

 private:
  ScalarFn mean_fn_;
  ScalarFn raw_variance_fn_;
  double support_;
  double perturbation_scale_;
};

// Plug-in density backed by kNN regression/variance estimators.
PluginDensity knn_density(std::shared_ptr<const KnnEstimator> estimator,
                          double support, double perturbation_scale);

// Support half-width from training labels: max(-min Y, max Y).
double practice_support(std::span<const double> labels);

// Support half-width from sample sizes: log(min(n, n_calibration)).
double theory_support(std::size_t n_train, std::size_t n_calibration);

// Average over the rows of xs of the L1 distance between the plug-in
// density and the true conditional density: trapezoid quadrature of
// |phat - p| on [-support, support] (quad_points >= 100 panels) plus the
// true-density tail mass outside the support.
double l1_distance(const PluginDensity& estimate, const GaussianModel& truth,
                   const UnlabeledDataset& xs, std::size_t quad_points);

}  // namespace lcpi

#endif  // LCPI_DENSITY_HPP_
