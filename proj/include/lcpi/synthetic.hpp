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

#ifndef LCPI_SYNTHETIC_HPP_
#define LCPI_SYNTHETIC_HPP_

#include <cstddef>
#include <functional>
#include <span>

#include "lcpi/dataset.hpp"
#include "lcpi/rng.hpp"

namespace lcpi {

// Heteroscedastic Gaussian generator: Y = m(X) + scale(X) * Z with
// Z ~ N(0,1) independent of X. The noise scale must be strictly positive;
// this is asserted on every draw (a zero or negative scale throws).
// Immutable and shareable; sampling mutates only the caller's rng.
class GaussianModel {
 public:
  using ScalarFn = std::function<double(std::span<const double>)>;
  using FeatureSampler =
      std::function<void(SeededRng&, std::span<double>)>;

  GaussianModel(std::size_t dim, ScalarFn regression, ScalarFn noise_scale,
                FeatureSampler feature_sampler);

  std::size_t dim() const { return dim_; }
  double regression(std::span<const double> x) const;
  double noise_scale(std::span<const double> x) const;

  // Conditional density of Y given X = x (Gaussian closed form).
  double density(std::span<const double> x, double y) const;

  void draw_features(SeededRng& rng, std::span<double> out) const;
  UnlabeledDataset sample_features(std::size_t n, SeededRng& rng) const;
  LabeledDataset sample(std::size_t n, SeededRng& rng) const;

 private:
  std::size_t dim_;
  ScalarFn regression_;
  ScalarFn noise_scale_;
  FeatureSampler feature_sampler_;
};

// Simulation model used throughout the experiments:
//   Y = exp(-|x|_2) + d / (2 + 4 |x|_2) * Z,  X ~ Uniform[0,1]^d.
GaussianModel paper_model(std::size_t dim);

}  // namespace lcpi

#endif  // LCPI_SYNTHETIC_HPP_
