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

#ifndef LCPI_KNN_HPP_
#define LCPI_KNN_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "lcpi/dataset.hpp"

namespace lcpi {

// Nearest-neighbor rate k = max(1, round(n^{2/(d+2)})).
std::size_t default_neighbor_count(std::size_t n, std::size_t dim);

// Clamp a raw variance estimate into [1/bound, bound]. bound must be
// positive; values below 1/bound (resp. above bound) hit the edges.
double clamp_variance(double v, double bound);

// k-nearest-neighbor estimators of the regression function and the
// conditional variance. Neighbors are selected by exact Euclidean
// distance with ties broken by training index, so results are
// deterministic. The variance at a query averages the squared residuals
// of the k neighbors, each residual taken against the regression estimate
// at that neighbor's own feature vector; those per-training-point fits
// are precomputed once, which also makes concurrent queries safe.
class KnnEstimator {
 public:
  // Throws std::invalid_argument for an empty training set or k outside
  // [1, n].
  KnnEstimator(LabeledDataset training, std::size_t k);

  // Mean label of the k nearest training points.
  double regress(std::span<const double> x) const;

  // Raw (unclamped) conditional-variance estimate.
  double variance(std::span<const double> x) const;

  std::size_t k() const { return k_; }
  const LabeledDataset& training() const { return training_; }

  // Indices of the k nearest training points, by (distance, index).
  std::vector<std::size_t> neighbors(std::span<const double> x) const;

 private:
  LabeledDataset training_;
  std::size_t k_;
  std::vector<double> fitted_;  // regression estimate at each training row
};

}  // namespace lcpi

#endif  // LCPI_KNN_HPP_
