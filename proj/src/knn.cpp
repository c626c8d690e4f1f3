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

#include "lcpi/knn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace lcpi {

std::size_t default_neighbor_count(std::size_t n, std::size_t dim) {
  if (n == 0) throw std::invalid_argument("default_neighbor_count: n >= 1");
  const double exponent = 2.0 / (static_cast<double>(dim) + 2.0);
  const double k = std::round(std::pow(static_cast<double>(n), exponent));
  const auto bounded = std::min(static_cast<double>(n), std::max(1.0, k));
  return static_cast<std::size_t>(bounded);
}

double clamp_variance(double v, double bound) {
  if (!(bound > 0.0))
    throw std::invalid_argument("clamp_variance: bound must be > 0");
  const double low = 1.0 / bound;
  if (v < low) return low;
  if (v > bound) return bound;
  return v;
}

KnnEstimator::KnnEstimator(LabeledDataset training, std::size_t k)
    : training_(std::move(training)), k_(k) {
  if (training_.size() == 0)
    throw std::invalid_argument("KnnEstimator: empty training set");
  if (k_ < 1 || k_ > training_.size())
    throw std::invalid_argument("KnnEstimator: k must be in [1, n]");
  fitted_.resize(training_.size());
  for (std::size_t i = 0; i < training_.size(); ++i) {
    double acc = 0.0;
    for (std::size_t j : neighbors(training_.x(i))) acc += training_.y(j);
    fitted_[i] = acc / static_cast<double>(k_);
  }
}

std::vector<std::size_t> KnnEstimator::neighbors(
    std::span<const double> x) const {
  const std::size_t n = training_.size();
  const std::size_t d = training_.dim();
  if (x.size() != d)
    throw std::invalid_argument("KnnEstimator: query dimension mismatch");

  std::vector<double> dist2(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto xi = training_.x(i);
    double acc = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      const double diff = xi[j] - x[j];
      acc += diff * diff;
    }
    dist2[i] = acc;
  }

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  auto closer = [&dist2](std::size_t a, std::size_t b) {
    if (dist2[a] != dist2[b]) return dist2[a] < dist2[b];
    return a < b;  // deterministic tie-break by training index
  };
  std::nth_element(idx.begin(), idx.begin() + (k_ - 1), idx.end(), closer);
  idx.resize(k_);
  return idx;
}

double KnnEstimator::regress(std::span<const double> x) const {
  double acc = 0.0;
  for (std::size_t j : neighbors(x)) acc += training_.y(j);
  return acc / static_cast<double>(k_);
}

double KnnEstimator::variance(std::span<const double> x) const {
  double acc = 0.0;
  for (std::size_t j : neighbors(x)) {
    const double r = training_.y(j) - fitted_[j];
    acc += r * r;
  }
  return acc / static_cast<double>(k_);
}

}  // namespace lcpi
