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

#include "lcpi/synthetic.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lcpi/normal.hpp"

namespace lcpi {

GaussianModel::GaussianModel(std::size_t dim, ScalarFn regression,
                             ScalarFn noise_scale,
                             FeatureSampler feature_sampler)
    : dim_(dim),
      regression_(std::move(regression)),
      noise_scale_(std::move(noise_scale)),
      feature_sampler_(std::move(feature_sampler)) {
  if (dim == 0)
    throw std::invalid_argument("GaussianModel: dimension must be >= 1");
  if (!regression_ || !noise_scale_ || !feature_sampler_)
    throw std::invalid_argument("GaussianModel: missing component function");
}

double GaussianModel::regression(std::span<const double> x) const {
  return regression_(x);
}

double GaussianModel::noise_scale(std::span<const double> x) const {
  const double s = noise_scale_(x);
  if (!(s > 0.0))
    throw std::invalid_argument("GaussianModel: noise scale must be > 0");
  return s;
}

double GaussianModel::density(std::span<const double> x, double y) const {
  return normal_pdf(y, regression(x), noise_scale(x));
}

void GaussianModel::draw_features(SeededRng& rng, std::span<double> out) const {
  feature_sampler_(rng, out);
}

UnlabeledDataset GaussianModel::sample_features(std::size_t n,
                                                SeededRng& rng) const {
  UnlabeledDataset data(dim_);
  data.reserve(n);
  std::vector<double> x(dim_);
  for (std::size_t i = 0; i < n; ++i) {
    draw_features(rng, x);
    data.add(x);
  }
  return data;
}

LabeledDataset GaussianModel::sample(std::size_t n, SeededRng& rng) const {
  LabeledDataset data(dim_);
  data.reserve(n);
  std::vector<double> x(dim_);
  for (std::size_t i = 0; i < n; ++i) {
    draw_features(rng, x);
    const double y = regression(x) + noise_scale(x) * rng.normal();
    data.add(x, y);
  }
  return data;
}

GaussianModel paper_model(std::size_t dim) {
  auto norm2 = [](std::span<const double> x) {
    double ss = 0.0;
    for (double v : x) ss += v * v;
    return std::sqrt(ss);
  };
  const double d = static_cast<double>(dim);
  return GaussianModel(
      dim,
      [norm2](std::span<const double> x) { return std::exp(-norm2(x)); },
      [norm2, d](std::span<const double> x) {
        return d / (2.0 + 4.0 * norm2(x));
      },
      [](SeededRng& rng, std::span<double> out) {
        for (double& v : out) v = rng.uniform();
      });
}

}  // namespace lcpi
