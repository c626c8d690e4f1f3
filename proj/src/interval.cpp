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

#include "lcpi/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lcpi {

PredictionInterval::PredictionInterval(double lower, double upper)
    : lower_(lower), upper_(upper), empty_(false) {
  if (!std::isfinite(lower) || !std::isfinite(upper))
    throw std::invalid_argument("PredictionInterval: non-finite endpoint");
  if (lower > upper)
    throw std::invalid_argument("PredictionInterval: lower > upper");
}

PredictionInterval::PredictionInterval()
    : lower_(std::numeric_limits<double>::quiet_NaN()),
      upper_(std::numeric_limits<double>::quiet_NaN()),
      empty_(true) {}

PredictionInterval PredictionInterval::empty() { return PredictionInterval(); }

double interval_length(const PredictionInterval& iv) { return iv.length(); }

PredictionInterval intersect(const PredictionInterval& a,
                             const PredictionInterval& b) {
  if (a.is_empty() || b.is_empty()) return PredictionInterval::empty();
  const double lo = std::max(a.lower(), b.lower());
  const double hi = std::min(a.upper(), b.upper());
  if (lo > hi) return PredictionInterval::empty();
  return PredictionInterval(lo, hi);
}

std::vector<PredictionInterval> symmetric_difference(
    const PredictionInterval& a, const PredictionInterval& b) {
  std::vector<PredictionInterval> pieces;
  auto push = [&pieces](double lo, double hi) {
    if (hi > lo) pieces.emplace_back(lo, hi);
  };

  if (a.is_empty() && b.is_empty()) return pieces;
  if (a.is_empty()) {
    push(b.lower(), b.upper());
    return pieces;
  }
  if (b.is_empty()) {
    push(a.lower(), a.upper());
    return pieces;
  }

  const double ov_lo = std::max(a.lower(), b.lower());
  const double ov_hi = std::min(a.upper(), b.upper());
  if (ov_lo > ov_hi) {  // disjoint
    push(a.lower(), a.upper());
    push(b.lower(), b.upper());
    return pieces;
  }
  push(std::min(a.lower(), b.lower()), ov_lo);
  push(ov_hi, std::max(a.upper(), b.upper()));
  return pieces;
}

double symmetric_difference_length(const PredictionInterval& a,
                                   const PredictionInterval& b) {
  double total = 0.0;
  for (const auto& piece : symmetric_difference(a, b)) total += piece.length();
  return total;
}

}  // namespace lcpi
