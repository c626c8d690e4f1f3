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

#ifndef LCPI_INTERVAL_HPP_
#define LCPI_INTERVAL_HPP_

#include <vector>

namespace lcpi {

// A closed interval [lower, upper] of the real line, or the empty set.
// Immutable after construction.
class PredictionInterval {
 public:
  // Non-empty interval; throws std::invalid_argument if lower > upper or
  // either endpoint is not finite.
  PredictionInterval(double lower, double upper);

  static PredictionInterval empty();

  bool is_empty() const { return empty_; }
  // Endpoints are meaningful only when not empty.
  double lower() const { return lower_; }
  double upper() const { return upper_; }

  double length() const { return empty_ ? 0.0 : upper_ - lower_; }
  bool contains(double y) const {
    return !empty_ && lower_ <= y && y <= upper_;
  }

 private:
  PredictionInterval();  // empty
  double lower_;
  double upper_;
  bool empty_;
};

double interval_length(const PredictionInterval& iv);

// Set intersection; empty when the inputs do not meet.
PredictionInterval intersect(const PredictionInterval& a,
                             const PredictionInterval& b);

// The symmetric difference of two intervals as disjoint pieces of positive
// length (at most two for single intervals: disjoint inputs give both
// back, overlapping inputs give the left and right overhangs).
std::vector<PredictionInterval> symmetric_difference(
    const PredictionInterval& a, const PredictionInterval& b);

double symmetric_difference_length(const PredictionInterval& a,
                                   const PredictionInterval& b);

}  // namespace lcpi

#endif  // LCPI_INTERVAL_HPP_
