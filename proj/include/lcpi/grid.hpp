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

#ifndef LCPI_GRID_HPP_
#define LCPI_GRID_HPP_

#include <cstddef>
#include <vector>

namespace lcpi {

// Regular left-endpoint grid of [-support, support): point k is
// -support + k * (2*support / size), k = 0..size-1. Points are computed
// from the index formula rather than accumulated, so the spacing is exact
// to one ulp and runs are bit-reproducible.
class Grid {
 public:
  // Throws std::invalid_argument unless support > 0 and cells >= 2.
  Grid(double support, std::size_t cells);

  double support() const { return support_; }
  std::size_t size() const { return points_.size(); }
  double cell_width() const { return cell_width_; }
  double point(std::size_t k) const { return points_[k]; }
  const std::vector<double>& points() const { return points_; }

 private:
  double support_;
  double cell_width_;
  std::vector<double> points_;
};

Grid make_grid(double support, std::size_t cells);

}  // namespace lcpi

#endif  // LCPI_GRID_HPP_
