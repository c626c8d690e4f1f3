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

#include "lcpi/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace lcpi {

Grid::Grid(double support, std::size_t cells) : support_(support) {
  if (!(support > 0.0) || !std::isfinite(support))
    throw std::invalid_argument("Grid: support must be positive and finite");
  if (cells < 2) throw std::invalid_argument("Grid: need at least 2 cells");
  cell_width_ = 2.0 * support / static_cast<double>(cells);
  points_.resize(cells);
  for (std::size_t k = 0; k < cells; ++k)
    points_[k] = -support + static_cast<double>(k) * cell_width_;
}

Grid make_grid(double support, std::size_t cells) {
  return Grid(support, cells);
}

}  // namespace lcpi
