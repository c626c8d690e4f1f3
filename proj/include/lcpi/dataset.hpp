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

#ifndef LCPI_DATASET_HPP_
#define LCPI_DATASET_HPP_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace lcpi {

// Feature matrix stored row-major. All rows share the dimension fixed at
// construction and every value must be finite.
class UnlabeledDataset {
 public:
  explicit UnlabeledDataset(std::size_t dim);

  void add(std::span<const double> x);
  void reserve(std::size_t n) { features_.reserve(n * dim_); }

  std::size_t size() const { return size_; }
  std::size_t dim() const { return dim_; }
  std::span<const double> x(std::size_t i) const {
    return {features_.data() + i * dim_, dim_};
  }

  // Header "x1,...,xd", one row per observation, 17 significant digits.
  void write_csv(std::ostream& os) const;
  static UnlabeledDataset read_csv(std::istream& is);

 private:
  std::size_t dim_;
  std::size_t size_ = 0;
  std::vector<double> features_;
};

// Supervised sample: feature rows plus one real label per row.
class LabeledDataset {
 public:
  explicit LabeledDataset(std::size_t dim);

  void add(std::span<const double> x, double y);
  void reserve(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  std::size_t dim() const { return features_.dim(); }
  std::span<const double> x(std::size_t i) const { return features_.x(i); }
  double y(std::size_t i) const { return labels_[i]; }
  const std::vector<double>& labels() const { return labels_; }
  const UnlabeledDataset& features() const { return features_; }

  // Header "x1,...,xd,y".
  void write_csv(std::ostream& os) const;
  static LabeledDataset read_csv(std::istream& is);

 private:
  UnlabeledDataset features_;
  std::vector<double> labels_;
};

}  // namespace lcpi

#endif  // LCPI_DATASET_HPP_
