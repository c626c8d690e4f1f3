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

#include "lcpi/dataset.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "lcpi/csv.hpp"

namespace lcpi {

namespace {

void check_finite(std::span<const double> x) {
  for (double v : x)
    if (!std::isfinite(v))
      throw std::invalid_argument("dataset: non-finite feature value");
}

std::vector<std::string> feature_header(std::size_t dim) {
  std::vector<std::string> cols;
  cols.reserve(dim);
  for (std::size_t j = 1; j <= dim; ++j) cols.push_back("x" + std::to_string(j));
  return cols;
}

}  // namespace

UnlabeledDataset::UnlabeledDataset(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw std::invalid_argument("dataset: dimension must be >= 1");
}

void UnlabeledDataset::add(std::span<const double> x) {
  if (x.size() != dim_)
    throw std::invalid_argument("dataset: feature dimension mismatch");
  check_finite(x);
  features_.insert(features_.end(), x.begin(), x.end());
  ++size_;
}

void UnlabeledDataset::write_csv(std::ostream& os) const {
  write_csv_row(os, feature_header(dim_));
  std::vector<std::string> cells(dim_);
  for (std::size_t i = 0; i < size_; ++i) {
    const auto row = x(i);
    for (std::size_t j = 0; j < dim_; ++j) cells[j] = format_double(row[j]);
    write_csv_row(os, cells);
  }
}

UnlabeledDataset UnlabeledDataset::read_csv(std::istream& is) {
  const NumericCsv csv = read_numeric_csv(is);
  UnlabeledDataset out(csv.columns.size());
  out.reserve(csv.rows.size());
  for (const auto& row : csv.rows) out.add(row);
  return out;
}

LabeledDataset::LabeledDataset(std::size_t dim) : features_(dim) {}

void LabeledDataset::add(std::span<const double> x, double y) {
  if (!std::isfinite(y))
    throw std::invalid_argument("dataset: non-finite label");
  features_.add(x);
  labels_.push_back(y);
}

void LabeledDataset::reserve(std::size_t n) {
  features_.reserve(n);
  labels_.reserve(n);
}

void LabeledDataset::write_csv(std::ostream& os) const {
  auto cols = feature_header(dim());
  cols.push_back("y");
  write_csv_row(os, cols);
  std::vector<std::string> cells(dim() + 1);
  for (std::size_t i = 0; i < size(); ++i) {
    const auto row = x(i);
    for (std::size_t j = 0; j < dim(); ++j) cells[j] = format_double(row[j]);
    cells[dim()] = format_double(labels_[i]);
    write_csv_row(os, cells);
  }
}

LabeledDataset LabeledDataset::read_csv(std::istream& is) {
  const NumericCsv csv = read_numeric_csv(is);
  if (csv.columns.size() < 2 || csv.columns.back() != "y")
    throw std::invalid_argument("dataset: expected trailing 'y' column");
  const std::size_t dim = csv.columns.size() - 1;
  LabeledDataset out(dim);
  out.reserve(csv.rows.size());
  for (const auto& row : csv.rows)
    out.add(std::span<const double>(row.data(), dim), row[dim]);
  return out;
}

}  // namespace lcpi
