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

#ifndef LCPI_CSV_HPP_
#define LCPI_CSV_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace lcpi {

// Shortest-faithful decimal for a double: 17 significant digits, "%.17g",
// '.' decimal separator regardless of locale. All CSV output goes through
// this so reruns with the same seed are byte-identical.
std::string format_double(double value);

// One CSV row from already-formatted cells.
void write_csv_row(std::ostream& os, const std::vector<std::string>& cells);

// Strictly numeric CSV reader: a header row of column names followed by
// rows of decimal numbers. No quoting or escaping.
struct NumericCsv {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};
NumericCsv read_numeric_csv(std::istream& is);

}  // namespace lcpi

#endif  // LCPI_CSV_HPP_
