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

#include "lcpi/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace lcpi {

double pairwise_sum(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n <= 16) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double mean(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("mean: empty input");
  return pairwise_sum(values) / static_cast<double>(values.size());
}

double sample_sd(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 2) return 0.0;
  const double m = mean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - m) * (v - m);
  return std::sqrt(ss / static_cast<double>(n - 1));
}

double trapezoid(const std::function<double(double)>& f, double lo, double hi,
                 std::size_t panels) {
  if (panels == 0) throw std::invalid_argument("trapezoid: panels must be >= 1");
  if (lo == hi) return 0.0;
  const double h = (hi - lo) / static_cast<double>(panels);
  double acc = 0.5 * (f(lo) + f(hi));
  for (std::size_t i = 1; i < panels; ++i)
    acc += f(lo + static_cast<double>(i) * h);
  return acc * h;
}

double integrate_to_tol(const std::function<double(double)>& f, double lo,
                        double hi, double abs_tol, std::size_t init_panels) {
  if (lo == hi) return 0.0;
  std::size_t panels = init_panels == 0 ? 8 : init_panels;
  double prev = trapezoid(f, lo, hi, panels);
  for (int round = 0; round < 16; ++round) {
    panels *= 2;
    const double cur = trapezoid(f, lo, hi, panels);
    if (std::fabs(cur - prev) <= abs_tol)
      return cur + (cur - prev) / 3.0;  // Richardson step
    prev = cur;
  }
  return prev;
}

LinearFit fit_line(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw std::invalid_argument("fit_line: need >= 2 paired points");
  const double mx = mean(xs);
  const double my = mean(ys);
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  return fit;
}

}  // namespace lcpi
