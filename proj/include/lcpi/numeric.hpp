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

#ifndef LCPI_NUMERIC_HPP_
#define LCPI_NUMERIC_HPP_

#include <cstddef>
#include <functional>
#include <span>

namespace lcpi {

// Pairwise (cascade) summation; deterministic for a fixed element order
// and much better conditioned than a running sum.
double pairwise_sum(std::span<const double> values);

double mean(std::span<const double> values);

// Sample standard deviation (n-1 denominator); 0 for fewer than 2 values.
double sample_sd(std::span<const double> values);

// Composite trapezoid rule with n panels (n >= 1).
double trapezoid(const std::function<double(double)>& f, double lo, double hi,
                 std::size_t panels);

// Trapezoid refined by panel doubling until two successive estimates agree
// to abs_tol, then Richardson-corrected. init_panels is the starting
// resolution; refinement is capped so the call always terminates.
double integrate_to_tol(const std::function<double(double)>& f, double lo,
                        double hi, double abs_tol, std::size_t init_panels);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
};

// Ordinary least squares of y on x; requires at least two points.
LinearFit fit_line(std::span<const double> xs, std::span<const double> ys);

}  // namespace lcpi

#endif  // LCPI_NUMERIC_HPP_
