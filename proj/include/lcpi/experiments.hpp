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

#ifndef LCPI_EXPERIMENTS_HPP_
#define LCPI_EXPERIMENTS_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lcpi {

enum class SupportMode { kTheory, kPractice };

// Shared knob set for all experiment drivers. Fields a given experiment
// does not use are ignored by it. grid_size == 0 and k == 0 mean "per
// protocol default". Repetition r of cell c always runs on rng stream
// c * reps + r, so outputs are byte-identical for a fixed (config, seed)
// regardless of the thread count.
struct ExperimentConfig {
  std::string experiment;  // table1 | table2 | compare | length-scaling
  std::vector<std::size_t> dims = {1, 5};
  std::vector<double> lengths = {0.1, 0.5, 1.0, 2.0};
  double beta = 0.17;
  std::size_t n_train = 500;
  std::size_t n_cal = 100;  // N for the table experiments
  std::vector<std::size_t> cal_sizes;  // N sweep (compare, length-scaling)
  std::size_t grid_size = 0;           // M
  std::size_t n_test = 1000;           // T
  std::size_t reps = 100;
  std::size_t k = 0;  // neighbor count; 0 = n^{2/(d+2)} rule
  double u = 1e-5;    // jitter width
  SupportMode s_mode = SupportMode::kPractice;
  std::uint64_t seed = 42;
  std::string out_path;
  std::size_t threads = 1;

  // Throws std::invalid_argument with a reason on bad settings.
  void validate() const;
};

struct RepRow {
  std::size_t d;
  double ell_or_beta;
  std::size_t n_cal;
  std::size_t rep;
  std::string metric;
  double value;
};

struct AggRow {
  std::size_t d;
  double ell_or_beta;
  std::size_t n_cal;
  std::string method;
  std::string metric;
  double mean;
  double sd;
  std::size_t reps;
};

// Per-repetition rows plus aggregates recomputable from them.
struct ExperimentReport {
  std::string experiment;
  std::uint64_t seed = 0;
  std::vector<RepRow> rows;
  std::vector<AggRow> aggregates;

  // Long format: experiment,d,ell_or_beta,N,rep,metric,value.
  void write_long_csv(std::ostream& os) const;
  // Plot-ready: experiment,d,ell_or_beta,N,method,metric,mean,sd,reps,seed.
  void write_agg_csv(std::ostream& os) const;

  const AggRow* find(std::size_t d, double ell_or_beta, std::size_t n_cal,
                     const std::string& method,
                     const std::string& metric) const;
};

// Oracle study: exact densities, threshold calibrated per repetition from
// fresh unlabeled draws on the [-5,5] grid; metrics "length", "error".
ExperimentReport run_oracle_table(const ExperimentConfig& config);

// Plug-in study: kNN fit on a fresh training set per repetition, support
// from the configured mode, threshold from the empirical length curve;
// metrics "length", "error", "empty_fraction".
ExperimentReport run_plugin_table(const ExperimentConfig& config);

// Length- vs coverage-calibrated predictors across calibration sizes;
// metrics "length_pi.length", "length_pi.coverage", "coverage_pi.length",
// "coverage_pi.coverage".
ExperimentReport run_comparison(const ExperimentConfig& config);

// |realized expected length - requested| across calibration sizes for the
// exact-density pipeline, plus a fitted log-log slope aggregate row
// (method "fit", metric "loglog_slope").
ExperimentReport run_length_scaling(const ExperimentConfig& config);

// Dispatch on config.experiment.
ExperimentReport run_experiment(const ExperimentConfig& config);

// Writes the long CSV to out_path and the aggregate CSV next to it
// (suffix "_agg.csv").
void write_report_files(const ExperimentReport& report,
                        const std::string& out_path);

}  // namespace lcpi

#endif  // LCPI_EXPERIMENTS_HPP_
