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

#include "lcpi/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "lcpi/calibration.hpp"
#include "lcpi/csv.hpp"
#include "lcpi/density.hpp"
#include "lcpi/grid.hpp"
#include "lcpi/knn.hpp"
#include "lcpi/metrics.hpp"
#include "lcpi/numeric.hpp"
#include "lcpi/predictor.hpp"
#include "lcpi/rng.hpp"
#include "lcpi/synthetic.hpp"

namespace lcpi {

namespace {

constexpr double kOracleSupport = 5.0;  // fixed [-5,5] oracle grid interval

void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)>& body) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t n_workers = std::min(threads, count);
  pool.reserve(n_workers);
  for (std::size_t t = 0; t < n_workers; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

void warn_unrepresentable_length(double ell, double support) {
  if (ell > 2.0 * support)
    std::cerr << "warning: requested expected length " << ell
              << " exceeds the representable support 2s = " << 2.0 * support
              << "; the interval degenerates to the full support\n";
}

// One repetition's plug-in density: kNN fit on a fresh training sample,
// support from the configured mode.
PluginDensity fit_plugin(const GaussianModel& model,
                         const ExperimentConfig& cfg, std::size_t n_cal,
                         SeededRng& rng) {
  LabeledDataset train = model.sample(cfg.n_train, rng);
  const std::size_t k =
      cfg.k != 0 ? cfg.k : default_neighbor_count(train.size(), train.dim());
  const double support = cfg.s_mode == SupportMode::kPractice
                             ? practice_support(train.labels())
                             : theory_support(cfg.n_train, n_cal);
  auto estimator = std::make_shared<KnnEstimator>(std::move(train), k);
  return knn_density(std::move(estimator), support, cfg.u);
}

template <typename Predict>
std::vector<PredictionInterval> predict_all(const LabeledDataset& test,
                                            Predict&& predict) {
  std::vector<PredictionInterval> out;
  out.reserve(test.size());
  for (std::size_t i = 0; i < test.size(); ++i) out.push_back(predict(test.x(i)));
  return out;
}

std::size_t count_empty(std::span<const PredictionInterval> intervals) {
  std::size_t n = 0;
  for (const auto& iv : intervals) n += iv.is_empty() ? 1 : 0;
  return n;
}

void append_aggregate(ExperimentReport& report, std::size_t d,
                      double ell_or_beta, std::size_t n_cal,
                      const std::string& method, const std::string& metric,
                      std::span<const double> values) {
  report.aggregates.push_back(AggRow{d, ell_or_beta, n_cal, method, metric,
                                     mean(values), sample_sd(values),
                                     values.size()});
}

}  // namespace

void ExperimentConfig::validate() const {
  auto fail = [](const std::string& why) {
    throw std::invalid_argument("config: " + why);
  };
  if (experiment != "table1" && experiment != "table2" &&
      experiment != "compare" && experiment != "length-scaling")
    fail("unknown experiment '" + experiment + "'");
  if (dims.empty()) fail("need at least one dimension");
  for (std::size_t d : dims)
    if (d == 0) fail("dimensions must be >= 1");
  if (lengths.empty()) fail("need at least one requested length");
  for (double ell : lengths)
    if (!(ell > 0.0) || !std::isfinite(ell)) fail("lengths must be > 0");
  if (!(beta > 0.0 && beta < 1.0)) fail("beta must be in (0,1)");
  if (reps == 0) fail("reps must be >= 1");
  if (n_test == 0) fail("test size must be >= 1");
  if (n_train == 0) fail("training size must be >= 1");
  if (!(u >= 0.0)) fail("u must be >= 0");
  if (experiment == "table1" || experiment == "table2") {
    if (n_cal == 0) fail("calibration size N must be >= 1");
  } else {
    if (cal_sizes.empty()) fail("need a calibration size sweep");
    for (std::size_t n : cal_sizes)
      if (n == 0) fail("calibration sizes must be >= 1");
  }
  if (experiment == "length-scaling") {
    for (std::size_t i = 1; i < cal_sizes.size(); ++i)
      if (cal_sizes[i] <= cal_sizes[i - 1])
        fail("calibration sweep must be strictly increasing");
    if (lengths.size() != 1 || dims.size() != 1)
      fail("length-scaling runs one (d, ell) pair");
  }
  if (experiment == "compare" && (lengths.size() != 1 || dims.size() != 1))
    fail("compare runs one (d, ell, beta) triple");
}

void ExperimentReport::write_long_csv(std::ostream& os) const {
  write_csv_row(os,
                {"experiment", "d", "ell_or_beta", "N", "rep", "metric",
                 "value"});
  for (const auto& r : rows)
    write_csv_row(os, {experiment, std::to_string(r.d),
                       format_double(r.ell_or_beta), std::to_string(r.n_cal),
                       std::to_string(r.rep), r.metric,
                       format_double(r.value)});
}

void ExperimentReport::write_agg_csv(std::ostream& os) const {
  write_csv_row(os, {"experiment", "d", "ell_or_beta", "N", "method", "metric",
                     "mean", "sd", "reps", "seed"});
  for (const auto& a : aggregates)
    write_csv_row(os, {experiment, std::to_string(a.d),
                       format_double(a.ell_or_beta), std::to_string(a.n_cal),
                       a.method, a.metric, format_double(a.mean),
                       format_double(a.sd), std::to_string(a.reps),
                       std::to_string(seed)});
}

const AggRow* ExperimentReport::find(std::size_t d, double ell_or_beta,
                                     std::size_t n_cal,
                                     const std::string& method,
                                     const std::string& metric) const {
  for (const auto& a : aggregates)
    if (a.d == d && a.ell_or_beta == ell_or_beta && a.n_cal == n_cal &&
        a.method == method && a.metric == metric)
      return &a;
  return nullptr;
}

ExperimentReport run_oracle_table(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentReport report{"table1", cfg.seed, {}, {}};
  const std::size_t grid_size = cfg.grid_size != 0 ? cfg.grid_size : 1000;
  const Grid grid(kOracleSupport, grid_size);

  struct Outcome {
    double length;
    double error;
  };
  const std::size_t n_cells = cfg.dims.size() * cfg.lengths.size();
  std::vector<Outcome> outcomes(n_cells * cfg.reps);

  std::vector<GaussianModel> models;
  models.reserve(cfg.dims.size());
  for (std::size_t d : cfg.dims) models.push_back(paper_model(d));
  for (double ell : cfg.lengths) warn_unrepresentable_length(ell, kOracleSupport);

  parallel_for(outcomes.size(), cfg.threads, [&](std::size_t job) {
    const std::size_t cell = job / cfg.reps;
    const std::size_t di = cell / cfg.lengths.size();
    const double ell = cfg.lengths[cell % cfg.lengths.size()];
    const GaussianModel& model = models[di];

    SeededRng rng(cfg.seed, job);
    const double lambda =
        oracle_threshold(model, ell, cfg.n_cal, grid, rng);
    const OraclePredictor predictor(model, lambda, kOracleSupport);
    const LabeledDataset test = model.sample(cfg.n_test, rng);
    const auto intervals =
        predict_all(test, [&](auto x) { return predictor.predict(x); });
    outcomes[job] = {empirical_length(intervals),
                     empirical_error(intervals, test.labels())};
  });

  for (std::size_t cell = 0; cell < n_cells; ++cell) {
    const std::size_t d = cfg.dims[cell / cfg.lengths.size()];
    const double ell = cfg.lengths[cell % cfg.lengths.size()];
    std::vector<double> lengths(cfg.reps);
    std::vector<double> errors(cfg.reps);
    for (std::size_t r = 0; r < cfg.reps; ++r) {
      const Outcome& o = outcomes[cell * cfg.reps + r];
      lengths[r] = o.length;
      errors[r] = o.error;
      report.rows.push_back(RepRow{d, ell, cfg.n_cal, r, "length", o.length});
      report.rows.push_back(RepRow{d, ell, cfg.n_cal, r, "error", o.error});
    }
    append_aggregate(report, d, ell, cfg.n_cal, "oracle", "length", lengths);
    append_aggregate(report, d, ell, cfg.n_cal, "oracle", "error", errors);
  }
  return report;
}

ExperimentReport run_plugin_table(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentReport report{"table2", cfg.seed, {}, {}};
  const std::size_t grid_size = cfg.grid_size != 0 ? cfg.grid_size : 100;

  struct Outcome {
    double length;
    double error;
    double empty_fraction;
  };
  const std::size_t n_cells = cfg.dims.size() * cfg.lengths.size();
  std::vector<Outcome> outcomes(n_cells * cfg.reps);

  std::vector<GaussianModel> models;
  models.reserve(cfg.dims.size());
  for (std::size_t d : cfg.dims) models.push_back(paper_model(d));

  parallel_for(outcomes.size(), cfg.threads, [&](std::size_t job) {
    const std::size_t cell = job / cfg.reps;
    const std::size_t di = cell / cfg.lengths.size();
    const double ell = cfg.lengths[cell % cfg.lengths.size()];
    const GaussianModel& model = models[di];

    SeededRng rng(cfg.seed, job);
    const PluginDensity density = fit_plugin(model, cfg, cfg.n_cal, rng);
    warn_unrepresentable_length(ell, density.support());
    const Grid grid(density.support(), grid_size);
    const UnlabeledDataset calibration =
        model.sample_features(cfg.n_cal, rng);
    const LengthCurve curve = calibrate_length(density, calibration, grid, rng);
    const LengthCalibratedPredictor predictor(density, curve.inverse(ell),
                                              ell);
    const LabeledDataset test = model.sample(cfg.n_test, rng);
    const auto intervals = predict_all(
        test, [&](auto x) { return predictor.predict(x, rng); });
    outcomes[job] = {empirical_length(intervals),
                     empirical_error(intervals, test.labels()),
                     static_cast<double>(count_empty(intervals)) /
                         static_cast<double>(intervals.size())};
  });

  for (std::size_t cell = 0; cell < n_cells; ++cell) {
    const std::size_t d = cfg.dims[cell / cfg.lengths.size()];
    const double ell = cfg.lengths[cell % cfg.lengths.size()];
    std::vector<double> lengths(cfg.reps);
    std::vector<double> errors(cfg.reps);
    std::vector<double> empties(cfg.reps);
    for (std::size_t r = 0; r < cfg.reps; ++r) {
      const Outcome& o = outcomes[cell * cfg.reps + r];
      lengths[r] = o.length;
      errors[r] = o.error;
      empties[r] = o.empty_fraction;
      report.rows.push_back(RepRow{d, ell, cfg.n_cal, r, "length", o.length});
      report.rows.push_back(RepRow{d, ell, cfg.n_cal, r, "error", o.error});
      report.rows.push_back(
          RepRow{d, ell, cfg.n_cal, r, "empty_fraction", o.empty_fraction});
    }
    append_aggregate(report, d, ell, cfg.n_cal, "plugin", "length", lengths);
    append_aggregate(report, d, ell, cfg.n_cal, "plugin", "error", errors);
    append_aggregate(report, d, ell, cfg.n_cal, "plugin", "empty_fraction",
                     empties);
  }
  return report;
}

ExperimentReport run_comparison(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentReport report{"compare", cfg.seed, {}, {}};
  const std::size_t d = cfg.dims.front();
  const double ell = cfg.lengths.front();
  const GaussianModel model = paper_model(d);

  struct Outcome {
    double length_len;
    double length_cov;  // coverage of the length-calibrated predictor
    double coverage_len;
    double coverage_cov;
  };
  std::vector<Outcome> outcomes(cfg.cal_sizes.size() * cfg.reps);

  parallel_for(outcomes.size(), cfg.threads, [&](std::size_t job) {
    const std::size_t n_cal = cfg.cal_sizes[job / cfg.reps];
    SeededRng rng(cfg.seed, job);

    const PluginDensity density = fit_plugin(model, cfg, n_cal, rng);
    warn_unrepresentable_length(ell, density.support());
    const std::size_t grid_size =
        cfg.grid_size != 0 ? cfg.grid_size : default_grid_size(n_cal);
    const Grid grid(density.support(), grid_size);

    const UnlabeledDataset cal_features =
        model.sample_features(n_cal, rng);
    const LengthCurve length_curve =
        calibrate_length(density, cal_features, grid, rng);
    const LengthCalibratedPredictor by_length(density,
                                              length_curve.inverse(ell), ell);

    const LabeledDataset cal_labeled = model.sample(n_cal, rng);
    const CoverageCurve coverage_curve =
        calibrate_coverage(density, cal_labeled, rng);
    const CoverageCalibratedPredictor by_coverage(
        density, coverage_curve.threshold(cfg.beta), cfg.beta);

    const LabeledDataset test = model.sample(cfg.n_test, rng);
    const auto iv_len = predict_all(
        test, [&](auto x) { return by_length.predict(x, rng); });
    const auto iv_cov = predict_all(
        test, [&](auto x) { return by_coverage.predict(x, rng); });

    outcomes[job] = {
        empirical_length(iv_len),
        1.0 - empirical_error(iv_len, test.labels()),
        empirical_length(iv_cov),
        1.0 - empirical_error(iv_cov, test.labels())};
  });

  for (std::size_t ni = 0; ni < cfg.cal_sizes.size(); ++ni) {
    const std::size_t n_cal = cfg.cal_sizes[ni];
    std::vector<double> ll(cfg.reps), lc(cfg.reps), cl(cfg.reps),
        cc(cfg.reps);
    for (std::size_t r = 0; r < cfg.reps; ++r) {
      const Outcome& o = outcomes[ni * cfg.reps + r];
      ll[r] = o.length_len;
      lc[r] = o.length_cov;
      cl[r] = o.coverage_len;
      cc[r] = o.coverage_cov;
      report.rows.push_back(
          RepRow{d, ell, n_cal, r, "length_pi.length", o.length_len});
      report.rows.push_back(
          RepRow{d, ell, n_cal, r, "length_pi.coverage", o.length_cov});
      report.rows.push_back(
          RepRow{d, cfg.beta, n_cal, r, "coverage_pi.length", o.coverage_len});
      report.rows.push_back(RepRow{d, cfg.beta, n_cal, r,
                                   "coverage_pi.coverage", o.coverage_cov});
    }
    append_aggregate(report, d, ell, n_cal, "length", "length", ll);
    append_aggregate(report, d, ell, n_cal, "length", "coverage", lc);
    append_aggregate(report, d, cfg.beta, n_cal, "coverage", "length", cl);
    append_aggregate(report, d, cfg.beta, n_cal, "coverage", "coverage", cc);
  }
  return report;
}

ExperimentReport run_length_scaling(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentReport report{"length-scaling", cfg.seed, {}, {}};
  const std::size_t d = cfg.dims.front();
  const double ell = cfg.lengths.front();
  const GaussianModel model = paper_model(d);
  const std::size_t grid_size = cfg.grid_size != 0 ? cfg.grid_size : 1000;
  const Grid grid(kOracleSupport, grid_size);
  warn_unrepresentable_length(ell, kOracleSupport);

  std::vector<double> gaps(cfg.cal_sizes.size() * cfg.reps);

  parallel_for(gaps.size(), cfg.threads, [&](std::size_t job) {
    const std::size_t n_cal = cfg.cal_sizes[job / cfg.reps];
    SeededRng rng(cfg.seed, job);
    const double lambda = oracle_threshold(model, ell, n_cal, grid, rng);
    const OraclePredictor predictor(model, lambda, kOracleSupport);

    double realized;
    if (d == 1) {
      // X ~ Uniform[0,1]: the expected length is a 1-d integral, so use
      // quadrature instead of a test sample; this keeps the measured gap
      // free of test noise, which matters for the slope fit.
      auto len_at = [&](double x) {
        return predictor.predict(std::span<const double>(&x, 1)).length();
      };
      realized = trapezoid(len_at, 0.0, 1.0, 2000);
    } else {
      const UnlabeledDataset test = model.sample_features(cfg.n_test, rng);
      std::vector<double> lengths(test.size());
      for (std::size_t i = 0; i < test.size(); ++i)
        lengths[i] = predictor.predict(test.x(i)).length();
      realized = mean(lengths);
    }
    gaps[job] = std::fabs(realized - ell);
  });

  std::vector<double> log_n;
  std::vector<double> log_gap;
  for (std::size_t ni = 0; ni < cfg.cal_sizes.size(); ++ni) {
    const std::size_t n_cal = cfg.cal_sizes[ni];
    std::vector<double> cell(cfg.reps);
    for (std::size_t r = 0; r < cfg.reps; ++r) {
      cell[r] = gaps[ni * cfg.reps + r];
      report.rows.push_back(
          RepRow{d, ell, n_cal, r, "abs_length_gap", cell[r]});
    }
    append_aggregate(report, d, ell, n_cal, "oracle", "abs_length_gap", cell);
    log_n.push_back(std::log(static_cast<double>(n_cal)));
    log_gap.push_back(std::log(mean(cell)));
  }
  if (log_n.size() >= 2) {
    const LinearFit fit = fit_line(log_n, log_gap);
    report.aggregates.push_back(AggRow{d, ell, 0, "fit", "loglog_slope",
                                       fit.slope, 0.0, cfg.reps});
  }
  return report;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  if (cfg.experiment == "table1") return run_oracle_table(cfg);
  if (cfg.experiment == "table2") return run_plugin_table(cfg);
  if (cfg.experiment == "compare") return run_comparison(cfg);
  if (cfg.experiment == "length-scaling") return run_length_scaling(cfg);
  throw std::invalid_argument("run_experiment: unknown experiment '" +
                              cfg.experiment + "'");
}

void write_report_files(const ExperimentReport& report,
                        const std::string& out_path) {
  std::ofstream long_file(out_path, std::ios::binary);
  if (!long_file)
    throw std::runtime_error("cannot open output file '" + out_path + "'");
  report.write_long_csv(long_file);
  if (!long_file.flush())
    throw std::runtime_error("failed writing '" + out_path + "'");

  std::string agg_path = out_path;
  const std::string suffix = ".csv";
  if (agg_path.size() >= suffix.size() &&
      agg_path.compare(agg_path.size() - suffix.size(), suffix.size(),
                       suffix) == 0)
    agg_path.resize(agg_path.size() - suffix.size());
  agg_path += "_agg.csv";
  std::ofstream agg_file(agg_path, std::ios::binary);
  if (!agg_file)
    throw std::runtime_error("cannot open output file '" + agg_path + "'");
  report.write_agg_csv(agg_file);
  if (!agg_file.flush())
    throw std::runtime_error("failed writing '" + agg_path + "'");
}

}  // namespace lcpi
