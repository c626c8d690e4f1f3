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

// Command-line front end: the paper-style studies (table1, table2,
// compare, length-scaling), synthetic data generation, and one-shot
// prediction on CSV data. Exit codes: 0 success, 2 invalid configuration,
// 3 runtime failure.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lcpi/calibration.hpp"
#include "lcpi/csv.hpp"
#include "lcpi/dataset.hpp"
#include "lcpi/density.hpp"
#include "lcpi/experiments.hpp"
#include "lcpi/grid.hpp"
#include "lcpi/knn.hpp"
#include "lcpi/predictor.hpp"
#include "lcpi/synthetic.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadConfig = 2;
constexpr int kExitRuntime = 3;

struct PredictArgs {
  std::string train_path;
  std::string calib_path;
  std::string test_path;
  std::string out_path;
  double ell = 0.0;
  double beta = 0.0;
  std::size_t k = 0;
  std::size_t grid_size = 0;
  double u = 1e-5;
  std::string s_mode = "practice";
  std::uint64_t seed = 42;
};

lcpi::UnlabeledDataset load_features(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  const lcpi::NumericCsv csv = lcpi::read_numeric_csv(in);
  const bool labeled = !csv.columns.empty() && csv.columns.back() == "y";
  const std::size_t dim = csv.columns.size() - (labeled ? 1 : 0);
  if (dim == 0) throw std::runtime_error("'" + path + "' has no features");
  lcpi::UnlabeledDataset data(dim);
  for (const auto& row : csv.rows)
    data.add(std::span<const double>(row.data(), dim));
  return data;
}

lcpi::LabeledDataset load_labeled(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return lcpi::LabeledDataset::read_csv(in);
}

int run_simulate(std::size_t d, std::size_t n, std::uint64_t seed,
                 const std::string& out_path) {
  const lcpi::GaussianModel model = lcpi::paper_model(d);
  lcpi::SeededRng rng(seed, 0);
  const lcpi::LabeledDataset data = model.sample(n, rng);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + out_path + "'");
  data.write_csv(out);
  return kExitOk;
}

int run_predict(const PredictArgs& args) {
  const bool length_mode = args.ell > 0.0;
  const lcpi::LabeledDataset train = load_labeled(args.train_path);
  const std::size_t k =
      args.k != 0 ? args.k
                  : lcpi::default_neighbor_count(train.size(), train.dim());

  const lcpi::UnlabeledDataset calib_features = load_features(args.calib_path);
  const double support =
      args.s_mode == "practice"
          ? lcpi::practice_support(train.labels())
          : lcpi::theory_support(train.size(), calib_features.size());

  auto estimator = std::make_shared<lcpi::KnnEstimator>(train, k);
  const lcpi::PluginDensity density =
      lcpi::knn_density(estimator, support, args.u);
  lcpi::SeededRng rng(args.seed, 0);

  double threshold;
  if (length_mode) {
    if (args.ell > 2.0 * support)
      std::cerr << "warning: requested length " << args.ell
                << " exceeds the representable support 2s = " << 2.0 * support
                << "\n";
    const std::size_t m = args.grid_size != 0
                              ? args.grid_size
                              : lcpi::default_grid_size(calib_features.size());
    const lcpi::Grid grid(support, m);
    const lcpi::LengthCurve curve =
        lcpi::calibrate_length(density, calib_features, grid, rng);
    threshold = curve.inverse(args.ell);
  } else {
    const lcpi::LabeledDataset calib = load_labeled(args.calib_path);
    const lcpi::CoverageCurve curve =
        lcpi::calibrate_coverage(density, calib, rng);
    threshold = curve.threshold(args.beta);
  }

  std::ifstream test_in(args.test_path);
  if (!test_in)
    throw std::runtime_error("cannot open '" + args.test_path + "'");
  const lcpi::NumericCsv test_csv = lcpi::read_numeric_csv(test_in);
  const bool test_labeled =
      !test_csv.columns.empty() && test_csv.columns.back() == "y";
  const std::size_t dim = test_csv.columns.size() - (test_labeled ? 1 : 0);
  if (dim != train.dim())
    throw std::invalid_argument("test/train dimension mismatch");
  lcpi::UnlabeledDataset test_features(dim);
  std::vector<double> test_labels;
  for (const auto& row : test_csv.rows) {
    test_features.add(std::span<const double>(row.data(), dim));
    if (test_labeled) test_labels.push_back(row[dim]);
  }

  std::vector<lcpi::PredictionInterval> intervals;
  intervals.reserve(test_features.size());
  for (std::size_t i = 0; i < test_features.size(); ++i) {
    const double zeta = rng.uniform(0.0, density.perturbation_scale());
    const lcpi::DensitySlice slice = density.at(test_features.x(i));
    intervals.push_back(lcpi::superlevel_interval(
        slice.mean, slice.sd * slice.sd, threshold - zeta, support));
  }

  std::ofstream out(args.out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + args.out_path + "'");
  lcpi::write_predictions_csv(out, test_features, intervals,
                              test_labeled ? &test_labels : nullptr);
  return kExitOk;
}

void add_shared_options(CLI::App* cmd, lcpi::ExperimentConfig& cfg,
                        std::string& s_mode) {
  cmd->add_option("--n", cfg.n_train, "Training sample size");
  cmd->add_option("--M", cfg.grid_size, "Grid size (0 = protocol default)");
  cmd->add_option("--T", cfg.n_test, "Test sample size");
  cmd->add_option("--reps", cfg.reps, "Repetitions per cell");
  cmd->add_option("--k", cfg.k, "Neighbor count (0 = auto rule)");
  cmd->add_option("--u", cfg.u, "Randomization width");
  cmd->add_option("--s-mode", s_mode, "Support rule: theory|practice")
      ->check(CLI::IsMember({"theory", "practice"}));
  cmd->add_option("--seed", cfg.seed, "Base RNG seed");
  cmd->add_option("--threads", cfg.threads, "Worker threads");
  cmd->add_option("--out", cfg.out_path, "Output CSV path")->required();
}

int run_configured(lcpi::ExperimentConfig& cfg, const std::string& s_mode) {
  cfg.s_mode = s_mode == "theory" ? lcpi::SupportMode::kTheory
                                  : lcpi::SupportMode::kPractice;
  cfg.validate();
  const lcpi::ExperimentReport report = lcpi::run_experiment(cfg);
  lcpi::write_report_files(report, cfg.out_path);
  std::cout << report.experiment << ": " << report.rows.size()
            << " rows -> " << cfg.out_path << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prediction intervals with a controlled expected length"};
  app.require_subcommand(1);

  lcpi::ExperimentConfig cfg;
  std::string s_mode = "practice";

  auto* table1 = app.add_subcommand(
      "table1", "Oracle study on the synthetic model");
  table1->add_option("--d", cfg.dims, "Feature dimensions");
  table1->add_option("--ell", cfg.lengths, "Requested expected lengths");
  table1->add_option("--N", cfg.n_cal, "Calibration sample size");
  add_shared_options(table1, cfg, s_mode);

  auto* table2 = app.add_subcommand(
      "table2", "Plug-in study with kNN estimators");
  table2->add_option("--d", cfg.dims, "Feature dimensions");
  table2->add_option("--ell", cfg.lengths, "Requested expected lengths");
  table2->add_option("--N", cfg.n_cal, "Calibration sample size");
  add_shared_options(table2, cfg, s_mode);

  std::vector<std::size_t> compare_sizes = {10,  30,  50,  70, 100,
                                            150, 200, 500, 1000};
  auto* compare = app.add_subcommand(
      "compare", "Length- vs coverage-calibrated predictors");
  compare->add_option("--d", cfg.dims, "Feature dimension");
  compare->add_option("--ell", cfg.lengths, "Requested expected length");
  compare->add_option("--beta", cfg.beta, "Target error rate");
  compare->add_option("--N", compare_sizes, "Calibration size sweep");
  add_shared_options(compare, cfg, s_mode);

  std::vector<std::size_t> scaling_sizes = {25, 100, 400, 1600};
  auto* scaling = app.add_subcommand(
      "length-scaling", "Length-control error vs calibration size");
  scaling->add_option("--d", cfg.dims, "Feature dimension");
  scaling->add_option("--ell", cfg.lengths, "Requested expected length");
  scaling->add_option("--N", scaling_sizes, "Calibration size sweep");
  add_shared_options(scaling, cfg, s_mode);

  std::size_t sim_d = 1;
  std::size_t sim_n = 1000;
  std::uint64_t sim_seed = 42;
  std::string sim_out;
  auto* simulate =
      app.add_subcommand("simulate", "Sample the synthetic model to CSV");
  simulate->add_option("--d", sim_d, "Feature dimension");
  simulate->add_option("--n", sim_n, "Sample size");
  simulate->add_option("--seed", sim_seed, "RNG seed");
  simulate->add_option("--out", sim_out, "Output CSV path")->required();

  PredictArgs pargs;
  auto* predict = app.add_subcommand(
      "predict", "Fit, calibrate and predict intervals on CSV data");
  predict->add_option("--train", pargs.train_path, "Training CSV (x1..xd,y)")
      ->required();
  predict->add_option("--calib", pargs.calib_path, "Calibration CSV")
      ->required();
  predict->add_option("--test", pargs.test_path, "Test CSV")->required();
  predict->add_option("--ell", pargs.ell, "Requested expected length");
  predict->add_option("--beta", pargs.beta, "Target error rate");
  predict->add_option("--k", pargs.k, "Neighbor count (0 = auto)");
  predict->add_option("--M", pargs.grid_size, "Grid size (0 = default)");
  predict->add_option("--u", pargs.u, "Randomization width");
  predict->add_option("--s-mode", pargs.s_mode, "Support rule")
      ->check(CLI::IsMember({"theory", "practice"}));
  predict->add_option("--seed", pargs.seed, "RNG seed");
  predict->add_option("--out", pargs.out_path, "Output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadConfig;
  }

  try {
    if (table1->parsed()) {
      cfg.experiment = "table1";
      if (!table1->count("--N")) cfg.n_cal = 1000;
      return run_configured(cfg, s_mode);
    }
    if (table2->parsed()) {
      cfg.experiment = "table2";
      return run_configured(cfg, s_mode);
    }
    if (compare->parsed()) {
      cfg.experiment = "compare";
      cfg.cal_sizes = compare_sizes;
      if (!compare->count("--d")) cfg.dims = {5};
      if (!compare->count("--ell")) cfg.lengths = {2.0};
      if (!compare->count("--reps")) cfg.reps = 20;
      return run_configured(cfg, s_mode);
    }
    if (scaling->parsed()) {
      cfg.experiment = "length-scaling";
      cfg.cal_sizes = scaling_sizes;
      if (!scaling->count("--d")) cfg.dims = {1};
      if (!scaling->count("--ell")) cfg.lengths = {1.0};
      if (!scaling->count("--reps")) cfg.reps = 200;
      return run_configured(cfg, s_mode);
    }
    if (simulate->parsed()) return run_simulate(sim_d, sim_n, sim_seed, sim_out);
    if (predict->parsed()) {
      if ((pargs.ell > 0.0) == (pargs.beta > 0.0))
        throw std::invalid_argument(
            "predict: set exactly one of --ell or --beta");
      return run_predict(pargs);
    }
    return kExitBadConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
