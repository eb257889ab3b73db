#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "wdlmp/config.hpp"
#include "wdlmp/metrics.hpp"
#include "wdlmp/weight_inspector.hpp"

namespace wdlmp {

/// Everything one trial of one algorithm produces.
struct TrialOutput {
  TrialCurve curve;
  std::vector<std::vector<double>> node_squared_deviation;  // [node][iteration], diffusion only
  WeightTrace trace;
  Eigen::MatrixXd final_weights;
  std::string diagnostic;  // set when the trial diverged
};

struct AlgorithmResult {
  Algorithm algorithm = Algorithm::CentralizedLmp;
  std::optional<LearningCurve> curve;            // empty when every trial diverged
  std::vector<std::vector<double>> node_msd_db;  // [node][iteration], diffusion only
  WeightTrace trace;                             // trial-averaged snapshots
  Eigen::MatrixXd final_weights;                 // trial-averaged last-iteration weights
  std::size_t trials_used = 0;
  std::size_t diverged_trials = 0;
  std::vector<std::string> diagnostics;          // one per diverged trial
  std::string error;                             // non-empty when no trial was usable
  double wall_seconds = 0.0;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<AlgorithmResult> algorithms;
  double wall_seconds = 0.0;
  std::size_t workers = 1;

  bool ok() const;
  const AlgorithmResult& at(Algorithm a) const;
};

struct RunOptions {
  std::size_t workers = 1;  // 0 selects std::thread::hardware_concurrency()
};

/// A trial is declared diverged once any estimate norm exceeds this.
double divergence_threshold(const GroundTruth& truth);

/// Runs one trial with streams derived from (master_seed, algorithm, trial, node, role).
TrialOutput simulate_trial(const ExperimentConfig& config, const NetworkTopology& topology, Algorithm algorithm,
                           std::size_t trial);

/// Runs every configured algorithm. Output depends only on the config, not on the
/// worker count.
ExperimentResult run_experiment(const ExperimentConfig& config, const RunOptions& options = {});

}  // namespace wdlmp
