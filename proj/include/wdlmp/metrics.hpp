#pragma once

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "wdlmp/algorithms.hpp"
#include "wdlmp/signal.hpp"

namespace wdlmp {

/// Lowest reported deviation in dB.
inline constexpr double kMsdFloorDb = -300.0;

/// 10 log10(x) with the result floored at kMsdFloorDb.
double power_to_db(double squared_deviation);

/// ||w - w_o||^2. Throws on dimension mismatch.
double squared_deviation(const Eigen::VectorXd& w, const GroundTruth& truth);

/// 20 log10(max(||w - w_o||, 1e-15)).
double msd_db(const Eigen::VectorXd& w, const GroundTruth& truth);

/// Mean over nodes of ||w_k - w_o||^2 (linear).
double network_squared_deviation(const DiffusionState& states, const GroundTruth& truth);

/// 10 log10 of network_squared_deviation, floored.
double network_msd_db(const DiffusionState& states, const GroundTruth& truth);

/// Trial-averaged learning curve.
struct LearningCurve {
  std::string algorithm;
  std::vector<double> msd_linear;  // mean squared deviation per iteration
  std::vector<double> msd_db;
  std::size_t trials_used = 0;
  std::size_t diverged_trials = 0;
};

/// One trial's per-iteration squared deviations. Diverged trials are skipped when averaging.
struct TrialCurve {
  std::vector<double> squared_deviation;
  bool diverged = false;
};

/// Averages the usable trials in the linear domain, in index order, then converts to dB.
/// Throws wdlmp::Error if no trial is usable or lengths differ.
LearningCurve average_curves(std::span<const TrialCurve> trials, std::string algorithm);

/// dB value of the mean linear MSD over the trailing `fraction` of iterations.
double steady_state_msd_db(const LearningCurve& curve, double fraction = 0.1);

}  // namespace wdlmp
