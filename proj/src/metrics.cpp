#include "wdlmp/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "wdlmp/errors.hpp"

namespace wdlmp {

double power_to_db(double squared_deviation) {
  if (!(squared_deviation > 0.0)) return kMsdFloorDb;
  return std::max(10.0 * std::log10(squared_deviation), kMsdFloorDb);
}

double squared_deviation(const Eigen::VectorXd& w, const GroundTruth& truth) {
  if (w.size() != truth.w_o.size()) throw Error("estimate dimension does not match ground truth");
  return (w - truth.w_o).squaredNorm();
}

double msd_db(const Eigen::VectorXd& w, const GroundTruth& truth) {
  if (w.size() != truth.w_o.size()) throw Error("estimate dimension does not match ground truth");
  const double dist = std::max((w - truth.w_o).norm(), 1e-15);
  return std::max(20.0 * std::log10(dist), kMsdFloorDb);
}

double network_squared_deviation(const DiffusionState& states, const GroundTruth& truth) {
  if (states.empty()) throw Error("network deviation needs at least one node");
  double acc = 0.0;
  for (const auto& s : states) acc += squared_deviation(s.w, truth);
  return acc / static_cast<double>(states.size());
}

double network_msd_db(const DiffusionState& states, const GroundTruth& truth) {
  return power_to_db(network_squared_deviation(states, truth));
}

LearningCurve average_curves(std::span<const TrialCurve> trials, std::string algorithm) {
  LearningCurve out;
  out.algorithm = std::move(algorithm);
  std::size_t length = 0;
  bool have_length = false;
  for (const auto& t : trials) {
    if (t.diverged) {
      ++out.diverged_trials;
      continue;
    }
    if (!have_length) {
      length = t.squared_deviation.size();
      have_length = true;
      out.msd_linear.assign(length, 0.0);
    } else if (t.squared_deviation.size() != length) {
      throw Error("trial curves have different lengths");
    }
    for (std::size_t i = 0; i < length; ++i) out.msd_linear[i] += t.squared_deviation[i];
    ++out.trials_used;
  }
  if (out.trials_used == 0) throw Error("no usable trials for " + out.algorithm + " (all diverged)");

  const double scale = 1.0 / static_cast<double>(out.trials_used);
  out.msd_db.resize(length);
  for (std::size_t i = 0; i < length; ++i) {
    out.msd_linear[i] *= scale;
    out.msd_db[i] = power_to_db(out.msd_linear[i]);
  }
  return out;
}

double steady_state_msd_db(const LearningCurve& curve, double fraction) {
  const auto n = curve.msd_linear.size();
  if (n == 0) throw Error("empty learning curve");
  const auto tail = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n))));
  double acc = 0.0;
  for (std::size_t i = n - tail; i < n; ++i) acc += curve.msd_linear[i];
  return power_to_db(acc / static_cast<double>(tail));
}

}  // namespace wdlmp
