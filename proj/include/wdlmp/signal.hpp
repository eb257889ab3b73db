#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "wdlmp/random.hpp"

namespace wdlmp {

struct GroundTruth {
  Eigen::VectorXd w_o;

  std::size_t dimension() const noexcept { return static_cast<std::size_t>(w_o.size()); }
};

/// d = w_o^T u + v, observed by `node` at iteration `time`.
struct Measurement {
  double d = 0.0;
  Eigen::VectorXd u;
  std::size_t node = 0;
  std::size_t time = 0;
};

/// One measurement per node, indexed by node.
using MeasurementBatch = std::vector<Measurement>;

/// M i.i.d. standard normal entries.
GroundTruth generate_ground_truth(std::size_t dimension, Rng& rng);

/// M i.i.d. N(0, sigma_u^2) entries.
Eigen::VectorXd generate_regressor(std::size_t dimension, double sigma_u, Rng& rng);

/// Throws wdlmp::Error on dimension mismatch.
double measure(const GroundTruth& truth, const Eigen::VectorXd& u, double v);

}  // namespace wdlmp
