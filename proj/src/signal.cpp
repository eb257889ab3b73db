#include "wdlmp/signal.hpp"

#include "wdlmp/errors.hpp"

namespace wdlmp {

GroundTruth generate_ground_truth(std::size_t dimension, Rng& rng) {
  if (dimension == 0) throw Error("parameter dimension must be at least 1");
  std::normal_distribution<double> normal(0.0, 1.0);
  GroundTruth truth{Eigen::VectorXd(dimension)};
  for (auto& x : truth.w_o) x = normal(rng);
  return truth;
}

Eigen::VectorXd generate_regressor(std::size_t dimension, double sigma_u, Rng& rng) {
  if (dimension == 0) throw Error("parameter dimension must be at least 1");
  if (!(sigma_u > 0.0)) throw Error("sigma_u must be positive");
  std::normal_distribution<double> normal(0.0, sigma_u);
  Eigen::VectorXd u(dimension);
  for (auto& x : u) x = normal(rng);
  return u;
}

double measure(const GroundTruth& truth, const Eigen::VectorXd& u, double v) {
  if (u.size() != truth.w_o.size()) throw Error("regressor dimension does not match ground truth");
  return truth.w_o.dot(u) + v;
}

}  // namespace wdlmp
