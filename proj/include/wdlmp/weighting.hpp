#pragma once

#include <cstddef>

#include <Eigen/Dense>

namespace wdlmp {

/// Logits are kept inside [-kLogitLimit, kLogitLimit].
inline constexpr double kLogitLimit = 30.0;

/// exp(l_i) / sum_j exp(l_j), evaluated after subtracting max(l).
Eigen::VectorXd softmax(const Eigen::VectorXd& logits);

/// d w_i / d l_i = w_i (1 - w_i).
double softmax_self_derivative(const Eigen::VectorXd& weights, std::size_t i);

/// Keeps logits in range. If any entry left [-30, 30] the vector is first shifted
/// so its maximum is 0 (softmax-neutral), then clamped.
void bound_logits(Eigen::VectorXd& logits);

/// Logit vector paired with its softmax weights.
class SoftmaxWeights {
 public:
  explicit SoftmaxWeights(std::size_t size);
  explicit SoftmaxWeights(Eigen::VectorXd logits);

  const Eigen::VectorXd& logits() const noexcept { return logits_; }
  const Eigen::VectorXd& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(logits_.size()); }

  void set_logits(Eigen::VectorXd logits);

 private:
  Eigen::VectorXd logits_;
  Eigen::VectorXd weights_;
};

/// Node-weight recursion of the centralized weighted estimator:
///   a_k <- a_k - mu_a * mu * |e_k|^p * (u_k^T u_k) * b_k,   b_k = alpha_k (1 - alpha_k)
/// with b_k taken from the incoming logits. Throws DivergenceError on non-finite input.
Eigen::VectorXd update_global_logits(const Eigen::VectorXd& logits, const Eigen::VectorXd& errors_abs_p,
                                     const Eigen::VectorXd& regressor_sq_norms, double mu, double mu_a);

/// Combination-logit recursion for node k over its neighborhood:
///   a_kl <- a_kl + mu_a * e_k * (psi_l^T u_k) * d_kl,   d_kl = c_kl (1 - c_kl)
/// Throws DivergenceError on non-finite input.
Eigen::VectorXd update_local_logits(const Eigen::VectorXd& logits_row, double e_k,
                                    const Eigen::VectorXd& psi_inner, double mu_a);

}  // namespace wdlmp
