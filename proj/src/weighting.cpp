#include "wdlmp/weighting.hpp"

#include <algorithm>
#include <cmath>

#include "wdlmp/errors.hpp"

namespace wdlmp {
namespace {

bool all_finite(const Eigen::VectorXd& v) { return v.allFinite(); }

}  // namespace

Eigen::VectorXd softmax(const Eigen::VectorXd& logits) {
  if (logits.size() == 0) return {};
  const double top = logits.maxCoeff();
  Eigen::VectorXd w = (logits.array() - top).exp().matrix();
  return w / w.sum();
}

double softmax_self_derivative(const Eigen::VectorXd& weights, std::size_t i) {
  const double w = weights(static_cast<Eigen::Index>(i));
  return w * (1.0 - w);
}

void bound_logits(Eigen::VectorXd& logits) {
  if (logits.size() == 0) return;
  const double lo = logits.minCoeff();
  const double hi = logits.maxCoeff();
  if (lo >= -kLogitLimit && hi <= kLogitLimit) return;
  logits.array() -= hi;
  logits = logits.cwiseMax(-kLogitLimit).cwiseMin(kLogitLimit);
}

SoftmaxWeights::SoftmaxWeights(std::size_t size)
    : SoftmaxWeights(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(size))) {}

SoftmaxWeights::SoftmaxWeights(Eigen::VectorXd logits) { set_logits(std::move(logits)); }

void SoftmaxWeights::set_logits(Eigen::VectorXd logits) {
  if (!all_finite(logits)) throw DivergenceError("non-finite softmax logits");
  bound_logits(logits);
  logits_ = std::move(logits);
  weights_ = softmax(logits_);
}

Eigen::VectorXd update_global_logits(const Eigen::VectorXd& logits, const Eigen::VectorXd& errors_abs_p,
                                     const Eigen::VectorXd& regressor_sq_norms, double mu, double mu_a) {
  if (errors_abs_p.size() != logits.size() || regressor_sq_norms.size() != logits.size()) {
    throw Error("global logit update: length mismatch");
  }
  if (!all_finite(logits) || !all_finite(errors_abs_p) || !all_finite(regressor_sq_norms) ||
      !std::isfinite(mu) || !std::isfinite(mu_a)) {
    throw DivergenceError("global logit update received non-finite input");
  }
  const Eigen::VectorXd alpha = softmax(logits);
  Eigen::VectorXd next = logits;
  for (Eigen::Index k = 0; k < logits.size(); ++k) {
    const double b = alpha(k) * (1.0 - alpha(k));
    next(k) -= mu_a * mu * errors_abs_p(k) * regressor_sq_norms(k) * b;
  }
  if (!all_finite(next)) throw DivergenceError("global logit update overflowed");
  bound_logits(next);
  return next;
}

Eigen::VectorXd update_local_logits(const Eigen::VectorXd& logits_row, double e_k,
                                    const Eigen::VectorXd& psi_inner, double mu_a) {
  if (psi_inner.size() != logits_row.size()) throw Error("local logit update: length mismatch");
  if (!all_finite(logits_row) || !all_finite(psi_inner) || !std::isfinite(e_k) || !std::isfinite(mu_a)) {
    throw DivergenceError("local logit update received non-finite input");
  }
  const Eigen::VectorXd c = softmax(logits_row);
  Eigen::VectorXd next = logits_row;
  for (Eigen::Index l = 0; l < logits_row.size(); ++l) {
    const double d = c(l) * (1.0 - c(l));
    next(l) += mu_a * e_k * psi_inner(l) * d;
  }
  if (!all_finite(next)) throw DivergenceError("local logit update overflowed");
  bound_logits(next);
  return next;
}

}  // namespace wdlmp
