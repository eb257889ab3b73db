#include "wdlmp/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wdlmp/errors.hpp"
#include "wdlmp/weighting.hpp"

namespace wdlmp {

void LmpParams::validate() const {
  if (!(p > 1.0 && p <= 2.0)) throw Error("p out of range (1, 2]");
  if (!(mu > 0.0) || !std::isfinite(mu)) throw Error("mu must be positive");
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) throw Error("epsilon must be non-negative");
}

double lmp_influence(double e, double p, double epsilon) {
  if (p == 2.0) return e;
  if (e == 0.0) return 0.0;
  return std::pow(std::abs(e) + epsilon, p - 2.0) * e;
}

CentralState CentralState::zeros(std::size_t num_nodes, std::size_t dimension) {
  return {Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dimension)),
          Eigen::VectorXd::Zero(static_cast<Eigen::Index>(num_nodes))};
}

Eigen::VectorXd central_node_weights(const CentralState& state, bool weighted) {
  if (weighted) return softmax(state.node_logits);
  return Eigen::VectorXd::Ones(state.node_logits.size());
}

CentralState centralized_step(const CentralState& state, const MeasurementBatch& batch, const LmpParams& params,
                              double mu_a, bool weighted) {
  const auto n = static_cast<std::size_t>(state.node_logits.size());
  if (batch.size() != n) throw Error("centralized step needs one measurement per node");

  const Eigen::VectorXd alpha = central_node_weights(state, weighted);
  Eigen::VectorXd errors(n);
  CentralState next = state;
  for (std::size_t k = 0; k < n; ++k) {
    const auto& m = batch[k];
    const auto ki = static_cast<Eigen::Index>(k);
    errors(ki) = m.d - state.w.dot(m.u);
    next.w += params.mu * alpha(ki) * lmp_influence(errors(ki), params.p, params.epsilon) * m.u;
  }
  if (!next.w.allFinite()) throw DivergenceError("centralized estimate became non-finite");

  if (weighted) {
    Eigen::VectorXd abs_p(n);
    Eigen::VectorXd sq_norms(n);
    for (std::size_t k = 0; k < n; ++k) {
      const auto ki = static_cast<Eigen::Index>(k);
      abs_p(ki) = std::pow(std::abs(errors(ki)), params.p);
      sq_norms(ki) = batch[k].u.squaredNorm();
    }
    next.node_logits = update_global_logits(state.node_logits, abs_p, sq_norms, params.mu, mu_a);
  }
  return next;
}

DiffusionState make_diffusion_state(const NetworkTopology& topology, std::size_t dimension) {
  const auto m = static_cast<Eigen::Index>(dimension);
  DiffusionState states(topology.num_nodes());
  for (std::size_t k = 0; k < states.size(); ++k) {
    states[k].w = Eigen::VectorXd::Zero(m);
    states[k].phi = Eigen::VectorXd::Zero(m);
    states[k].psi = Eigen::VectorXd::Zero(m);
    states[k].combo_logits = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(topology.neighbors(k).size()));
  }
  return states;
}

Eigen::VectorXd neighborhood_row(const NetworkTopology& topology, const CombinationMatrix& matrix, std::size_t k) {
  const auto& hood = topology.neighbors(k);
  Eigen::VectorXd row(static_cast<Eigen::Index>(hood.size()));
  for (std::size_t j = 0; j < hood.size(); ++j) row(static_cast<Eigen::Index>(j)) = matrix(k, hood[j]);
  return row;
}

CombinationMatrix softmax_combination(const NetworkTopology& topology, const DiffusionState& states) {
  const auto n = topology.num_nodes();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& hood = topology.neighbors(k);
    const Eigen::VectorXd row = softmax(states[k].combo_logits);
    for (std::size_t j = 0; j < hood.size(); ++j) c(k, hood[j]) = row(static_cast<Eigen::Index>(j));
  }
  return CombinationMatrix(topology, std::move(c));
}

void diffusion_combine1(DiffusionState& states, const NetworkTopology& topology, const CombinationMatrix& a1) {
  for (std::size_t k = 0; k < states.size(); ++k) {
    auto& phi = states[k].phi;
    phi.setZero(states[k].w.size());
    for (auto l : topology.neighbors(k)) phi += a1(k, l) * states[l].w;
  }
}

double diffusion_adapt(NodeState& state, std::size_t k, const NetworkTopology& topology,
                       const MeasurementBatch& batch, const Eigen::VectorXd& c_row, const LmpParams& params) {
  const auto& hood = topology.neighbors(k);
  if (static_cast<std::size_t>(c_row.size()) != hood.size()) throw Error("adapt: combination row length mismatch");

  double own_error = 0.0;
  state.psi = state.phi;
  for (std::size_t j = 0; j < hood.size(); ++j) {
    const auto& m = batch[hood[j]];
    const double e = m.d - state.phi.dot(m.u);
    if (hood[j] == k) own_error = e;
    state.psi += params.mu * c_row(static_cast<Eigen::Index>(j)) * lmp_influence(e, params.p, params.epsilon) * m.u;
  }
  if (!state.psi.allFinite()) throw DivergenceError("node " + std::to_string(k) + " adaptation became non-finite");
  return own_error;
}

void diffusion_combine2(DiffusionState& states, const NetworkTopology& topology, const CombinationMatrix& a2) {
  for (std::size_t k = 0; k < states.size(); ++k) {
    auto& w = states[k].w;
    w.setZero(states[k].psi.size());
    for (auto l : topology.neighbors(k)) w += a2(k, l) * states[l].psi;
  }
}

void plain_diffusion_iteration(DiffusionState& states, const NetworkTopology& topology, const MeasurementBatch& batch,
                               const LmpParams& params, const CombinationMatrix& fixed) {
  if (batch.size() != states.size()) throw Error("diffusion iteration needs one measurement per node");
  diffusion_combine1(states, topology, fixed);
  for (std::size_t k = 0; k < states.size(); ++k) {
    diffusion_adapt(states[k], k, topology, batch, neighborhood_row(topology, fixed, k), params);
  }
  diffusion_combine2(states, topology, fixed);
}

void weighted_diffusion_iteration(DiffusionState& states, const NetworkTopology& topology,
                                  const MeasurementBatch& batch, const LmpParams& params, double mu_a) {
  if (batch.size() != states.size()) throw Error("diffusion iteration needs one measurement per node");
  const CombinationMatrix c = softmax_combination(topology, states);
  diffusion_combine1(states, topology, c);
  for (std::size_t k = 0; k < states.size(); ++k) {
    diffusion_adapt(states[k], k, topology, batch, neighborhood_row(topology, c, k), params);
  }
  diffusion_combine2(states, topology, c);

  // New logits depend only on this iteration's psi and w, so the node loop order is irrelevant.
  std::vector<Eigen::VectorXd> next_logits(states.size());
  for (std::size_t k = 0; k < states.size(); ++k) {
    const auto& hood = topology.neighbors(k);
    const auto& u = batch[k].u;
    const double e_k = batch[k].d - states[k].w.dot(u);
    Eigen::VectorXd inner(static_cast<Eigen::Index>(hood.size()));
    for (std::size_t j = 0; j < hood.size(); ++j) inner(static_cast<Eigen::Index>(j)) = states[hood[j]].psi.dot(u);
    next_logits[k] = update_local_logits(states[k].combo_logits, e_k, inner, mu_a);
  }
  for (std::size_t k = 0; k < states.size(); ++k) states[k].combo_logits = std::move(next_logits[k]);
}

// ---------------------------------------------------------------------------

std::string_view algorithm_name(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::CentralizedLmp: return "centralized-lmp";
    case Algorithm::CentralizedWlmp: return "centralized-wlmp";
    case Algorithm::DiffusionLmp: return "diffusion-lmp";
    case Algorithm::WeightedDiffusionLmp: return "weighted-diffusion-lmp";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
  for (auto a : kAllAlgorithms) {
    if (algorithm_name(a) == name) return a;
  }
  return std::nullopt;
}

bool is_centralized(Algorithm a) noexcept {
  return a == Algorithm::CentralizedLmp || a == Algorithm::CentralizedWlmp;
}

Estimator::Estimator(Algorithm algorithm, const NetworkTopology& topology, std::size_t dimension, LmpParams params,
                     double mu_a_global, double mu_a_local)
    : algorithm_(algorithm),
      topology_(&topology),
      params_(params),
      mu_a_(is_centralized(algorithm) ? mu_a_global : mu_a_local),
      state_(CentralState{}) {
  params_.validate();
  if (is_centralized(algorithm)) {
    state_ = CentralState::zeros(topology.num_nodes(), dimension);
  } else {
    state_ = make_diffusion_state(topology, dimension);
    if (algorithm == Algorithm::DiffusionLmp) fixed_ = uniform_combination(topology);
  }
}

void Estimator::step(const MeasurementBatch& batch) {
  switch (algorithm_) {
    case Algorithm::CentralizedLmp:
    case Algorithm::CentralizedWlmp: {
      auto& s = std::get<CentralState>(state_);
      s = centralized_step(s, batch, params_, mu_a_, algorithm_ == Algorithm::CentralizedWlmp);
      break;
    }
    case Algorithm::DiffusionLmp:
      plain_diffusion_iteration(std::get<DiffusionState>(state_), *topology_, batch, params_, *fixed_);
      break;
    case Algorithm::WeightedDiffusionLmp:
      weighted_diffusion_iteration(std::get<DiffusionState>(state_), *topology_, batch, params_, mu_a_);
      break;
  }
}

const Eigen::VectorXd& Estimator::estimate(std::size_t k) const {
  if (const auto* c = central()) return c->w;
  return std::get<DiffusionState>(state_).at(k).w;
}

Eigen::MatrixXd Estimator::current_weights() const {
  if (const auto* c = central()) {
    const Eigen::VectorXd alpha = central_node_weights(*c, algorithm_ == Algorithm::CentralizedWlmp);
    return (alpha / alpha.sum()).transpose();
  }
  if (fixed_) return fixed_->weights();
  return softmax_combination(*topology_, std::get<DiffusionState>(state_)).weights();
}

double Estimator::max_estimate_norm() const {
  if (const auto* c = central()) return c->w.norm();
  double top = 0.0;
  for (const auto& s : std::get<DiffusionState>(state_)) {
    const double n = s.w.norm();
    if (!std::isfinite(n)) return std::numeric_limits<double>::infinity();
    top = std::max(top, n);
  }
  return top;
}

}  // namespace wdlmp
