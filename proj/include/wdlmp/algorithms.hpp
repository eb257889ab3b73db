#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "wdlmp/signal.hpp"
#include "wdlmp/topology.hpp"

namespace wdlmp {

struct LmpParams {
  double p = 1.2;          // (1, 2]
  double mu = 0.005;       // > 0
  double epsilon = 1e-8;   // >= 0, keeps |e|^(p-2) finite near e = 0

  /// Throws wdlmp::Error when out of range.
  void validate() const;
};

/// (|e| + epsilon)^(p-2) * e, and exactly e when p == 2.
double lmp_influence(double e, double p, double epsilon);

// ---------------------------------------------------------------------------
// Centralized estimators

struct CentralState {
  Eigen::VectorXd w;
  Eigen::VectorXd node_logits;  // one per node; only evolves in the weighted variant

  static CentralState zeros(std::size_t num_nodes, std::size_t dimension);
};

/// Node weights used by a centralized step: softmax(node_logits) for the weighted cost,
/// all ones for the plain sum-of-node-costs objective.
Eigen::VectorXd central_node_weights(const CentralState& state, bool weighted);

/// One steepest-descent step over every node's measurement:
///   w <- w + sum_k mu * alpha_k * f(e_k) * u_k,   e_k = d_k - w^T u_k
/// In the weighted variant the node logits are then moved with update_global_logits
/// using the same errors and regressors. Throws DivergenceError on a non-finite estimate.
CentralState centralized_step(const CentralState& state, const MeasurementBatch& batch, const LmpParams& params,
                              double mu_a, bool weighted);

// ---------------------------------------------------------------------------
// Diffusion estimators (combine, adapt, combine)

struct NodeState {
  Eigen::VectorXd w;             // omega_{k,n}
  Eigen::VectorXd phi;           // first combination
  Eigen::VectorXd psi;           // after local adaptation
  Eigen::VectorXd combo_logits;  // over neighbors(k), ascending order
};

using DiffusionState = std::vector<NodeState>;

/// All estimates zero, all combination logits zero (uniform weights).
DiffusionState make_diffusion_state(const NetworkTopology& topology, std::size_t dimension);

/// Row k of `matrix` restricted to neighbors(k).
Eigen::VectorXd neighborhood_row(const NetworkTopology& topology, const CombinationMatrix& matrix, std::size_t k);

/// Combination matrix whose row k is softmax(states[k].combo_logits).
CombinationMatrix softmax_combination(const NetworkTopology& topology, const DiffusionState& states);

/// phi_k = sum_l a1_kl w_l, reading every node's previous w before writing.
void diffusion_combine1(DiffusionState& states, const NetworkTopology& topology, const CombinationMatrix& a1);

/// psi_k = phi_k + mu * sum_{l in N_k} c_kl f(e_l) u_l with e_l = d_l - phi_k^T u_l.
/// `c_row` is ordered like neighbors(k). Returns node k's own error d_k - phi_k^T u_k.
double diffusion_adapt(NodeState& state, std::size_t k, const NetworkTopology& topology,
                       const MeasurementBatch& batch, const Eigen::VectorXd& c_row, const LmpParams& params);

/// w_k = sum_l a2_kl psi_l, reading every node's psi.
void diffusion_combine2(DiffusionState& states, const NetworkTopology& topology, const CombinationMatrix& a2);

/// Fixed-weight diffusion LMP iteration with A1 = A2 = C = `fixed`.
void plain_diffusion_iteration(DiffusionState& states, const NetworkTopology& topology, const MeasurementBatch& batch,
                               const LmpParams& params, const CombinationMatrix& fixed);

/// Weighted diffusion LMP iteration. A1, A2 and C all come from the current softmax
/// logits; after the second combination every node moves its logits with
/// update_local_logits, using e_k = d_k - w_k^T u_k and psi_l^T u_k.
void weighted_diffusion_iteration(DiffusionState& states, const NetworkTopology& topology,
                                  const MeasurementBatch& batch, const LmpParams& params, double mu_a);

// ---------------------------------------------------------------------------

enum class Algorithm : int {
  CentralizedLmp = 0,
  CentralizedWlmp = 1,
  DiffusionLmp = 2,
  WeightedDiffusionLmp = 3,
};

inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::CentralizedLmp, Algorithm::CentralizedWlmp,
                                               Algorithm::DiffusionLmp, Algorithm::WeightedDiffusionLmp};

std::string_view algorithm_name(Algorithm a) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;
bool is_centralized(Algorithm a) noexcept;

/// Runs any of the four estimators behind one interface.
class Estimator {
 public:
  Estimator(Algorithm algorithm, const NetworkTopology& topology, std::size_t dimension, LmpParams params,
            double mu_a_global, double mu_a_local);

  void step(const MeasurementBatch& batch);

  Algorithm algorithm() const noexcept { return algorithm_; }
  std::size_t num_nodes() const noexcept { return topology_->num_nodes(); }

  /// Node k's current estimate (the shared estimate for centralized variants).
  const Eigen::VectorXd& estimate(std::size_t k) const;

  /// Centralized: 1 x N node weights (normalized to sum to one for the plain variant).
  /// Diffusion: N x N combination matrix.
  Eigen::MatrixXd current_weights() const;

  /// Largest estimate norm over nodes.
  double max_estimate_norm() const;

  const CentralState* central() const noexcept { return std::get_if<CentralState>(&state_); }
  const DiffusionState* diffusion() const noexcept { return std::get_if<DiffusionState>(&state_); }

 private:
  Algorithm algorithm_;
  const NetworkTopology* topology_;
  LmpParams params_;
  double mu_a_;
  std::optional<CombinationMatrix> fixed_;
  std::variant<CentralState, DiffusionState> state_;
};

}  // namespace wdlmp
