#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace wdlmp {

/// Weights captured at one iteration. Centralized runs store a 1 x N row of node
/// weights; diffusion runs store the N x N combination matrix.
struct WeightSnapshot {
  std::size_t iteration = 0;
  Eigen::MatrixXd weights;
};

struct WeightTrace {
  std::size_t stride = 1;
  std::vector<WeightSnapshot> snapshots;
};

/// Copies `weights` into the trace when iteration % stride == 0.
/// Throws wdlmp::Error if a row is not normalized within 1e-12.
void record(WeightTrace& trace, std::size_t iteration, const Eigen::MatrixXd& weights);

/// Element-wise mean of traces that share stride and snapshot iterations.
WeightTrace average_traces(std::span<const WeightTrace> traces);

/// Element-wise mean of equally shaped matrices.
Eigen::MatrixXd average_weights(std::span<const Eigen::MatrixXd> weights);

/// Ranks starting at 1; ties share their average rank.
std::vector<double> average_ranks(std::span<const double> values);

/// Spearman correlation between learned weights and per-node noise scale.
/// Needs at least 3 nodes; throws when either vector is constant or contains NaN.
double final_weight_noise_rank_correlation(std::span<const double> final_weights,
                                           std::span<const double> noise_scale);

}  // namespace wdlmp
