#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace wdlmp {

using Edge = std::pair<std::size_t, std::size_t>;

/// Undirected sensor graph. Every node is a member of its own neighborhood.
class NetworkTopology {
 public:
  /// Throws TopologyError for out-of-range indices or a disconnected graph.
  NetworkTopology(std::size_t num_nodes, const std::vector<Edge>& edges);

  std::size_t num_nodes() const noexcept { return num_nodes_; }
  bool adjacent(std::size_t k, std::size_t l) const;

  /// Sorted ascending, always contains k.
  const std::vector<std::size_t>& neighbors(std::size_t k) const;

  /// Edges (k < l) in ascending order, self-loops excluded.
  std::vector<Edge> edges() const;

 private:
  std::size_t num_nodes_;
  std::vector<std::vector<bool>> adjacency_;
  std::vector<std::vector<std::size_t>> neighborhoods_;
};

/// Row-stochastic N x N matrix; row k mixes node k's neighborhood.
class CombinationMatrix {
 public:
  /// Validates row sums (1e-12), non-negativity and support against the topology.
  CombinationMatrix(const NetworkTopology& topology, Eigen::MatrixXd weights);

  const Eigen::MatrixXd& weights() const noexcept { return weights_; }
  double operator()(std::size_t k, std::size_t l) const { return weights_(k, l); }
  std::size_t size() const noexcept { return static_cast<std::size_t>(weights_.rows()); }

 private:
  Eigen::MatrixXd weights_;
};

/// Equal weights 1/|N_k| over each neighborhood.
CombinationMatrix uniform_combination(const NetworkTopology& topology);

/// 10-node ring with chords (0,4), (2,7), (5,9).
NetworkTopology default_topology();

}  // namespace wdlmp
