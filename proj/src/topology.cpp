#include "wdlmp/topology.hpp"

#include <cmath>
#include <queue>
#include <string>

#include "wdlmp/errors.hpp"

namespace wdlmp {

NetworkTopology::NetworkTopology(std::size_t num_nodes, const std::vector<Edge>& edges)
    : num_nodes_(num_nodes), adjacency_(num_nodes, std::vector<bool>(num_nodes, false)) {
  if (num_nodes == 0) throw TopologyError("topology needs at least one node");
  for (std::size_t k = 0; k < num_nodes; ++k) adjacency_[k][k] = true;
  for (const auto& [a, b] : edges) {
    if (a >= num_nodes || b >= num_nodes) {
      throw TopologyError("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                          ") references a node outside [0, " + std::to_string(num_nodes) + ")");
    }
    adjacency_[a][b] = true;
    adjacency_[b][a] = true;
  }

  // BFS from node 0
  std::vector<bool> seen(num_nodes, false);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const auto k = frontier.front();
    frontier.pop();
    for (std::size_t l = 0; l < num_nodes; ++l) {
      if (adjacency_[k][l] && !seen[l]) {
        seen[l] = true;
        ++reached;
        frontier.push(l);
      }
    }
  }
  if (reached != num_nodes) throw TopologyError("disconnected topology");

  neighborhoods_.resize(num_nodes);
  for (std::size_t k = 0; k < num_nodes; ++k) {
    for (std::size_t l = 0; l < num_nodes; ++l) {
      if (adjacency_[k][l]) neighborhoods_[k].push_back(l);
    }
  }
}

bool NetworkTopology::adjacent(std::size_t k, std::size_t l) const {
  return adjacency_.at(k).at(l);
}

const std::vector<std::size_t>& NetworkTopology::neighbors(std::size_t k) const {
  if (k >= num_nodes_) throw TopologyError("node index " + std::to_string(k) + " out of range");
  return neighborhoods_[k];
}

std::vector<Edge> NetworkTopology::edges() const {
  std::vector<Edge> out;
  for (std::size_t k = 0; k < num_nodes_; ++k) {
    for (std::size_t l = k + 1; l < num_nodes_; ++l) {
      if (adjacency_[k][l]) out.emplace_back(k, l);
    }
  }
  return out;
}

CombinationMatrix::CombinationMatrix(const NetworkTopology& topology, Eigen::MatrixXd weights)
    : weights_(std::move(weights)) {
  const auto n = topology.num_nodes();
  if (static_cast<std::size_t>(weights_.rows()) != n || static_cast<std::size_t>(weights_.cols()) != n) {
    throw TopologyError("combination matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  for (std::size_t k = 0; k < n; ++k) {
    double row_sum = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
      const double w = weights_(k, l);
      if (!(w >= 0.0)) throw TopologyError("combination weights must be non-negative");
      if (w != 0.0 && !topology.adjacent(k, l)) {
        throw TopologyError("combination weight (" + std::to_string(k) + ", " + std::to_string(l) +
                            ") is outside the neighborhood");
      }
      row_sum += w;
    }
    if (std::abs(row_sum - 1.0) > 1e-12) {
      throw TopologyError("combination row " + std::to_string(k) + " does not sum to one");
    }
  }
}

CombinationMatrix uniform_combination(const NetworkTopology& topology) {
  const auto n = topology.num_nodes();
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& hood = topology.neighbors(k);
    const double share = 1.0 / static_cast<double>(hood.size());
    for (auto l : hood) w(k, l) = share;
  }
  return CombinationMatrix(topology, std::move(w));
}

NetworkTopology default_topology() {
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < 10; ++k) edges.emplace_back(k, (k + 1) % 10);
  edges.emplace_back(0, 4);
  edges.emplace_back(2, 7);
  edges.emplace_back(5, 9);
  return NetworkTopology(10, edges);
}

}  // namespace wdlmp
