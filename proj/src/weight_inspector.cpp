#include "wdlmp/weight_inspector.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wdlmp/errors.hpp"

namespace wdlmp {

void record(WeightTrace& trace, std::size_t iteration, const Eigen::MatrixXd& weights) {
  if (trace.stride == 0) throw Error("snapshot stride must be positive");
  if (iteration % trace.stride != 0) return;
  for (Eigen::Index r = 0; r < weights.rows(); ++r) {
    if (std::abs(weights.row(r).sum() - 1.0) > 1e-12) throw Error("weight snapshot row is not normalized");
  }
  trace.snapshots.push_back({iteration, weights});
}

WeightTrace average_traces(std::span<const WeightTrace> traces) {
  if (traces.empty()) throw Error("no traces to average");
  WeightTrace out{traces.front().stride, traces.front().snapshots};
  for (std::size_t t = 1; t < traces.size(); ++t) {
    const auto& other = traces[t];
    if (other.snapshots.size() != out.snapshots.size()) throw Error("weight traces have different lengths");
    for (std::size_t s = 0; s < out.snapshots.size(); ++s) {
      if (other.snapshots[s].iteration != out.snapshots[s].iteration) throw Error("weight traces are misaligned");
      out.snapshots[s].weights += other.snapshots[s].weights;
    }
  }
  const double scale = 1.0 / static_cast<double>(traces.size());
  for (auto& s : out.snapshots) s.weights *= scale;
  return out;
}

Eigen::MatrixXd average_weights(std::span<const Eigen::MatrixXd> weights) {
  if (weights.empty()) throw Error("no weights to average");
  Eigen::MatrixXd acc = weights.front();
  for (std::size_t i = 1; i < weights.size(); ++i) acc += weights[i];
  return acc / static_cast<double>(weights.size());
}

std::vector<double> average_ranks(std::span<const double> values) {
  const auto n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });

  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t q = i; q <= j; ++q) ranks[order[q]] = rank;
    i = j + 1;
  }
  return ranks;
}

double final_weight_noise_rank_correlation(std::span<const double> final_weights,
                                           std::span<const double> noise_scale) {
  const auto n = final_weights.size();
  if (n != noise_scale.size()) throw Error("rank correlation inputs differ in length");
  if (n < 3) throw Error("rank correlation needs at least 3 nodes");
  for (std::size_t i = 0; i < n; ++i) {
    if (std::isnan(final_weights[i]) || std::isnan(noise_scale[i])) throw Error("rank correlation input contains NaN");
  }

  const auto rx = average_ranks(final_weights);
  const auto ry = average_ranks(noise_scale);
  const double mean = (static_cast<double>(n) + 1.0) / 2.0;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = rx[i] - mean;
    const double dy = ry[i] - mean;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw Error("rank correlation undefined for a constant vector");
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace wdlmp
