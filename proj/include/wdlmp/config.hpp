#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "wdlmp/algorithms.hpp"
#include "wdlmp/noise.hpp"
#include "wdlmp/topology.hpp"

namespace wdlmp {

/// Full declarative description of a Monte-Carlo run.
struct ExperimentConfig {
  std::size_t num_nodes = 1;
  std::vector<Edge> edges;
  std::size_t dimension = 1;
  double sigma_u = 1.0;
  NoiseModel noise{GaussianNoise{{1.0}}};
  std::vector<Algorithm> algorithms{std::begin(kAllAlgorithms), std::end(kAllAlgorithms)};
  LmpParams lmp;
  double mu_a_global = 10.0;
  double mu_a_local = 0.01;
  std::size_t iterations = 1;
  std::size_t trials = 1;
  std::uint64_t master_seed = 0;
  std::size_t snapshot_stride = 10;

  /// Throws ConfigError naming the first offending field.
  void validate() const;

  NetworkTopology topology() const { return NetworkTopology(num_nodes, edges); }
};

/// Parses and validates a JSON document. Unknown keys are rejected.
ExperimentConfig parse_config(std::string_view text);

ExperimentConfig load_config(const std::filesystem::path& path);

/// Normalized JSON form; parse_config(config_to_json(c)) reproduces c.
std::string config_to_json(const ExperimentConfig& config);

}  // namespace wdlmp
