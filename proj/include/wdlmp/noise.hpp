#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "wdlmp/random.hpp"

namespace wdlmp {

struct GaussianNoise {
  std::vector<double> stds;  // per node, > 0
};

/// Symmetric alpha-stable noise with characteristic function exp(-gamma_k |t|^alpha).
struct AlphaStableNoise {
  double alpha;                     // (0, 2]
  std::vector<double> dispersions;  // per node gamma_k, > 0
};

class NoiseModel {
 public:
  /// Throw wdlmp::Error on non-positive scales or alpha outside (0, 2].
  explicit NoiseModel(GaussianNoise g);
  explicit NoiseModel(AlphaStableNoise s);

  std::size_t num_nodes() const noexcept;
  bool is_gaussian() const noexcept { return std::holds_alternative<GaussianNoise>(params_); }

  /// Per-node std (Gaussian) or dispersion (alpha-stable).
  const std::vector<double>& scales() const noexcept;

  const std::variant<GaussianNoise, AlphaStableNoise>& params() const noexcept { return params_; }

 private:
  std::variant<GaussianNoise, AlphaStableNoise> params_;
};

/// One noise draw for `node`.
double sample_noise(const NoiseModel& model, std::size_t node, Rng& rng);

/// Chambers-Mallows-Stuck draw, zero location, scale gamma^(1/alpha).
/// alpha == 1 takes the Cauchy branch.
double sample_symmetric_stable(double alpha, double dispersion, Rng& rng);

/// Mean of cos(t * v). Throws on empty input.
double empirical_char_function(std::span<const double> samples, double t);

}  // namespace wdlmp
