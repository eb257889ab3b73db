#pragma once

#include <cstdint>
#include <random>

namespace wdlmp {

using Rng = std::mt19937_64;

/// What a random substream is used for. Values are part of the seed derivation
/// and must stay stable across releases.
enum class StreamRole : std::uint64_t {
  GroundTruth = 1,
  Regressor = 2,
  Noise = 3,
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed for one substream. Depends only on its arguments, never on scheduling,
/// so trials can run on any number of workers.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t algorithm, std::uint64_t trial,
                          std::uint64_t node, StreamRole role) noexcept;

inline Rng make_stream(std::uint64_t master_seed, std::uint64_t algorithm, std::uint64_t trial,
                       std::uint64_t node, StreamRole role) {
  return Rng(derive_seed(master_seed, algorithm, trial, node, role));
}

}  // namespace wdlmp
