#include "wdlmp/random.hpp"

namespace wdlmp {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t algorithm, std::uint64_t trial,
                          std::uint64_t node, StreamRole role) noexcept {
  std::uint64_t h = mix64(master_seed);
  h = mix64(h ^ algorithm);
  h = mix64(h ^ trial);
  h = mix64(h ^ node);
  return mix64(h ^ static_cast<std::uint64_t>(role));
}

}  // namespace wdlmp
