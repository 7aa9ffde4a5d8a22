#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace flowlab {

using Rng = std::mt19937_64;

/// SplitMix64 step; used to derive independent substream seeds.
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Substream seed keyed on (seed, stream index). Replicas and paths use
/// per-index substreams so results do not depend on scheduling.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x51ed27f4a7c15ULL));
}

/// Substream seed keyed on (seed, label), e.g. a check name.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : label) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return derive_seed(seed, h);
}

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

}  // namespace flowlab
