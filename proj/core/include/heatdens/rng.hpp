#pragma once

#include <cstdint>
#include <random>

namespace heatdens {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer; used to derive statistically independent seeds.
constexpr std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed of substream `stream` under master seed `seed`. Independent of the
/// number of workers that end up consuming the substreams.
constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  return Rng{substream_seed(seed, stream)};
}

}  // namespace heatdens
