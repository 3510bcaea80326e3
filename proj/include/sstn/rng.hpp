#ifndef SSTN_RNG_HPP
#define SSTN_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <random>

namespace sstn {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer; bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derives an independently seeded engine from a master seed and a path of
/// stream identifiers (domain tag, batch, replicate index, ...).  Streams are
/// a pure function of (seed, path), so work scheduled across threads draws
/// identical randomness regardless of execution order.
inline Rng substream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
  std::uint64_t state = mix64(seed);
  for (std::uint64_t element : path) {
    state = mix64(state ^ mix64(element));
  }
  return Rng{state};
}

/// Stream domain tags; never reorder (stream layout is part of the
/// reproducibility contract).
namespace stream {
constexpr std::uint64_t kAsymptoticMoments = 1;
constexpr std::uint64_t kAsymptoticReplicates = 2;
constexpr std::uint64_t kFiniteCalibration = 3;
constexpr std::uint64_t kLillieforsCalibration = 4;
constexpr std::uint64_t kPowerStudy = 5;
}  // namespace stream

}  // namespace sstn

#endif
