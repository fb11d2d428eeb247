#pragma once

#include <cstdint>

namespace hicm {

/// SplitMix64 finalizer. Used both as a stream generator and as the stable
/// mixing function behind derive_seed, so derived run seeds do not depend on
/// platform or standard-library details.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d4a7e2d0796f2dULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix64(std::uint64_t x) {
  std::uint64_t s = x;
  return splitmix64(s);
}

/// Stable run-seed derivation: hash of (base seed, configuration index,
/// run index). Adding configurations never perturbs existing seeds.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t config_index,
                                 std::uint64_t run_index) {
  std::uint64_t h = mix64(base ^ 0x8824a3d7340e97b5ULL);
  h = mix64(h ^ config_index);
  h = mix64(h ^ run_index);
  return h;
}

/// Minimal deterministic uniform generator (xoshiro-free, SplitMix64 stream).
/// Identical output on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() { return splitmix64(state_); }

  /// Uniform double in [0, 1).
  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound), bound > 0.
  std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

 private:
  std::uint64_t state_;
};

}  // namespace hicm
