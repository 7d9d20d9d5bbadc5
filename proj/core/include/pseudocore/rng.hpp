#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace pseudocore {

/// SplitMix64 finalizer. Bijective, so distinct inputs never collide.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Streams keep seeds derived for different purposes apart.
enum class SeedStream : std::uint64_t {
  Cascade = 1,
  Walk = 2,
  Sampling = 3,
  Generator = 4,
};

/// Counter-based seed derivation: the seed for task `index` depends only on
/// (master, stream, index), never on scheduling order.
constexpr std::uint64_t derive_seed(std::uint64_t master, SeedStream stream,
                                    std::uint64_t index) noexcept {
  return mix64(mix64(master ^ mix64(static_cast<std::uint64_t>(stream))) + index);
}

/// Thin wrapper over mt19937_64 whose draws are defined here rather than by
/// the standard library's distributions, so results match across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t uniform_index(std::uint64_t bound) {
    // Reject the top partial block so every residue is equally likely.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
  }

  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pseudocore
