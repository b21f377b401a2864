#pragma once

#include <cstdint>

#include "ksrd/graph.hpp"

namespace ksrd {

/// SplitMix64: a tiny fully-specified generator, so seeded runs reproduce
/// bit-identically on every platform (std::uniform_int_distribution does
/// not guarantee that).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, bound); bound > 0. Modulo bias is
  /// irrelevant at test scale.
  std::uint32_t below(std::uint32_t bound) {
    return static_cast<std::uint32_t>(next() % bound);
  }

 private:
  std::uint64_t state_;
};

/// Seeded random connected graph: a random attachment tree plus each
/// remaining pair with probability extra_edge_pct/100. Deterministic in
/// (n, seed, extra_edge_pct).
Graph random_connected_graph(int n, std::uint64_t seed, int extra_edge_pct = 30);

}  // namespace ksrd
