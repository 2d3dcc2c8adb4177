#pragma once

// Seeded random gehms: three independent uniform perfect matchings.
//
// Draws go through std::mt19937_64, whose output sequence is fixed by the
// standard, and hand-written bounded draws and shuffles, so a seed gives the
// same gehm on every platform.

#include "gehm/gehm.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace gehm {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform draw from 0..bound-1; bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform draw from lo..hi inclusive.
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Uniform perfect matching on n points (n even), as an involution.
std::vector<Vertex> random_matching(Rng& rng, std::size_t n);

/// Uniform permutation of 0..n-1.
std::vector<Vertex> random_permutation(Rng& rng, std::size_t n);

/// Throws InvalidArgument if `vertices` is odd.
Gehm random_gehm(Rng& rng, std::size_t vertices, std::size_t isolates);
Gehm random_gehm(std::size_t vertices, std::size_t isolates, std::uint64_t seed);

/// A random gem: `edges` hyperedges of degree 2 on randomly labelled vertices,
/// with a uniform random g-matching.
Gehm random_gem(Rng& rng, std::size_t edges, std::size_t isolates);

}  // namespace gehm
