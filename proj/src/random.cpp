#include "gehm/random.hpp"

#include "gehm/error.hpp"

#include <numeric>

namespace gehm {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection sampling of the largest multiple of bound below 2^64.
  const std::uint64_t limit = std::uint64_t(0) - (std::uint64_t(0) - bound) % bound;
  while (true) {
    const std::uint64_t x = engine_();
    if (limit == 0 || x < limit) return x % bound;
  }
}

std::vector<Vertex> random_permutation(Rng& rng, std::size_t n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  rng.shuffle(p);
  return p;
}

std::vector<Vertex> random_matching(Rng& rng, std::size_t n) {
  const auto order = random_permutation(rng, n);
  std::vector<Vertex> m(n);
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    m[order[i]] = order[i + 1];
    m[order[i + 1]] = order[i];
  }
  return m;
}

Gehm random_gehm(Rng& rng, std::size_t vertices, std::size_t isolates) {
  if (vertices % 2 != 0) throw InvalidArgument("odd number of vertices: " + std::to_string(vertices));
  auto b = random_matching(rng, vertices);
  auto g = random_matching(rng, vertices);
  auto r = random_matching(rng, vertices);
  return Gehm(std::move(b), std::move(g), std::move(r), isolates);
}

Gehm random_gehm(std::size_t vertices, std::size_t isolates, std::uint64_t seed) {
  Rng rng(seed);
  return random_gehm(rng, vertices, isolates);
}

Gehm random_gem(Rng& rng, std::size_t edges, std::size_t isolates) {
  const std::size_t n = 4 * edges;
  const auto label = random_permutation(rng, n);
  std::vector<Vertex> b(n), r(n);
  for (std::size_t q = 0; q < n; q += 4) {
    // b-r square label[q] -b- label[q+1] -r- label[q+2] -b- label[q+3] -r- label[q].
    const Vertex w[4] = {label[q], label[q + 1], label[q + 2], label[q + 3]};
    b[w[0]] = w[1], b[w[1]] = w[0], b[w[2]] = w[3], b[w[3]] = w[2];
    r[w[1]] = w[2], r[w[2]] = w[1], r[w[3]] = w[0], r[w[0]] = w[3];
  }
  return Gehm(std::move(b), random_matching(rng, n), std::move(r), isolates);
}

}  // namespace gehm
