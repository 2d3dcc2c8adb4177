#include "gehm/whitney.hpp"

#include "gehm/error.hpp"

#include <algorithm>
#include <limits>

namespace gehm {

namespace {

// All non-crossing partitions of the interval [lo, hi).
std::vector<Partition> interval_partitions(std::size_t lo, std::size_t hi);

// Partitions of [last + 1, hi) added to a block of lo whose largest member so
// far is `last`. Either the block stops here, or it gains a next member j and
// the positions strictly between last and j are partitioned among themselves.
void extend_block(Block& block, std::size_t hi, std::vector<Partition>& out) {
  const std::size_t last = block.back();
  for (auto& rest : interval_partitions(last + 1, hi)) {
    Partition p{block};
    p.insert(p.end(), rest.begin(), rest.end());
    out.push_back(std::move(p));
  }
  for (std::size_t j = last + 1; j < hi; ++j) {
    const auto inner = interval_partitions(last + 1, j);
    block.push_back(j);
    std::vector<Partition> tails;
    extend_block(block, hi, tails);
    block.pop_back();
    for (const auto& q : inner) {
      for (const auto& t : tails) {
        Partition p{t.front()};
        p.insert(p.end(), q.begin(), q.end());
        p.insert(p.end(), t.begin() + 1, t.end());
        out.push_back(std::move(p));
      }
    }
  }
}

std::vector<Partition> interval_partitions(std::size_t lo, std::size_t hi) {
  if (lo >= hi) return {Partition{}};
  Block block{lo};
  std::vector<Partition> out;
  extend_block(block, hi, out);
  return out;
}

std::uint64_t catalan(std::size_t d) {
  // C(i+1) = C(i) * 2(2i+1) / (i+2); saturates on overflow.
  unsigned __int128 c = 1;
  const auto cap = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t i = 0; i < d; ++i) {
    c = c * (2 * (2 * i + 1)) / (i + 2);
    if (c > cap) return cap;
  }
  return static_cast<std::uint64_t>(c);
}

void sort_blocks(Partition& p) {
  std::sort(p.begin(), p.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
}

}  // namespace

std::vector<Partition> noncrossing_partitions(std::size_t d) {
  auto out = interval_partitions(0, d);
  for (auto& p : out) sort_blocks(p);
  return out;
}

bool is_noncrossing_partition(const Partition& p, std::size_t d) {
  std::vector<std::size_t> owner(d, std::numeric_limits<std::size_t>::max());
  for (std::size_t b = 0; b < p.size(); ++b) {
    if (p[b].empty()) return false;
    for (std::size_t i = 0; i < p[b].size(); ++i) {
      const std::size_t x = p[b][i];
      if (x >= d || owner[x] != std::numeric_limits<std::size_t>::max()) return false;
      if (i > 0 && x <= p[b][i - 1]) return false;
      owner[x] = b;
    }
  }
  for (std::size_t x = 0; x < d; ++x)
    if (owner[x] == std::numeric_limits<std::size_t>::max()) return false;
  // a < b < c < e with a, c in one block and b, e in another.
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      for (std::size_t c = b + 1; c < d; ++c)
        for (std::size_t e = c + 1; e < d; ++e)
          if (owner[a] == owner[c] && owner[b] == owner[e] && owner[a] != owner[b]) return false;
  return true;
}

RefinedGehm refine(const Gehm& g, const Refinement& beta) {
  const auto es = hyperedges(g);
  if (beta.partitions.size() != es.size()) {
    throw InvalidArgument("refinement gives " + std::to_string(beta.partitions.size()) + " partitions for " +
                          std::to_string(es.size()) + " hyperedges");
  }
  const auto bm = g.matching(Color::b);
  std::vector<Vertex> b(bm.begin(), bm.end());
  for (std::size_t i = 0; i < es.size(); ++i) {
    const auto& w = es[i].vertices;
    const std::size_t d = es[i].degree();
    const Partition& p = beta.partitions[i];
    if (!is_noncrossing_partition(p, d)) {
      throw InvalidArgument("invalid partition for hyperedge " + std::to_string(i));
    }
    // The r-edge at position j is {w[2j+1], w[2j+2]}; consecutive block members
    // j, j' are linked by the b-edge w[2j+2] - w[2j'+1].
    for (const Block& block : p) {
      for (std::size_t t = 0; t < block.size(); ++t) {
        const Vertex x = w[(2 * block[t] + 2) % (2 * d)];
        const Vertex y = w[2 * block[(t + 1) % block.size()] + 1];
        b[x] = y;
        b[y] = x;
      }
    }
  }
  const auto gm = g.matching(Color::g);
  const auto rm = g.matching(Color::r);
  RefinedGehm out{Gehm(std::move(b), {gm.begin(), gm.end()}, {rm.begin(), rm.end()}, g.isolates()), 0, 0};
  const GehmStats s = stats(out.gehm);
  out.edges = s.e;
  out.components = s.k;
  return out;
}

std::uint64_t refinement_count(const Gehm& g) {
  const auto cap = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 total = 1;
  for (const auto& e : hyperedges(g)) {
    total *= catalan(e.degree());
    if (total > cap) return cap;
  }
  return static_cast<std::uint64_t>(total);
}

MultiPoly whitney(const Gehm& g, const Limits& limits) {
  const std::uint64_t count = refinement_count(g);
  if (count > limits.max_refinements) {
    throw GuardExceeded("Whitney sum over " + std::to_string(count) + " refinements refused (limit " +
                        std::to_string(limits.max_refinements) + ")");
  }
  const auto es = hyperedges(g);
  std::vector<std::vector<Partition>> choices;
  for (const auto& e : es) choices.push_back(noncrossing_partitions(e.degree()));

  Refinement beta;
  beta.partitions.resize(es.size());
  std::vector<std::size_t> digit(es.size(), 0);
  MultiPoly sum;
  while (true) {
    for (std::size_t i = 0; i < es.size(); ++i) beta.partitions[i] = choices[i][digit[i]];
    const RefinedGehm h = refine(g, beta);
    const int k = static_cast<int>(h.components);
    sum += MultiPoly::monomial(1, {{"u", k}, {"v", k - static_cast<int>(h.edges)}});
    std::size_t i = 0;
    while (i < es.size() && ++digit[i] == choices[i].size()) digit[i++] = 0;
    if (i == es.size()) break;
  }
  const GehmStats s = stats(g);
  return MultiPoly::monomial(1, {{"u", -static_cast<int>(s.k)}, {"v", static_cast<int>(s.d) - static_cast<int>(s.v)}}) *
         sum;
}

}  // namespace gehm
