#include "gehm/ops.hpp"

#include "gehm/error.hpp"

#include <string>

namespace gehm {

namespace {

constexpr std::array<Color, 3> kColors{Color::b, Color::g, Color::r};

void check_edge_index(std::size_t e, std::size_t count) {
  if (e >= count) {
    throw InvalidArgument("hyperedge index " + std::to_string(e) + " out of range (gehm has " +
                          std::to_string(count) + " hyperedges)");
  }
}

}  // namespace

ColorPermutation::ColorPermutation(Color image_of_b, Color image_of_g, Color image_of_r)
    : image_{image_of_b, image_of_g, image_of_r} {
  if (image_of_b == image_of_g || image_of_b == image_of_r || image_of_g == image_of_r) {
    throw InvalidArgument("colour map is not a permutation of {b, g, r}");
  }
}

Gehm recolor(const Gehm& g, const ColorPermutation& mu) {
  std::array<std::vector<Vertex>, 3> m;
  for (Color c : kColors) {
    const auto src = g.matching(c);
    m[static_cast<std::size_t>(mu(c))].assign(src.begin(), src.end());
  }
  return Gehm(std::move(m[0]), std::move(m[1]), std::move(m[2]), g.isolates());
}

Gehm partial_dual(const Gehm& g, std::span<const std::size_t> edges) {
  const auto es = hyperedges(g);
  const auto b = g.matching(Color::b);
  const auto r = g.matching(Color::r);
  std::vector<Vertex> nb(b.begin(), b.end());
  std::vector<Vertex> nr(r.begin(), r.end());
  std::vector<bool> chosen(es.size(), false);
  for (std::size_t e : edges) {
    check_edge_index(e, es.size());
    chosen[e] = true;
  }
  for (std::size_t e = 0; e < es.size(); ++e) {
    if (!chosen[e]) continue;
    for (Vertex v : es[e].vertices) {
      nb[v] = r[v];
      nr[v] = b[v];
    }
  }
  const auto gm = g.matching(Color::g);
  return Gehm(std::move(nb), {gm.begin(), gm.end()}, std::move(nr), g.isolates());
}

Minor minor(const Gehm& g, std::span<const std::size_t> deleted, std::span<const std::size_t> contracted) {
  const std::size_t n = g.size();
  const auto es = hyperedges(g);

  // For a removed vertex, the colour whose edges get contracted: r for a
  // deleted hyperedge, b for a contracted one.
  enum class Fate : std::uint8_t { keep, via_r, via_b };
  std::vector<Fate> fate(n, Fate::keep);
  std::vector<std::uint8_t> edge_fate(es.size(), 0);
  auto mark = [&](std::span<const std::size_t> which, Fate f) {
    for (std::size_t e : which) {
      check_edge_index(e, es.size());
      const auto tag = static_cast<std::uint8_t>(f);
      if (edge_fate[e] != 0 && edge_fate[e] != tag) {
        throw InvalidArgument("hyperedge " + std::to_string(e) + " is both deleted and contracted");
      }
      edge_fate[e] = tag;
      for (Vertex v : es[e].vertices) fate[v] = f;
    }
  };
  mark(deleted, Fate::via_r);
  mark(contracted, Fate::via_b);

  Minor out;
  out.vertex_map.assign(n, std::nullopt);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v)
    if (fate[v] == Fate::keep) out.vertex_map[v] = next++;

  auto step = [&](Vertex w) {
    return fate[w] == Fate::via_r ? g.partner(Color::r, w) : g.partner(Color::b, w);
  };

  std::array<std::vector<Vertex>, 3> m;
  for (auto& mc : m) mc.resize(next);
  std::vector<bool> walked(n, false);
  for (Vertex u = 0; u < n; ++u) {
    if (fate[u] != Fate::keep) continue;
    Vertex w = g.partner(Color::g, u);
    while (fate[w] != Fate::keep) {
      walked[w] = true;
      const Vertex across = step(w);
      walked[across] = true;
      w = g.partner(Color::g, across);
    }
    const Vertex nu = *out.vertex_map[u];
    m[0][nu] = *out.vertex_map[g.partner(Color::b, u)];
    m[1][nu] = *out.vertex_map[w];
    m[2][nu] = *out.vertex_map[g.partner(Color::r, u)];
  }

  // Removed vertices not on a chain between survivors lie on closed chains.
  std::size_t new_isolates = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (fate[s] == Fate::keep || walked[s]) continue;
    ++new_isolates;
    Vertex w = s;
    do {
      walked[w] = true;
      const Vertex across = g.partner(Color::g, w);
      walked[across] = true;
      w = step(across);
    } while (w != s);
  }

  out.gehm = Gehm(std::move(m[0]), std::move(m[1]), std::move(m[2]), g.isolates() + new_isolates);
  return out;
}

Minor delete_hyperedge_mapped(const Gehm& g, std::size_t e) {
  const std::array<std::size_t, 1> one{e};
  return minor(g, one, {});
}

Minor contract_hyperedge_mapped(const Gehm& g, std::size_t e) {
  const std::array<std::size_t, 1> one{e};
  return minor(g, {}, one);
}

Gehm delete_hyperedge(const Gehm& g, std::size_t e) { return delete_hyperedge_mapped(g, e).gehm; }

Gehm contract_hyperedge(const Gehm& g, std::size_t e) { return contract_hyperedge_mapped(g, e).gehm; }

Gehm restrict_to(const Gehm& g, std::span<const std::size_t> kept) {
  const std::size_t count = hyperedges(g).size();
  std::vector<bool> keep(count, false);
  for (std::size_t e : kept) {
    check_edge_index(e, count);
    keep[e] = true;
  }
  std::vector<std::size_t> dropped;
  for (std::size_t e = 0; e < count; ++e)
    if (!keep[e]) dropped.push_back(e);
  return minor(g, dropped, {}).gehm;
}

Gehm disjoint_union(const Gehm& g1, const Gehm& g2) {
  const auto shift = static_cast<Vertex>(g1.size());
  std::array<std::vector<Vertex>, 3> m;
  for (Color c : kColors) {
    auto& mc = m[static_cast<std::size_t>(c)];
    const auto a = g1.matching(c);
    const auto b = g2.matching(c);
    mc.assign(a.begin(), a.end());
    for (Vertex v : b) mc.push_back(v + shift);
  }
  return Gehm(std::move(m[0]), std::move(m[1]), std::move(m[2]), g1.isolates() + g2.isolates());
}

Gehm join(const Gehm& g1, GEdge e1, const Gehm& g2, GEdge e2) {
  auto check = [](const Gehm& g, GEdge e, const char* which) {
    if (e.x >= g.size() || e.y >= g.size() || g.partner(Color::g, e.x) != e.y) {
      throw InvalidArgument(std::string("join: ") + which + " is not a g-edge of a gehm vertex pair (" +
                            std::to_string(e.x) + "," + std::to_string(e.y) +
                            "); isolates cannot be joined");
    }
  };
  check(g1, e1, "first edge");
  check(g2, e2, "second edge");
  const auto shift = static_cast<Vertex>(g1.size());
  const Vertex x1 = e1.x, y1 = e1.y, x2 = e2.x + shift, y2 = e2.y + shift;
  const Gehm u = disjoint_union(g1, g2);
  const auto gm = u.matching(Color::g);
  std::vector<Vertex> ng(gm.begin(), gm.end());
  ng[x1] = x2;
  ng[x2] = x1;
  ng[y1] = y2;
  ng[y2] = y1;
  const auto b = u.matching(Color::b);
  const auto r = u.matching(Color::r);
  return Gehm({b.begin(), b.end()}, std::move(ng), {r.begin(), r.end()}, u.isolates());
}

std::size_t hyperedge_of(const Gehm& g, Vertex v) {
  if (v >= g.size()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  return cycle_index(g, ColorPair::br)[v];
}

}  // namespace gehm
