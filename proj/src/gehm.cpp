#include "gehm/gehm.hpp"

#include "gehm/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gehm {

char color_name(Color c) {
  switch (c) {
    case Color::b: return 'b';
    case Color::g: return 'g';
    case Color::r: return 'r';
  }
  return '?';
}

std::string color_pair_name(ColorPair p) {
  const auto [c1, c2] = colors_of(p);
  return {color_name(c1), '-', color_name(c2)};
}

std::array<Color, 2> colors_of(ColorPair p) {
  switch (p) {
    case ColorPair::br: return {Color::b, Color::r};
    case ColorPair::gr: return {Color::g, Color::r};
    case ColorPair::bg: return {Color::b, Color::g};
  }
  return {Color::b, Color::r};
}

namespace {

constexpr std::array<Color, 3> kColors{Color::b, Color::g, Color::r};

void check_matching(char name, std::span<const std::int64_t> m) {
  const auto n = static_cast<std::int64_t>(m.size());
  for (std::int64_t i = 0; i < n; ++i) {
    const std::int64_t j = m[static_cast<std::size_t>(i)];
    if (j < 0 || j >= n) {
      std::ostringstream msg;
      msg << "matching " << name << " maps " << i << " to " << j << ", outside 0.." << n - 1;
      throw InvalidArgument(msg.str());
    }
  }
  for (std::int64_t i = 0; i < n; ++i) {
    if (m[static_cast<std::size_t>(i)] == i) {
      std::ostringstream msg;
      msg << "fixed point in matching " << name << " (vertex " << i << ")";
      throw InvalidArgument(msg.str());
    }
  }
  for (std::int64_t i = 0; i < n; ++i) {
    const std::int64_t j = m[static_cast<std::size_t>(i)];
    const std::int64_t back = m[static_cast<std::size_t>(j)];
    if (back != i) {
      std::ostringstream msg;
      msg << "matching " << name << " is not an involution: " << i << " -> " << j << " but " << j << " -> "
          << back;
      throw InvalidArgument(msg.str());
    }
  }
}

std::vector<std::int64_t> widen(const std::vector<Vertex>& m) { return {m.begin(), m.end()}; }

std::vector<Vertex> narrow(const std::vector<std::int64_t>& m) {
  std::vector<Vertex> out(m.size());
  std::transform(m.begin(), m.end(), out.begin(), [](std::int64_t x) { return static_cast<Vertex>(x); });
  return out;
}

void validate_raw(const RawMatchings& raw) {
  if (raw.b.size() != raw.g.size() || raw.b.size() != raw.r.size()) {
    std::ostringstream msg;
    msg << "matchings have different lengths (b: " << raw.b.size() << ", g: " << raw.g.size()
        << ", r: " << raw.r.size() << ")";
    throw InvalidArgument(msg.str());
  }
  if (raw.b.size() % 2 != 0) {
    throw InvalidArgument("odd number of vertices: " + std::to_string(raw.b.size()));
  }
  if (raw.isolates < 0) {
    throw InvalidArgument("negative isolate count: " + std::to_string(raw.isolates));
  }
  check_matching('b', raw.b);
  check_matching('g', raw.g);
  check_matching('r', raw.r);
}

}  // namespace

Gehm Gehm::validate(const RawMatchings& raw) {
  validate_raw(raw);
  return Gehm(narrow(raw.b), narrow(raw.g), narrow(raw.r), static_cast<std::size_t>(raw.isolates));
}

Gehm::Gehm(std::vector<Vertex> b, std::vector<Vertex> g, std::vector<Vertex> r, std::size_t isolates)
    : match_{std::move(b), std::move(g), std::move(r)}, isolates_(isolates) {
  validate_raw({widen(match_[0]), widen(match_[1]), widen(match_[2]), 0});
}

std::vector<ColoredCycle> cycles(const Gehm& g, ColorPair pair) {
  const auto [first, second] = colors_of(pair);
  const std::size_t n = g.size();
  std::vector<bool> seen(n, false);
  std::vector<ColoredCycle> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ColoredCycle cyc{pair, {}};
    // The walk leaves s along `first`, so it can only come back along `second`.
    Vertex v = s;
    do {
      const Vertex w = g.partner(first, v);
      cyc.vertices.push_back(v);
      cyc.vertices.push_back(w);
      seen[v] = seen[w] = true;
      v = g.partner(second, w);
    } while (v != s);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<std::size_t> cycle_index(const Gehm& g, ColorPair pair) {
  std::vector<std::size_t> idx(g.size(), 0);
  const auto cs = cycles(g, pair);
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (Vertex v : cs[i].vertices) idx[v] = i;
  return idx;
}

std::size_t graph_components(const Gehm& g) {
  const std::size_t n = g.size();
  std::vector<bool> seen(n, false);
  std::size_t count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Color c : kColors) {
        const Vertex y = g.partner(c, x);
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
  }
  return count;
}

GehmStats stats(const Gehm& g) {
  GehmStats s;
  const auto edges = cycles(g, ColorPair::br);
  s.e = edges.size();
  for (const auto& c : edges) {
    s.hyperedge_degrees.push_back(c.degree());
    s.d += c.degree();
  }
  s.v = cycles(g, ColorPair::gr).size() + g.isolates();
  s.f = cycles(g, ColorPair::bg).size() + g.isolates();
  s.k = graph_components(g) + g.isolates();
  const auto genus = 2 * static_cast<std::int64_t>(s.k) - static_cast<std::int64_t>(s.v) -
                     static_cast<std::int64_t>(s.e) + static_cast<std::int64_t>(s.d) -
                     static_cast<std::int64_t>(s.f);
  if (genus < 0) throw std::logic_error("negative Euler genus");
  s.euler_genus = static_cast<std::size_t>(genus);
  s.orientable = is_orientable(g);
  return s;
}

std::optional<Orientation> orientation(const Gehm& g) {
  const std::size_t n = g.size();
  Orientation o{std::vector<std::uint8_t>(n, 2)};
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (o.side[s] != 2) continue;
    o.side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Color c : kColors) {
        const Vertex y = g.partner(c, x);
        if (o.side[y] == 2) {
          o.side[y] = static_cast<std::uint8_t>(1 - o.side[x]);
          stack.push_back(y);
        } else if (o.side[y] == o.side[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return o;
}

namespace {

// Colour-ordered BFS from `start`; returns the (b, g, r) label triples of the
// component in discovery order. `label` must be all-unset on entry for the
// component's vertices and is restored afterwards.
std::vector<Vertex> encode_from(const Gehm& g, Vertex start, std::vector<std::int64_t>& label,
                                std::vector<Vertex>& order) {
  order.clear();
  order.push_back(start);
  label[start] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex x = order[head];
    for (Color c : kColors) {
      const Vertex y = g.partner(c, x);
      if (label[y] < 0) {
        label[y] = static_cast<std::int64_t>(order.size());
        order.push_back(y);
      }
    }
  }
  std::vector<Vertex> code;
  code.reserve(order.size() * 3);
  for (Vertex x : order)
    for (Color c : kColors) code.push_back(static_cast<Vertex>(label[g.partner(c, x)]));
  for (Vertex x : order) label[x] = -1;
  return code;
}

std::vector<std::vector<Vertex>> vertex_components(const Gehm& g) {
  const std::size_t n = g.size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Color c : kColors) {
        const Vertex y = g.partner(c, comp[head]);
        if (!seen[y]) {
          seen[y] = true;
          comp.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

std::string canonical_form(const Gehm& g) {
  std::vector<std::int64_t> label(g.size(), -1);
  std::vector<Vertex> order;
  std::vector<std::vector<Vertex>> codes;
  for (const auto& comp : vertex_components(g)) {
    std::vector<Vertex> best;
    for (Vertex s : comp) {
      auto code = encode_from(g, s, label, order);
      if (best.empty() || code < best) best = std::move(code);
    }
    codes.push_back(std::move(best));
  }
  std::sort(codes.begin(), codes.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::ostringstream out;
  for (const auto& code : codes) {
    out << '[';
    for (std::size_t i = 0; i < code.size(); ++i) out << (i == 0 ? "" : ",") << code[i];
    out << ']';
  }
  out << "+" << g.isolates();
  return out.str();
}

bool equivalent(const Gehm& a, const Gehm& b) {
  if (a.size() != b.size() || a.isolates() != b.isolates()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<Gehm> components(const Gehm& g) {
  std::vector<Gehm> out;
  std::vector<Vertex> local(g.size(), 0);
  for (const auto& comp : vertex_components(g)) {
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<Vertex>(i);
    std::array<std::vector<Vertex>, 3> m;
    for (Color c : kColors) {
      auto& mc = m[static_cast<std::size_t>(c)];
      mc.reserve(comp.size());
      for (Vertex x : comp) mc.push_back(local[g.partner(c, x)]);
    }
    out.emplace_back(std::move(m[0]), std::move(m[1]), std::move(m[2]), 0);
  }
  for (std::size_t i = 0; i < g.isolates(); ++i) out.push_back(Gehm::isolates_only(1));
  return out;
}

Gehm relabel(const Gehm& g, std::span<const Vertex> perm) {
  const std::size_t n = g.size();
  if (perm.size() != n) throw InvalidArgument("relabelling has the wrong length");
  std::vector<bool> hit(n, false);
  for (Vertex p : perm) {
    if (p >= n || hit[p]) throw InvalidArgument("relabelling is not a permutation");
    hit[p] = true;
  }
  std::array<std::vector<Vertex>, 3> m;
  for (Color c : kColors) {
    auto& mc = m[static_cast<std::size_t>(c)];
    mc.resize(n);
    for (Vertex v = 0; v < n; ++v) mc[perm[v]] = perm[g.partner(c, v)];
  }
  return Gehm(std::move(m[0]), std::move(m[1]), std::move(m[2]), g.isolates());
}

Gehm triple_edge() { return Gehm({1, 0}, {1, 0}, {1, 0}, 0); }

}  // namespace gehm
