#include "gehm/error.hpp"
#include "gehm/gehm.hpp"
#include "gehm/ops.hpp"
#include "gehm/random.hpp"

#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace gehm;
using testing::fixture;
using testing::te;

namespace {

std::string validation_error(RawMatchings raw) {
  try {
    Gehm::validate(raw);
  } catch (const InvalidArgument& e) {
    return e.what();
  }
  return "";
}

std::set<Vertex> vertex_set(const ColoredCycle& c) { return {c.vertices.begin(), c.vertices.end()}; }

}  // namespace

TEST_CASE("validate accepts the small cases") {
  const Gehm g = Gehm::validate({{1, 0}, {1, 0}, {1, 0}, 0});
  CHECK(g == te());
  const Gehm iso = Gehm::validate({{}, {}, {}, 2});
  CHECK(iso.size() == 0);
  CHECK(iso.isolates() == 2);
}

TEST_CASE("validate gives a distinct diagnostic per violation") {
  const std::string fixed = validation_error({{0, 1}, {1, 0}, {1, 0}, 0});
  CHECK(fixed.find("fixed point in matching b") != std::string::npos);
  const std::string messages[] = {
      fixed,
      validation_error({{1, 0}, {1, 0}, {1, 0, 2}, 0}),            // lengths
      validation_error({{1, 0, 2}, {1, 0, 2}, {1, 0, 2}, 0}),      // odd n
      validation_error({{1, 0}, {1, 0}, {1, 0}, -1}),              // isolates
      validation_error({{1, 0}, {1, 2}, {1, 0}, 0}),               // out of range
      validation_error({{1, 2, 3, 0}, {1, 0, 3, 2}, {1, 0, 3, 2}, 0}),  // not an involution
  };
  std::set<std::string> distinct;
  for (const auto& m : messages) {
    CHECK_FALSE(m.empty());
    distinct.insert(m.substr(0, m.find_first_of("0123456789(")));
  }
  CHECK(distinct.size() == std::size(messages));
}

TEST_CASE("cycles") {
  const auto te_cycles = cycles(te(), ColorPair::br);
  REQUIRE(te_cycles.size() == 1);
  CHECK(te_cycles[0].vertices == std::vector<Vertex>{0, 1});
  CHECK(te_cycles[0].degree() == 1);

  const Gehm g = fixture("fig3");
  const auto gr = cycles(g, ColorPair::gr);
  REQUIRE(gr.size() == 2);
  CHECK(vertex_set(gr[0]) == std::set<Vertex>{0, 1});
  CHECK(vertex_set(gr[1]) == std::set<Vertex>{2, 3, 4, 5});
  const auto br = hyperedges(g);
  REQUIRE(br.size() == 1);
  CHECK(br[0].degree() == 3);
}

TEST_CASE("cycles start at the minimum and step along the first colour") {
  const Gehm g = fixture("fig2");
  for (ColorPair pair : {ColorPair::br, ColorPair::gr, ColorPair::bg}) {
    const auto [first, second] = colors_of(pair);
    Vertex last_min = 0;
    bool any = false;
    for (const auto& c : cycles(g, pair)) {
      const auto& w = c.vertices;
      CHECK(w[0] == *std::min_element(w.begin(), w.end()));
      if (any) CHECK(w[0] > last_min);
      last_min = w[0];
      any = true;
      for (std::size_t i = 0; i < w.size(); ++i)
        CHECK(g.partner(i % 2 == 0 ? first : second, w[i]) == w[(i + 1) % w.size()]);
    }
  }
}

TEST_CASE("stats") {
  const GehmStats fig2 = stats(fixture("fig2"));
  CHECK(fig2.v == 4);
  CHECK(fig2.e == 3);
  CHECK(fig2.f == 4);
  CHECK(fig2.hyperedge_degrees == std::vector<std::size_t>{2, 3, 4});
  CHECK(fig2.euler_genus == 0);
  CHECK(fig2.orientable);

  const GehmStats t = stats(te());
  CHECK(t.v == 1);
  CHECK(t.e == 1);
  CHECK(t.f == 1);
  CHECK(t.d == 1);
  CHECK(t.k == 1);
  CHECK(t.euler_genus == 0);

  const GehmStats iso = stats(Gehm::isolates_only(2));
  CHECK(iso.v == 2);
  CHECK(iso.e == 0);
  CHECK(iso.f == 2);
  CHECK(iso.k == 2);
  CHECK(iso.d == 0);
  CHECK(iso.euler_genus == 0);
}

TEST_CASE("orientability") {
  const auto o = orientation(te());
  REQUIRE(o.has_value());
  CHECK(o->side[0] != o->side[1]);
  CHECK_FALSE(is_orientable(fixture("fig6a")));
  CHECK(is_orientable(fixture("fig6b")));
}

TEST_CASE("orientation is a proper 2-colouring") {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const Gehm g = random_gehm(rng, 2 * rng.between(1, 6), 0);
    if (const auto o = orientation(g)) {
      for (Color c : {Color::b, Color::g, Color::r})
        for (Vertex v = 0; v < g.size(); ++v) CHECK(o->side[v] != o->side[g.partner(c, v)]);
    }
  }
}

TEST_CASE("canonical form") {
  CHECK(equivalent(te(), relabel(te(), std::vector<Vertex>{1, 0})));
  CHECK_FALSE(equivalent(te(), Gehm::isolates_only(2)));
  const Gehm g = fixture("fig2");
  CHECK(equivalent(g, recolor(g, ColorPermutation::identity())));
  CHECK_FALSE(equivalent(fixture("fig6a"), fixture("fig6b")));
  CHECK_FALSE(equivalent(fixture("fig10-h1"), fixture("fig10-h2")));
  CHECK_FALSE(equivalent(g, dual(g)));
}

TEST_CASE("canonical form is invariant under random relabelling") {
  Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    const Gehm g = random_gehm(rng, 2 * rng.between(1, 7), rng.below(3));
    const std::string c = canonical_form(g);
    for (int j = 0; j < 20; ++j) CHECK(canonical_form(relabel(g, random_permutation(rng, g.size()))) == c);
  }
}

TEST_CASE("canonical form separates non-equivalent gehms of a small class") {
  // All gehms on 4 vertices with b and r fixed: equivalence classes must
  // match a brute-force search over the 24 relabellings.
  const std::vector<Vertex> b{1, 0, 3, 2}, r{3, 2, 1, 0};
  const std::vector<std::vector<Vertex>> gs{{1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  for (const auto& g1 : gs) {
    for (const auto& g2 : gs) {
      const Gehm a(b, g1, r), c(b, g2, r);
      std::vector<Vertex> p{0, 1, 2, 3};
      bool iso = false;
      do {
        iso = iso || relabel(a, p) == c;
      } while (std::next_permutation(p.begin(), p.end()));
      CHECK(equivalent(a, c) == iso);
    }
  }
}

TEST_CASE("components") {
  const auto two = components(Gehm::isolates_only(2));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == Gehm::isolates_only(1));
  const auto one = components(te());
  REQUIRE(one.size() == 1);
  CHECK(one[0] == te());
  const auto parts = components(disjoint_union(te(), Gehm::isolates_only(1)));
  REQUIRE(parts.size() == 2);
  CHECK(canonical_form(parts[0]) == canonical_form(te()));
  CHECK(canonical_form(parts[1]) == canonical_form(Gehm::isolates_only(1)));
}

TEST_CASE("random gehm invariants") {
  Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    const Gehm g = random_gehm(rng, 2 * rng.between(0, 8), rng.below(3));
    const GehmStats s = stats(g);
    if (s.orientable) CHECK(s.euler_genus % 2 == 0);
    // d counts r-edges, b-edges and g-edges alike.
    CHECK(2 * s.d == g.size());
    std::size_t degree_sum = 0;
    for (std::size_t d : s.hyperedge_degrees) degree_sum += d;
    CHECK(degree_sum == s.d);
    for (ColorPair pair : {ColorPair::br, ColorPair::gr, ColorPair::bg}) {
      std::vector<int> seen(g.size(), 0);
      for (const auto& c : cycles(g, pair))
        for (Vertex v : c.vertices) ++seen[v];
      CHECK(std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; }));
    }
    CHECK(s.k == graph_components(g) + g.isolates());
  }
}

TEST_CASE("relabel rejects non-permutations") {
  CHECK_THROWS_AS(relabel(te(), std::vector<Vertex>{0, 0}), InvalidArgument);
  CHECK_THROWS_AS(relabel(te(), std::vector<Vertex>{0}), InvalidArgument);
}

TEST_CASE("triple edge") { CHECK(triple_edge() == te()); }
