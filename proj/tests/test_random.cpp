#include "gehm/error.hpp"
#include "gehm/io.hpp"
#include "gehm/random.hpp"

#include <doctest.h>

#include <set>

using namespace gehm;

TEST_CASE("bounded draws stay in range and cover it") {
  Rng rng(1);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    const auto x = rng.below(7);
    CHECK(x < 7);
    seen.insert(x);
  }
  CHECK(seen.size() == 7);
  for (int i = 0; i < 100; ++i) {
    const auto x = rng.between(3, 5);
    CHECK((x >= 3 && x <= 5));
  }
}

TEST_CASE("random matchings are fixed-point-free involutions") {
  Rng rng(2);
  for (std::size_t n = 0; n <= 20; n += 2) {
    const auto m = random_matching(rng, n);
    REQUIRE(m.size() == n);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(m[i] != i);
      CHECK(m[m[i]] == i);
    }
  }
  const auto p = random_permutation(rng, 9);
  CHECK(std::set<Vertex>(p.begin(), p.end()).size() == 9);
}

TEST_CASE("seeded gehms are reproducible") {
  CHECK(random_gehm(12, 2, 99) == random_gehm(12, 2, 99));
  CHECK(to_json_string(random_gehm(10, 0, 5)) == to_json_string(random_gehm(10, 0, 5)));
  CHECK_FALSE(random_gehm(12, 0, 1) == random_gehm(12, 0, 2));
  CHECK(random_gehm(12, 3, 4).isolates() == 3);
  CHECK_THROWS_AS(random_gehm(7, 0, 1), InvalidArgument);
  CHECK(random_gehm(0, 1, 1) == Gehm::isolates_only(1));
}

TEST_CASE("random gems have degree-2 hyperedges") {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const std::size_t edges = rng.between(1, 6);
    const Gehm g = random_gem(rng, edges, 1);
    CHECK(g.size() == 4 * edges);
    CHECK(g.isolates() == 1);
    const auto es = hyperedges(g);
    CHECK(es.size() == edges);
    for (const auto& e : es) CHECK(e.degree() == 2);
  }
}

TEST_CASE("random gehms round-trip through the canonical form") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Gehm g = random_gehm(10, seed % 3, seed);
    const Gehm back = parse_gehm(to_json_string(g));
    CHECK(back == g);
    CHECK(canonical_form(back) == canonical_form(g));
  }
}
