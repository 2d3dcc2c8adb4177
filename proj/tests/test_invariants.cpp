#include "gehm/error.hpp"
#include "gehm/invariants.hpp"
#include "gehm/ops.hpp"
#include "gehm/random.hpp"

#include "support.hpp"

#include <doctest.h>

#include <numeric>

using namespace gehm;
using testing::fixture;
using testing::num;
using testing::te;
using testing::var;

namespace {

std::vector<Gehm> corpus(std::uint64_t seed, int count, std::size_t max_pairs = 6) {
  Rng rng(seed);
  std::vector<Gehm> out;
  for (int i = 0; i < count; ++i) out.push_back(random_gehm(rng, 2 * rng.between(1, max_pairs), rng.below(3)));
  return out;
}

const std::vector<std::size_t> kNone;

}  // namespace

TEST_CASE("rank data") {
  const RankData none = rank_data(te(), kNone);
  CHECK(none.v == 1);
  CHECK(none.f == 1);
  CHECK(none.d == 0);
  CHECK(none.two_rho == 0);
  const std::vector<std::size_t> all{0};
  const RankData whole = rank_data(te(), all);
  CHECK(whole.v == 1);
  CHECK(whole.f == 1);
  CHECK(whole.d == 1);
  CHECK(whole.e == 1);
  CHECK(whole.two_rho == 0);

  for (const Gehm& g : corpus(2, 100)) {
    std::vector<std::size_t> every(hyperedges(g).size());
    std::iota(every.begin(), every.end(), 0);
    const GehmStats s = stats(g);
    CHECK(rank_data(g, every).two_rho == 2 * (s.v - s.k) + s.euler_genus);
  }
}

TEST_CASE("dichromatic polynomial") {
  CHECK(dichromatic(Gehm::isolates_only(3)) == var("v", 3));
  CHECK(dichromatic(te()) == num(2) * var("v"));
  const MultiPoly z10 = var("v", 2) + var("u", 3) * var("v", 3);
  CHECK(dichromatic(fixture("fig10-h1")) == z10);
  CHECK(dichromatic(fixture("fig10-h2")) == z10);
  CHECK(dichromatic(fixture("fig3")) == var("v", 2) + var("u", 2) * var("v", 2));
}

TEST_CASE("multivariate dichromatic polynomial") {
  CHECK(dichromatic_multivariate(te()) == num(2) * var("v"));
  CHECK(dichromatic_multivariate(Gehm::isolates_only(2)) == var("v", 2));
  const Gehm g = fixture("fig2");
  const MultiPoly zm = dichromatic_multivariate(g);
  CHECK(zm.variables() == std::vector<std::string>{"u_0", "u_1", "u_2", "v"});
  for (const Gehm& h : corpus(3, 100)) {
    std::map<std::string, MultiPoly> to_u;
    for (std::size_t i = 0; i < hyperedges(h).size(); ++i) to_u.emplace(edge_variable(i), var("u"));
    CHECK(dichromatic_multivariate(h).substitute(to_u) == dichromatic(h));
  }
}

TEST_CASE("dichromatic by deletion-contraction") {
  CHECK(dichromatic_delcon(te()) == num(2) * var("v"));
  CHECK(dichromatic_delcon(Gehm::isolates_only(2)) == var("v", 2));
  for (const Gehm& g : corpus(4, 200)) CHECK(dichromatic_delcon(g) == dichromatic(g));
}

TEST_CASE("Tutte polynomial") {
  const MultiPoly x2y2 = var("X", 2) + var("Y", 2);
  CHECK(tutte(fixture("fig6a")) == x2y2);
  CHECK(tutte(fixture("fig6b")) == x2y2);
  CHECK(expand_xy(tutte(fixture("fig6a"))) == var("x") + var("y") - num(2));
  CHECK(tutte(te()) == num(2));
  CHECK(tutte(Gehm::isolates_only(4)) == num(1));
}

TEST_CASE("plane loop gem has Tutte polynomial y") {
  // Y^2 = y - 1, so the classical value y is 1 + Y^2.
  const MultiPoly t = tutte(testing::plane_loop());
  CHECK(t == num(1) + var("Y", 2));
  CHECK(expand_xy(t) == var("y"));
}

TEST_CASE("Tutte polynomial by deletion-contraction") {
  CHECK(tutte_delcon(Gehm::isolates_only(2)) == num(1));
  CHECK(tutte_delcon(te()) == num(2));
  DelconReport report;
  CHECK(tutte_delcon(fixture("fig2"), &report) == tutte(fixture("fig2")));
  CHECK(report.expansions > 0);
  CHECK(report.negative_exponents == 0);
  for (const Gehm& g : corpus(5, 200)) CHECK(tutte_delcon(g) == tutte(g));
}

TEST_CASE("Tutte polynomial from the dichromatic polynomial") {
  CHECK(tutte_from_dichromatic(te()) == num(2));
  CHECK(tutte_from_dichromatic(Gehm::isolates_only(3)) == num(1));
  for (const Gehm& g : corpus(6, 200)) CHECK(tutte_from_dichromatic(g) == tutte(g));
}

TEST_CASE("subset-sum Tutte exponents are non-negative") {
  for (const Gehm& g : corpus(7, 200)) CHECK(tutte(g).is_polynomial());
}

TEST_CASE("duality identities") {
  for (const Gehm& g : corpus(8, 200)) {
    CHECK(tutte(dual(g)) == swap_xy(tutte(g)));
    const GehmStats s = stats(g);
    const MultiPoly zd = dichromatic(dual(g)).substitute({{"u", var("u", -1)}});
    CHECK(dichromatic(g) == var("u", static_cast<int>(s.d) - static_cast<int>(s.e)) * zd);
  }
}

TEST_CASE("multivariate partial-dual identity") {
  Rng rng(9);
  for (const Gehm& g : corpus(9, 150)) {
    const auto es = hyperedges(g);
    std::vector<std::size_t> a;
    for (std::size_t i = 0; i < es.size(); ++i)
      if (rng.below(2)) a.push_back(i);
    MultiPoly factor = num(1);
    std::map<std::string, MultiPoly> invert;
    for (std::size_t i : a) {
      factor *= var(edge_variable(i), static_cast<int>(es[i].degree()) - 1);
      invert.emplace(edge_variable(i), var(edge_variable(i), -1));
    }
    CHECK(dichromatic_multivariate(g) == factor * dichromatic_multivariate(partial_dual(g, a)).substitute(invert));
  }
}

TEST_CASE("multiplicativity") {
  Rng rng(10);
  const auto a = corpus(10, 60, 4), b = corpus(11, 60, 4);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(tutte(disjoint_union(a[i], b[i])) == tutte(a[i]) * tutte(b[i]));
    CHECK(dichromatic(disjoint_union(a[i], b[i])) == dichromatic(a[i]) * dichromatic(b[i]));
    const Vertex x = static_cast<Vertex>(rng.below(a[i].size()));
    const Vertex y = static_cast<Vertex>(rng.below(b[i].size()));
    const Gehm j = join(a[i], {x, a[i].partner(Color::g, x)}, b[i], {y, b[i].partner(Color::g, y)});
    CHECK(tutte(j) == tutte(a[i]) * tutte(b[i]));
  }
}

TEST_CASE("orientable gehms expand in x and y") {
  for (const Gehm& g : corpus(12, 200))
    if (is_orientable(g)) CHECK_NOTHROW(expand_xy(tutte(g)));
  // The converse fails.
  CHECK_FALSE(is_orientable(fixture("fig6a")));
  CHECK_NOTHROW(expand_xy(tutte(fixture("fig6a"))));
}

TEST_CASE("hypertrees") {
  const Gehm g = fixture("fig2");
  REQUIRE(hyperedges(g)[2].degree() == 4);
  CHECK(is_hypertree(restrict_to(g, std::vector<std::size_t>{0, 1})));
  CHECK_FALSE(is_hypertree(g));
  CHECK(count_spanning_hypertrees(te()) == 2);
  CHECK_THROWS_AS(count_spanning_hypertrees(Gehm::isolates_only(2)), InvalidArgument);
  for (const Gehm& h : corpus(13, 200)) {
    if (is_hypertree(h)) {
      CHECK(stats(h).f == 1);
      CHECK(stats(h).euler_genus == 0);
    }
    if (is_hyperforest(h)) CHECK(stats(h).v == stats(h).d - stats(h).e + stats(h).k);
  }
}

TEST_CASE("evaluations") {
  std::size_t genus_zero = 0, positive = 0;
  for (const Gehm& g : corpus(14, 300)) {
    const GehmStats s = stats(g);
    CHECK(evaluate_tutte(g, 2, 2) == power(Rational(2), static_cast<unsigned>(s.e)));
    if (s.k != 1) continue;
    const Rational t11 = evaluate_tutte(g, 1, 1);
    if (s.euler_genus == 0) {
      CHECK(t11 == Rational(count_spanning_hypertrees(g)));
      ++genus_zero;
    } else {
      CHECK(t11 == 0);
      ++positive;
    }
  }
  CHECK(genus_zero > 20);
  CHECK(positive > 20);
}

TEST_CASE("evaluation needs rational square roots for odd exponents") {
  CHECK(evaluate_xy(var("X"), 2, 5) == 1);
  CHECK(evaluate_xy(var("X") * var("Y"), 5, 10) == 6);
  CHECK(evaluate_xy(var("X", 2), 3, 1) == 2);
  CHECK_THROWS_AS(evaluate_xy(var("X"), 3, 1), ArithmeticError);
  CHECK_THROWS_AS(evaluate_xy(var("X", -1), 1, 1), ArithmeticError);
  CHECK_THROWS_AS(evaluate_xy(var("u"), 1, 1), InvalidArgument);
}

TEST_CASE("subset-sum guard") {
  Limits tight;
  tight.max_edges = 2;
  CHECK_THROWS_AS(tutte(fixture("fig2"), tight), GuardExceeded);
  CHECK_THROWS_AS(dichromatic(fixture("fig2"), tight), GuardExceeded);
  CHECK_THROWS_AS(count_spanning_hypertrees(fixture("fig2"), tight), GuardExceeded);
  // 21 triple edges.
  Gehm big = Gehm::isolates_only(0);
  for (int i = 0; i < 21; ++i) big = disjoint_union(big, te());
  CHECK_THROWS_AS(tutte(big), GuardExceeded);
  // Deletion-contraction has no subset guard.
  CHECK(tutte_delcon(big) == num(2).pow(21));
}
