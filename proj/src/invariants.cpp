#include "gehm/invariants.hpp"

#include "gehm/error.hpp"
#include "gehm/ops.hpp"

#include <functional>
#include <unordered_map>

namespace gehm {

namespace {

// Calls visit(mask, kept) for every subset of {0, ..., e-1}.
template <typename Visit>
void for_each_subset(std::size_t e, Visit&& visit) {
  std::vector<std::size_t> kept;
  kept.reserve(e);
  const std::uint64_t end = std::uint64_t{1} << e;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    kept.clear();
    for (std::size_t i = 0; i < e; ++i)
      if (mask & (std::uint64_t{1} << i)) kept.push_back(i);
    visit(mask, std::span<const std::size_t>(kept));
  }
}

MultiPoly x_y_monomial(long x_exp, long y_exp) {
  return MultiPoly::monomial(1, {{"X", static_cast<int>(x_exp)}, {"Y", static_cast<int>(y_exp)}});
}

long as_long(std::size_t x) { return static_cast<long>(x); }

}  // namespace

void check_subset_guard(const Gehm& g, const Limits& limits) {
  const std::size_t e = hyperedges(g).size();
  if (e > limits.max_edges || e >= 63) {
    throw GuardExceeded("subset sum over 2^" + std::to_string(e) + " subsets refused (limit: " +
                        std::to_string(limits.max_edges) + " hyperedges; raise with --max-edges)");
  }
}

RankData rank_data(const Gehm& g, std::span<const std::size_t> subset) {
  const Gehm h = restrict_to(g, subset);
  const GehmStats s = stats(h);
  RankData r;
  r.v = s.v;
  r.k = s.k;
  r.e = s.e;
  r.f = s.f;
  r.d = s.d;
  r.euler_genus = s.euler_genus;
  r.two_rho = s.v + s.d - s.e - s.f;
  return r;
}

MultiPoly dichromatic(const Gehm& g, const Limits& limits) {
  check_subset_guard(g, limits);
  const std::size_t e = hyperedges(g).size();
  MultiPoly z;
  for_each_subset(e, [&](std::uint64_t, std::span<const std::size_t> a) {
    const RankData r = rank_data(g, a);
    z += MultiPoly::monomial(1, {{"u", static_cast<int>(r.d - r.e)}, {"v", static_cast<int>(r.f)}});
  });
  return z;
}

std::string edge_variable(std::size_t i) { return "u_" + std::to_string(i); }

MultiPoly dichromatic_multivariate(const Gehm& g, const Limits& limits) {
  check_subset_guard(g, limits);
  const auto es = hyperedges(g);
  MultiPoly z;
  for_each_subset(es.size(), [&](std::uint64_t, std::span<const std::size_t> a) {
    const RankData r = rank_data(g, a);
    MultiPoly::Monomial m{{"v", static_cast<int>(r.f)}};
    for (std::size_t i : a) m.emplace(edge_variable(i), static_cast<int>(es[i].degree()) - 1);
    z += MultiPoly::monomial(1, m);
  });
  return z;
}

MultiPoly dichromatic_delcon(const Gehm& g) {
  std::unordered_map<std::string, MultiPoly> memo;
  std::function<MultiPoly(const Gehm&)> rec = [&](const Gehm& h) -> MultiPoly {
    const auto es = hyperedges(h);
    if (es.empty()) return MultiPoly::variable("v", static_cast<int>(h.isolates()));
    const std::string key = canonical_form(h);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const auto deg = static_cast<int>(es[0].degree());
    MultiPoly z = rec(delete_hyperedge(h, 0)) + MultiPoly::variable("u", deg - 1) * rec(contract_hyperedge(h, 0));
    memo.emplace(key, z);
    return z;
  };
  return rec(g);
}

MultiPoly tutte(const Gehm& g, const Limits& limits) {
  check_subset_guard(g, limits);
  const std::size_t e = hyperedges(g).size();
  const GehmStats whole = stats(g);
  const long two_rho_h = as_long(whole.v + whole.d - whole.e - whole.f);
  MultiPoly t;
  for_each_subset(e, [&](std::uint64_t, std::span<const std::size_t> a) {
    const RankData r = rank_data(g, a);
    const long two_rho = as_long(r.two_rho);
    t += x_y_monomial(two_rho_h - two_rho, 2 * (as_long(r.d) - as_long(r.e)) - two_rho);
  });
  return t;
}

MultiPoly tutte_delcon(const Gehm& g, DelconReport* report) {
  std::unordered_map<std::string, MultiPoly> memo;
  std::function<MultiPoly(const Gehm&)> rec = [&](const Gehm& h) -> MultiPoly {
    const auto es = hyperedges(h);
    if (es.empty()) return MultiPoly::constant(1);
    const std::string key = canonical_form(h);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const long deg = as_long(es[0].degree());
    const Gehm del = delete_hyperedge(h, 0);
    const Gehm con = contract_hyperedge(h, 0);
    const GehmStats sh = stats(h);
    const long x_exp = as_long(stats(del).f) - as_long(sh.f) + deg - 1;
    const long y_exp = as_long(stats(con).v) - as_long(sh.v) + deg - 1;
    if (report != nullptr) {
      ++report->expansions;
      if (x_exp < 0) ++report->negative_exponents;
      if (y_exp < 0) ++report->negative_exponents;
    }
    MultiPoly t = x_y_monomial(x_exp, 0) * rec(del) + x_y_monomial(0, y_exp) * rec(con);
    memo.emplace(key, t);
    return t;
  };
  return rec(g);
}

MultiPoly tutte_from_dichromatic(const Gehm& g, const Limits& limits) {
  const MultiPoly z = dichromatic(g, limits);
  const GehmStats s = stats(g);
  const MultiPoly substituted = z.substitute({{"u", x_y_monomial(-1, 1)}, {"v", x_y_monomial(1, 1)}});
  return x_y_monomial(as_long(s.d) - as_long(s.e) - as_long(s.f), -as_long(s.v)) * substituted;
}

MultiPoly swap_xy(const MultiPoly& p) {
  return p.substitute({{"X", MultiPoly::variable("Y")}, {"Y", MultiPoly::variable("X")}});
}

bool is_hyperforest(const Gehm& g) {
  const GehmStats s = stats(g);
  return as_long(s.v) == as_long(s.d) - as_long(s.e) + as_long(s.k);
}

bool is_hypertree(const Gehm& g) { return is_hyperforest(g) && stats(g).k == 1; }

BigInt count_spanning_hypertrees(const Gehm& g, const Limits& limits) {
  if (stats(g).k != 1) {
    throw InvalidArgument("spanning hypertrees are counted for connected gehms only");
  }
  check_subset_guard(g, limits);
  BigInt count = 0;
  for_each_subset(hyperedges(g).size(), [&](std::uint64_t, std::span<const std::size_t> a) {
    if (is_hypertree(restrict_to(g, a))) ++count;
  });
  return count;
}

Rational evaluate_xy(const MultiPoly& t, const Rational& x, const Rational& y) {
  const Rational squares[2] = {x - 1, y - 1};
  Rational roots[2];
  bool rooted[2];
  for (int i = 0; i < 2; ++i) rooted[i] = rational_sqrt(squares[i], roots[i]);

  for (const auto& name : t.variables()) {
    if (name != "X" && name != "Y") throw InvalidArgument("expected a polynomial in X and Y, found " + name);
  }
  Rational total = 0;
  for (const auto& term : t.terms()) {
    Rational value = Rational(term.coeff);
    for (const auto& [name, e] : term.monomial) {
      const int i = name == "X" ? 0 : 1;
      Rational base;
      int power = e;
      if (rooted[i]) {
        base = roots[i];
      } else if (e % 2 == 0) {
        base = squares[i];
        power = e / 2;
      } else {
        throw ArithmeticError("odd power of " + name + " at a point where " + (i == 0 ? "x" : "y") +
                              " - 1 has no rational square root; check that expand_xy applies");
      }
      if (power < 0) {
        if (base == 0) throw ArithmeticError("division by zero evaluating " + name + "^" + std::to_string(e));
        base = Rational(1) / base;
        power = -power;
      }
      value *= gehm::power(base, static_cast<unsigned>(power));
    }
    total += value;
  }
  return total;
}

Rational evaluate_tutte(const Gehm& g, const Rational& x, const Rational& y, const Limits& limits) {
  return evaluate_xy(tutte(g, limits), x, y);
}

}  // namespace gehm
