#include "gehm/checks.hpp"

#include "gehm/error.hpp"
#include "gehm/ops.hpp"
#include "gehm/random.hpp"
#include "gehm/transition.hpp"
#include "gehm/whitney.hpp"

#include <functional>
#include <optional>

namespace gehm {

namespace {

using Check = std::function<std::optional<std::string>(const Gehm&)>;

std::optional<std::string> mismatch(const MultiPoly& left, const MultiPoly& right) {
  if (left == right) return std::nullopt;
  return left.to_string() + " != " + right.to_string();
}

std::optional<std::string> guarded(const Check& check, const Gehm& g) {
  try {
    return check(g);
  } catch (const std::exception& e) {
    return std::string("threw: ") + e.what();
  }
}

// Smaller gehms that a failure may survive on: each single deletion or
// contraction, and one isolate fewer.
std::vector<Gehm> shrink_candidates(const Gehm& g) {
  std::vector<Gehm> out;
  const std::size_t e = hyperedges(g).size();
  for (std::size_t i = 0; i < e; ++i) {
    out.push_back(delete_hyperedge(g, i));
    out.push_back(contract_hyperedge(g, i));
  }
  if (g.isolates() > 0) {
    const auto b = g.matching(Color::b);
    const auto gm = g.matching(Color::g);
    const auto r = g.matching(Color::r);
    out.emplace_back(std::vector<Vertex>(b.begin(), b.end()), std::vector<Vertex>(gm.begin(), gm.end()),
                     std::vector<Vertex>(r.begin(), r.end()), g.isolates() - 1);
  }
  return out;
}

class Runner {
 public:
  explicit Runner(SuiteReport& report) : report_(report) {}

  void expect(const std::string& property, const Gehm& g, const Check& check) {
    ++report_.checks;
    auto detail = guarded(check, g);
    if (!detail || already_failed(property)) return;
    Gehm smallest = g;
    for (bool progress = true; progress;) {
      progress = false;
      for (const auto& candidate : shrink_candidates(smallest)) {
        if (auto d = guarded(check, candidate)) {
          smallest = candidate;
          detail = d;
          progress = true;
          break;
        }
      }
    }
    report_.failures.push_back({property, *detail, {smallest}});
  }

  void expect_pair(const std::string& property, const Gehm& g1, const Gehm& g2,
                   const std::function<std::optional<std::string>(const Gehm&, const Gehm&)>& check) {
    ++report_.checks;
    std::optional<std::string> detail;
    try {
      detail = check(g1, g2);
    } catch (const std::exception& e) {
      detail = std::string("threw: ") + e.what();
    }
    if (detail && !already_failed(property)) report_.failures.push_back({property, *detail, {g1, g2}});
  }

  void note(std::string text) { report_.notes.push_back(std::move(text)); }

 private:
  bool already_failed(const std::string& property) const {
    for (const auto& f : report_.failures)
      if (f.property == property) return true;
    return false;
  }

  SuiteReport& report_;
};

// A random gehm small enough for the subset sums.
Gehm draw(Rng& rng, const CheckOptions& opt) {
  const std::size_t max_pairs = std::max<std::size_t>(opt.max_vertices / 2, 1);
  while (true) {
    const std::size_t n = 2 * rng.between(1, max_pairs);
    Gehm g = random_gehm(rng, n, rng.below(3));
    if (hyperedges(g).size() <= opt.limits.max_edges) return g;
  }
}

std::vector<std::size_t> random_subset(Rng& rng, std::size_t e) {
  std::vector<std::size_t> a;
  for (std::size_t i = 0; i < e; ++i)
    if (rng.below(2) == 1) a.push_back(i);
  return a;
}

MultiPoly u_power(long exp) { return MultiPoly::variable("u", static_cast<int>(exp)); }

long as_long(std::size_t x) { return static_cast<long>(x); }

void duality_suite(Runner& run, Rng& rng, const CheckOptions& opt) {
  std::size_t orientability_changes = 0;
  std::size_t partial_duals = 0;
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const Gehm g = draw(rng, opt);
    const auto a = random_subset(rng, hyperedges(g).size());

    run.expect("tutte(dual) is tutte with X and Y swapped", g, [&](const Gehm& h) {
      return mismatch(tutte(dual(h), opt.limits), swap_xy(tutte(h, opt.limits)));
    });
    run.expect("Z(u,v) = u^(d-e) Z(dual; 1/u, v)", g, [&](const Gehm& h) {
      const GehmStats s = stats(h);
      const MultiPoly zd = dichromatic(dual(h), opt.limits).substitute({{"u", u_power(-1)}});
      return mismatch(dichromatic(h, opt.limits), u_power(as_long(s.d) - as_long(s.e)) * zd);
    });
    run.expect("multivariate partial-dual identity", g, [&](const Gehm& h) {
      const auto es = hyperedges(h);
      std::vector<std::size_t> sub;
      for (std::size_t i : a)
        if (i < es.size()) sub.push_back(i);
      std::map<std::string, MultiPoly> inverse;
      MultiPoly factor = MultiPoly::constant(1);
      for (std::size_t i : sub) {
        inverse.emplace(edge_variable(i), MultiPoly::variable(edge_variable(i), -1));
        factor *= MultiPoly::variable(edge_variable(i), static_cast<int>(es[i].degree()) - 1);
      }
      const MultiPoly rhs = factor * dichromatic_multivariate(partial_dual(h, sub), opt.limits).substitute(inverse);
      return mismatch(dichromatic_multivariate(h, opt.limits), rhs);
    });
    run.expect("stats(dual) swaps v and f", g, [](const Gehm& h) -> std::optional<std::string> {
      const GehmStats s = stats(h);
      const GehmStats sd = stats(dual(h));
      if (s.v == sd.f && s.f == sd.v && s.e == sd.e && s.k == sd.k && s.d == sd.d && s.euler_genus == sd.euler_genus)
        return std::nullopt;
      return "dual stats v=" + std::to_string(sd.v) + " f=" + std::to_string(sd.f);
    });
    run.expect("dual is an involution and trial has order 3", g, [](const Gehm& h) -> std::optional<std::string> {
      if (dual(dual(h)) != h) return "dual(dual(g)) != g";
      if (trial(trial(trial(h))) != h) return "trial^3(g) != g";
      return std::nullopt;
    });

    ++partial_duals;
    if (is_orientable(g) != is_orientable(partial_dual(g, a))) ++orientability_changes;
  }
  run.note("partial duality changed orientability in " + std::to_string(orientability_changes) + " of " +
           std::to_string(partial_duals) + " random cases");
}

void delcon_suite(Runner& run, Rng& rng, const CheckOptions& opt) {
  DelconReport totals;
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const Gehm g = draw(rng, opt);
    run.expect("tutte = tutte_delcon", g, [&](const Gehm& h) {
      return mismatch(tutte(h, opt.limits), tutte_delcon(h));
    });
    run.expect("tutte = tutte_from_dichromatic", g, [&](const Gehm& h) {
      return mismatch(tutte(h, opt.limits), tutte_from_dichromatic(h, opt.limits));
    });
    run.expect("dichromatic = dichromatic_delcon", g, [&](const Gehm& h) {
      return mismatch(dichromatic(h, opt.limits), dichromatic_delcon(h));
    });
    run.expect("multivariate dichromatic specialises to dichromatic", g, [&](const Gehm& h) {
      std::map<std::string, MultiPoly> all_u;
      for (std::size_t i = 0; i < hyperedges(h).size(); ++i) all_u.emplace(edge_variable(i), u_power(1));
      return mismatch(dichromatic_multivariate(h, opt.limits).substitute(all_u), dichromatic(h, opt.limits));
    });
    DelconReport r;
    tutte_delcon(g, &r);
    totals.expansions += r.expansions;
    totals.negative_exponents += r.negative_exponents;
  }
  run.note("deletion-contraction: " + std::to_string(totals.negative_exponents) +
           " negative prefactor exponents over " + std::to_string(totals.expansions) + " expansions");
}

// The medial map with each vertex's half-edges read from a different start
// and possibly in the opposite direction.
MedialMap reread(const MedialMap& m, Rng& rng) {
  MedialMap out = m;
  for (auto& w : out.vertices) {
    const std::size_t len = w.degree();
    const std::size_t start = rng.below(len);
    const bool reverse = rng.below(2) == 1;
    const auto& src = m.vertices[w.hyperedge];
    for (std::size_t i = 0; i < len; ++i) {
      if (reverse) {
        w.half_edges[i] = src.half_edges[(start + len - i) % len];
        w.gaps[i] = src.gaps[(start + 2 * len - i - 1) % len];
      } else {
        w.half_edges[i] = src.half_edges[(start + i) % len];
        w.gaps[i] = src.gaps[(start + i) % len];
      }
    }
  }
  return out;
}

void transition_suite(Runner& run, Rng& rng, const CheckOptions& opt) {
  std::size_t skipped = 0;
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const Gehm g = draw(rng, opt);
    const GehmStats s = stats(g);
    const bool small_degrees =
        std::all_of(s.hyperedge_degrees.begin(), s.hyperedge_degrees.end(), [](std::size_t d) { return d <= 6; });
    if (small_degrees) {
      run.expect("phi_m = dichromatic", g, [&](const Gehm& h) {
        return mismatch(phi_m(h), dichromatic(h, opt.limits));
      });
      run.expect("multivariate transition = multivariate dichromatic", g, [&](const Gehm& h) {
        return mismatch(transition_poly(medial_map(h), omega_m_multivariate(h), "v"),
                        dichromatic_multivariate(h, opt.limits));
      });
    } else {
      ++skipped;
    }
    run.expect("state with c-set A has f(A) free loops", g, [&](const Gehm& h) -> std::optional<std::string> {
      const MedialMap m = medial_map(h);
      const std::size_t e = m.vertices.size();
      check_subset_guard(h, opt.limits);
      std::vector<std::size_t> a;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
        std::vector<bool> flags(e);
        a.clear();
        for (std::size_t i = 0; i < e; ++i) {
          flags[i] = (mask >> i) & 1;
          if (flags[i]) a.push_back(i);
        }
        const std::size_t loops = smooth_count(m, cd_state(m, flags));
        const std::size_t f = rank_data(h, a).f;
        if (loops != f) return "subset mask " + std::to_string(mask) + ": " + std::to_string(loops) + " loops, f(A) = " +
                               std::to_string(f);
      }
      return std::nullopt;
    });
    const auto flags_a = random_subset(rng, hyperedges(g).size());
    Rng local(rng.below(UINT64_MAX));
    run.expect("smooth_count ignores start and direction of each cycle", g,
               [&](const Gehm& h) -> std::optional<std::string> {
                 const MedialMap m = medial_map(h);
                 std::vector<bool> flags(m.vertices.size(), false);
                 for (std::size_t i : flags_a)
                   if (i < flags.size()) flags[i] = true;
                 Rng r = local;
                 const MedialMap m2 = reread(m, r);
                 const std::size_t x = smooth_count(m, cd_state(m, flags));
                 const std::size_t y = smooth_count(m2, cd_state(m2, flags));
                 if (x == y) return std::nullopt;
                 return std::to_string(x) + " loops vs " + std::to_string(y) + " after rereading";
               });

    const std::size_t gem_edges = rng.between(1, std::max<std::size_t>(opt.max_vertices / 4, 1));
    const Gehm gem = random_gem(rng, gem_edges, rng.below(2));
    run.expect("omega_t(u, 1, 0) reproduces omega_m on gems", gem, [&](const Gehm& h) -> std::optional<std::string> {
      if (hyperedges(h).empty()) return std::nullopt;
      for (const auto& e : hyperedges(h))
        if (e.degree() != 2) return std::nullopt;  // shrinking may leave the class of gems
      const auto one = MultiPoly::constant(1);
      return mismatch(transition_poly(medial_map(h), omega_t(h, u_power(1), one, MultiPoly()), "v"), phi_m(h));
    });
    run.expect("pair-weight expansion matches omega_t", gem, [&](const Gehm& h) -> std::optional<std::string> {
      for (const auto& e : hyperedges(h))
        if (e.degree() != 2) return std::nullopt;
      const MedialMap m = medial_map(h);
      const auto a = MultiPoly::variable("a"), b = MultiPoly::variable("b"), c = MultiPoly::variable("c");
      const auto one = MultiPoly::constant(1);
      std::vector<PairWeightTable> tables;
      for (std::size_t i = 0; i < m.vertices.size(); ++i) {
        PairWeightTable w(4, std::vector<MultiPoly>(4));
        auto set = [&](std::size_t x, std::size_t y, const MultiPoly& p) { w[x][y] = w[y][x] = p; };
        set(1, 2, a), set(3, 0, one);  // c-state: pairs across white gaps
        set(0, 1, b), set(2, 3, one);  // d-state: pairs across grey gaps
        set(0, 2, c), set(1, 3, one);  // crossing
        tables.push_back(std::move(w));
      }
      return mismatch(transition_poly(m, from_pair_weights(m, tables, opt.limits), "t"),
                      transition_poly(m, omega_t(h, a, b, c), "t"));
    });
  }
  if (skipped > 0) run.note("phi_m skipped on " + std::to_string(skipped) + " gehms with a hyperedge of degree > 6");
}

void evals_suite(Runner& run, Rng& rng, const CheckOptions& opt) {
  std::size_t genus_zero = 0;
  std::size_t positive = 0;
  auto spanning = [&](const Gehm& h) -> std::optional<std::string> {
    const GehmStats s = stats(h);
    if (s.k != 1) return std::nullopt;
    const Rational t11 = evaluate_tutte(h, 1, 1, opt.limits);
    const Rational expected = s.euler_genus == 0 ? Rational(count_spanning_hypertrees(h, opt.limits)) : Rational(0);
    if (t11 == expected) return std::nullopt;
    return "T(1,1) = " + to_string(t11) + ", expected " + to_string(expected);
  };
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const Gehm g = draw(rng, opt);
    run.expect("T(2,2) = 2^e", g, [&](const Gehm& h) -> std::optional<std::string> {
      const Rational value = evaluate_tutte(h, 2, 2, opt.limits);
      const Rational expected = power(Rational(2), static_cast<unsigned>(hyperedges(h).size()));
      if (value == expected) return std::nullopt;
      return "T(2,2) = " + to_string(value);
    });
    run.expect("orientable implies tutte expands in x and y", g, [&](const Gehm& h) -> std::optional<std::string> {
      if (is_orientable(h)) expand_xy(tutte(h, opt.limits));
      return std::nullopt;
    });
    const GehmStats s = stats(g);
    if (s.k == 1) {
      run.expect("T(1,1) counts spanning hypertrees in genus 0, vanishes otherwise", g, spanning);
      (s.euler_genus == 0 ? genus_zero : positive) += 1;
    }
    // Genus-0 connected instances by rejection.
    for (int attempt = 0; attempt < 200; ++attempt) {
      const Gehm h = draw(rng, opt);
      const GehmStats sh = stats(h);
      if (sh.k == 1 && sh.euler_genus == 0) {
        run.expect("T(1,1) counts spanning hypertrees in genus 0, vanishes otherwise", h, spanning);
        ++genus_zero;
        break;
      }
    }
  }
  run.note("T(1,1) checked on " + std::to_string(genus_zero) + " connected genus-0 and " + std::to_string(positive) +
           " connected positive-genus gehms");
}

void multiplicativity_suite(Runner& run, Rng& rng, const CheckOptions& opt) {
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const Gehm g1 = draw(rng, opt);
    const Gehm g2 = draw(rng, opt);
    if (hyperedges(g1).size() + hyperedges(g2).size() > opt.limits.max_edges) continue;
    run.expect_pair("tutte(g1 + g2) = tutte(g1) tutte(g2)", g1, g2, [&](const Gehm& a, const Gehm& b) {
      return mismatch(tutte(disjoint_union(a, b), opt.limits), tutte(a, opt.limits) * tutte(b, opt.limits));
    });
    run.expect_pair("Z(g1 + g2) = Z(g1) Z(g2)", g1, g2, [&](const Gehm& a, const Gehm& b) {
      return mismatch(dichromatic(disjoint_union(a, b), opt.limits),
                      dichromatic(a, opt.limits) * dichromatic(b, opt.limits));
    });
    const Vertex x1 = static_cast<Vertex>(rng.below(g1.size()));
    const Vertex x2 = static_cast<Vertex>(rng.below(g2.size()));
    const GEdge e1{x1, g1.partner(Color::g, x1)};
    const GEdge e2{x2, g2.partner(Color::g, x2)};
    run.expect_pair("tutte(g1 v g2) = tutte(g1) tutte(g2)", g1, g2, [&](const Gehm& a, const Gehm& b) {
      return mismatch(tutte(join(a, e1, b, e2), opt.limits), tutte(a, opt.limits) * tutte(b, opt.limits));
    });
  }
}

std::size_t image_edge(const Minor& m, const Gehm& g, std::size_t f) {
  return hyperedge_of(m.gehm, *m.vertex_map[hyperedges(g)[f].vertices[0]]);
}

struct MinorStep {
  bool contract;
  std::size_t edge;
};

Minor apply(const Gehm& g, MinorStep s) {
  return s.contract ? contract_hyperedge_mapped(g, s.edge) : delete_hyperedge_mapped(g, s.edge);
}

// The two orders of applying steps on e and f, and the one-pass minor.
std::optional<std::string> commutes(const Gehm& g, MinorStep first, MinorStep second) {
  const Minor a1 = apply(g, first);
  const Gehm ab = apply(a1.gehm, {second.contract, image_edge(a1, g, second.edge)}).gehm;
  const Minor b1 = apply(g, second);
  const Gehm ba = apply(b1.gehm, {first.contract, image_edge(b1, g, first.edge)}).gehm;
  std::vector<std::size_t> del, con;
  for (MinorStep s : {first, second}) (s.contract ? con : del).push_back(s.edge);
  const Gehm once = minor(g, del, con).gehm;
  if (canonical_form(ab) != canonical_form(ba)) return "orders disagree";
  if (canonical_form(ab) != canonical_form(once)) return "sequential and one-pass minors disagree";
  return std::nullopt;
}

void structural_suite(Runner& run, Rng& rng, const CheckOptions& opt) {
  std::size_t whitney_computed = 0;
  std::size_t whitney_laurent = 0;
  for (std::size_t t = 0; t < opt.trials; ++t) {
    const Gehm g = draw(rng, opt);
    std::vector<std::vector<Vertex>> perms;
    for (int i = 0; i < 20; ++i) perms.push_back(random_permutation(rng, g.size()));
    run.expect("canonical form invariant under relabelling", g, [&](const Gehm& h) -> std::optional<std::string> {
      const std::string c = canonical_form(h);
      for (const auto& p : perms) {
        if (p.size() != h.size()) break;  // shrunk instances have fewer vertices
        if (canonical_form(relabel(h, p)) != c) return "relabelled canonical form differs";
      }
      return std::nullopt;
    });
    run.expect("genus is non-negative, and even when orientable", g, [](const Gehm& h) -> std::optional<std::string> {
      const GehmStats s = stats(h);
      if (s.orientable && s.euler_genus % 2 != 0) return "odd genus " + std::to_string(s.euler_genus);
      if (s.d * 2 != h.size()) return "d is not the number of r-edges";
      return std::nullopt;
    });

    const std::size_t e = hyperedges(g).size();
    const auto a = random_subset(rng, e);
    run.expect("partial_dual is an involution", g, [&](const Gehm& h) -> std::optional<std::string> {
      std::vector<std::size_t> sub;
      for (std::size_t i : a)
        if (i < hyperedges(h).size()) sub.push_back(i);
      if (partial_dual(partial_dual(h, sub), sub) != h) return "partial_dual twice is not the identity";
      return std::nullopt;
    });
    run.expect("delete and contract: e drops by 1, orientability kept, delete keeps genus from rising", g,
               [](const Gehm& h) -> std::optional<std::string> {
                 const GehmStats s = stats(h);
                 for (std::size_t i = 0; i < s.e; ++i) {
                   const GehmStats sd = stats(delete_hyperedge(h, i));
                   const GehmStats sc = stats(contract_hyperedge(h, i));
                   if (sd.e + 1 != s.e || sc.e + 1 != s.e) return "edge count off at " + std::to_string(i);
                   if (s.orientable && !(sd.orientable && sc.orientable)) return "orientability lost at " + std::to_string(i);
                   if (sd.euler_genus > s.euler_genus) return "deletion raised genus at " + std::to_string(i);
                 }
                 return std::nullopt;
               });
    if (e >= 2) {
      const std::size_t x = rng.below(e);
      std::size_t y = rng.below(e - 1);
      if (y >= x) ++y;
      run.expect("minors on distinct hyperedges commute", g, [&](const Gehm& h) -> std::optional<std::string> {
        if (hyperedges(h).size() != e) return std::nullopt;
        for (bool c1 : {false, true})
          for (bool c2 : {false, true})
            if (auto d = commutes(h, {c1, x}, {c2, y})) return *d;
        return std::nullopt;
      });
    }

    if (refinement_count(g) <= 20000) {
      Refinement beta;
      for (const auto& he : hyperedges(g)) {
        const auto options = noncrossing_partitions(he.degree());
        beta.partitions.push_back(options[rng.below(options.size())]);
      }
      run.expect("refine keeps g, r, v and d", g, [&](const Gehm& h) -> std::optional<std::string> {
        if (hyperedges(h).size() != beta.partitions.size()) return std::nullopt;
        for (std::size_t i = 0; i < beta.partitions.size(); ++i)
          if (!is_noncrossing_partition(beta.partitions[i], hyperedges(h)[i].degree())) return std::nullopt;
        const RefinedGehm rg = refine(h, beta);
        const GehmStats s = stats(h);
        const GehmStats sr = stats(rg.gehm);
        std::size_t blocks = 0;
        for (const auto& p : beta.partitions) blocks += p.size();
        if (!std::ranges::equal(rg.gehm.matching(Color::g), h.matching(Color::g)) ||
            !std::ranges::equal(rg.gehm.matching(Color::r), h.matching(Color::r)))
          return "g or r matching changed";
        if (sr.v != s.v || sr.d != s.d) return "v or d changed";
        if (rg.edges != blocks || sr.e != blocks) return "hyperedge count is not the block count";
        return std::nullopt;
      });
      run.expect("one-block refinement is the identity", g, [](const Gehm& h) -> std::optional<std::string> {
        Refinement whole;
        for (const auto& he : hyperedges(h)) {
          Block all(he.degree());
          for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
          whole.partitions.push_back({all});
        }
        if (refine(h, whole).gehm != h) return "one-block refinement changed the gehm";
        return std::nullopt;
      });
      const MultiPoly r = whitney(g, opt.limits);
      ++whitney_computed;
      if (!r.is_polynomial()) ++whitney_laurent;
    }
  }
  run.note("whitney: " + std::to_string(whitney_laurent) + " of " + std::to_string(whitney_computed) +
           " values had a negative exponent");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"duality", "delcon", "transition", "evals", "multiplicativity",
                                              "structural"};
  return names;
}

SuiteReport run_suite(const std::string& name, const CheckOptions& options) {
  SuiteReport report;
  report.suite = name;
  Runner run(report);
  Rng rng(options.seed);
  if (name == "duality") duality_suite(run, rng, options);
  else if (name == "delcon") delcon_suite(run, rng, options);
  else if (name == "transition") transition_suite(run, rng, options);
  else if (name == "evals") evals_suite(run, rng, options);
  else if (name == "multiplicativity") multiplicativity_suite(run, rng, options);
  else if (name == "structural") structural_suite(run, rng, options);
  else throw InvalidArgument("unknown suite: " + name);
  return report;
}

}  // namespace gehm
