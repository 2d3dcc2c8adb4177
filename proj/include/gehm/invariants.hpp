#pragma once

// Rank data, dichromatic and Tutte polynomials of gehms.
//
// The Tutte polynomial carries half-integer powers of (x-1) and (y-1) on
// non-orientable gehms, so it is computed in X = sqrt(x-1) and Y = sqrt(y-1),
// where every exponent is a non-negative integer:
//
//   T(H) = sum over A of X^(2 rho(H) - 2 rho(A)) * Y^(2(d(A) - |A|) - 2 rho(A))
//
// with 2 rho(A) = v(A) + d(A) - |A| - f(A). expand_xy (poly.hpp) converts to
// x and y when all exponents are even.

#include "gehm/gehm.hpp"
#include "gehm/poly.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

namespace gehm {

/// Size limits for exponential-time computations. A computation that would
/// exceed one throws GuardExceeded.
struct Limits {
  std::size_t max_edges = 20;              // subset sums over 2^e subsets
  std::size_t max_vertex_degree = 10;      // full pairing enumeration at a medial vertex
  std::uint64_t max_refinements = 1000000; // product of Catalan numbers in the Whitney sum
};

/// Throws GuardExceeded unless e(g) is within limits.max_edges (and below 63).
void check_subset_guard(const Gehm& g, const Limits& limits);

struct RankData {
  std::size_t v = 0;
  std::size_t k = 0;
  std::size_t e = 0;  // |A|
  std::size_t f = 0;
  std::size_t d = 0;
  std::size_t euler_genus = 0;
  std::size_t two_rho = 0;
};

/// Parameters of the restriction of g to the hyperedge set A.
RankData rank_data(const Gehm& g, std::span<const std::size_t> subset);

/// Z(H; u, v) = sum over A of u^(d(A) - |A|) v^f(A).
MultiPoly dichromatic(const Gehm& g, const Limits& limits = {});

/// Name of the variable attached to hyperedge i in the multivariate form.
std::string edge_variable(std::size_t i);

/// Z(H; {u_e}, v) = sum over A of (prod over e in A of u_e^(d(e) - 1)) v^f(A).
MultiPoly dichromatic_multivariate(const Gehm& g, const Limits& limits = {});

/// Z by deletion-contraction on the least-vertex hyperedge, memoised on
/// canonical forms.
MultiPoly dichromatic_delcon(const Gehm& g);

/// Subset-sum Tutte polynomial in X, Y.
MultiPoly tutte(const Gehm& g, const Limits& limits = {});

struct DelconReport {
  std::size_t expansions = 0;          // distinct subproblems expanded
  std::size_t negative_exponents = 0;  // prefactors with a negative X or Y power
};

/// T by the deletion-contraction recurrence
///   T(H) = X^(f(H\e) - f(H) + d(e) - 1) T(H\e) + Y^(v(H/e) - v(H) + d(e) - 1) T(H/e)
/// with T = 1 on hyperedgeless gehms. Prefactor exponents are not assumed
/// non-negative; any negative one is counted in `report`.
MultiPoly tutte_delcon(const Gehm& g, DelconReport* report = nullptr);

/// T recovered from Z: X^(d - e - f) Y^(-v) Z(H; Y/X, XY).
MultiPoly tutte_from_dichromatic(const Gehm& g, const Limits& limits = {});

/// Exchanges the variables X and Y.
MultiPoly swap_xy(const MultiPoly& p);

/// v = d - e + k.
bool is_hyperforest(const Gehm& g);
bool is_hypertree(const Gehm& g);

/// Number of hyperedge subsets whose restriction is a hypertree. Defined for
/// connected gehms only; throws InvalidArgument otherwise.
BigInt count_spanning_hypertrees(const Gehm& g, const Limits& limits = {});

/// Evaluates a polynomial in X, Y at the point (x, y), i.e. with X^2 = x - 1
/// and Y^2 = y - 1. Uses the rational square root when it exists; otherwise
/// the corresponding exponents must all be even.
Rational evaluate_xy(const MultiPoly& t, const Rational& x, const Rational& y);

/// T(g; x, y) exactly.
Rational evaluate_tutte(const Gehm& g, const Rational& x, const Rational& y, const Limits& limits = {});

}  // namespace gehm
