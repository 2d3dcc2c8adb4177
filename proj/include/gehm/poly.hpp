#pragma once

// Sparse multivariate Laurent polynomials with arbitrary-precision integer
// coefficients. Every invariant in this library is one of these.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gehm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Orders variable names so that trailing indices compare numerically
/// (u_2 < u_10) and a bare prefix precedes its indexed forms (u < u_0).
bool variable_name_less(std::string_view a, std::string_view b);

class MultiPoly {
 public:
  using Exponents = std::vector<int>;
  using Monomial = std::map<std::string, int>;

  struct Term {
    BigInt coeff;
    Monomial monomial;
  };

  /// The zero polynomial.
  MultiPoly() = default;

  static MultiPoly constant(const BigInt& c);
  static MultiPoly variable(const std::string& name, int exponent = 1);
  static MultiPoly monomial(const BigInt& c, const Monomial& exponents);

  /// Variables with a nonzero exponent in at least one term, in
  /// variable_name_less order.
  const std::vector<std::string>& variables() const { return vars_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Terms in canonical order: total degree descending, then
  /// lexicographically descending exponent vectors.
  std::vector<Term> terms() const;

  BigInt coefficient(const Monomial& m) const;

  /// Smallest / largest exponent of `var` over all terms; 0 if absent.
  int min_exponent(const std::string& var) const;
  int max_exponent(const std::string& var) const;

  /// True when no term has a negative exponent.
  bool is_polynomial() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned exponent) const;

  /// Replaces each named variable by a polynomial. A variable occurring with
  /// a negative exponent may only be replaced by a unit monomial (coefficient
  /// +1 or -1), whose inverse is again a monomial.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& values) const;

  /// Exact value at a rational point. Every variable must be assigned;
  /// throws ArithmeticError for a negative power of zero.
  Rational eval(const std::map<std::string, Rational>& values) const;

  /// Canonical text rendering, e.g. `x + y - 2` or `u^3*v^3 + v^2`.
  std::string to_string() const;

 private:
  struct TermOrder {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, BigInt, TermOrder>;

  MultiPoly(std::vector<std::string> vars, TermMap terms);

  void align_to(const std::vector<std::string>& vars);
  void drop_unused_variables();
  static std::vector<std::string> merged_variables(const std::vector<std::string>& a,
                                                   const std::vector<std::string>& b);

  std::vector<std::string> vars_;
  TermMap terms_;
};

inline MultiPoly add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
inline MultiPoly mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }
MultiPoly scale(const MultiPoly& p, const BigInt& c);

/// Rewrites a polynomial in X = sqrt(x-1), Y = sqrt(y-1) as a polynomial in
/// x and y. Throws ArithmeticError if an X or Y exponent is odd or negative,
/// which happens for some (not all) non-orientable gehms.
MultiPoly expand_xy(const MultiPoly& t);

/// Parses a ring value given on the command line: an integer, a variable
/// name, or either with a leading minus sign.
MultiPoly parse_ring_value(std::string_view text);

/// base^exponent.
Rational power(const Rational& base, unsigned exponent);

/// Exact square root of a non-negative rational, if it is a perfect square.
bool rational_sqrt(const Rational& value, Rational& root);

/// Renders a rational as `p` or `p/q`.
std::string to_string(const Rational& value);

/// Parses `p` or `p/q` (optional sign, decimal digits).
Rational parse_rational(std::string_view text);

}  // namespace gehm
