#include "gehm/poly.hpp"

#include "gehm/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace gehm {

namespace {

std::pair<std::string_view, long long> split_index(std::string_view name) {
  std::size_t cut = name.size();
  while (cut > 0 && std::isdigit(static_cast<unsigned char>(name[cut - 1]))) --cut;
  if (cut == name.size() || cut == 0) return {name, -1};
  // Keep the comparison total for absurdly long indices.
  if (name.size() - cut > 18) return {name, -1};
  return {name.substr(0, cut), std::stoll(std::string(name.substr(cut)))};
}

}  // namespace

bool variable_name_less(std::string_view a, std::string_view b) {
  auto [pa, ia] = split_index(a);
  auto [pb, ib] = split_index(b);
  if (pa != pb) return pa < pb;
  if (ia != ib) return ia < ib;
  return a < b;
}

bool MultiPoly::TermOrder::operator()(const Exponents& a, const Exponents& b) const {
  const long da = std::accumulate(a.begin(), a.end(), 0L);
  const long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da > db;
  return b < a;
}

MultiPoly::MultiPoly(std::vector<std::string> vars, TermMap terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
  drop_unused_variables();
}

MultiPoly MultiPoly::constant(const BigInt& c) {
  TermMap t;
  if (c != 0) t.emplace(Exponents{}, c);
  return MultiPoly({}, std::move(t));
}

MultiPoly MultiPoly::variable(const std::string& name, int exponent) {
  return monomial(1, {{name, exponent}});
}

MultiPoly MultiPoly::monomial(const BigInt& c, const Monomial& exponents) {
  std::vector<std::string> vars;
  for (const auto& [name, e] : exponents) vars.push_back(name);
  std::sort(vars.begin(), vars.end(), variable_name_less);
  Exponents exps;
  for (const auto& v : vars) exps.push_back(exponents.at(v));
  TermMap t;
  if (c != 0) t.emplace(std::move(exps), c);
  return MultiPoly(std::move(vars), std::move(t));
}

std::vector<MultiPoly::Term> MultiPoly::terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [exps, c] : terms_) {
    Term t{c, {}};
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (exps[i] != 0) t.monomial.emplace(vars_[i], exps[i]);
    out.push_back(std::move(t));
  }
  return out;
}

BigInt MultiPoly::coefficient(const Monomial& m) const {
  Exponents key(vars_.size(), 0);
  for (const auto& [name, e] : m) {
    if (e == 0) continue;
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return 0;
    key[static_cast<std::size_t>(it - vars_.begin())] = e;
  }
  auto found = terms_.find(key);
  return found == terms_.end() ? BigInt(0) : found->second;
}

int MultiPoly::min_exponent(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return 0;
  const auto i = static_cast<std::size_t>(it - vars_.begin());
  int best = 0;
  bool first = true;
  for (const auto& [exps, c] : terms_) {
    if (first || exps[i] < best) best = exps[i];
    first = false;
  }
  return best;
}

int MultiPoly::max_exponent(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return 0;
  const auto i = static_cast<std::size_t>(it - vars_.begin());
  int best = 0;
  bool first = true;
  for (const auto& [exps, c] : terms_) {
    if (first || exps[i] > best) best = exps[i];
    first = false;
  }
  return best;
}

bool MultiPoly::is_polynomial() const {
  for (const auto& [exps, c] : terms_)
    for (int e : exps)
      if (e < 0) return false;
  return true;
}

std::vector<std::string> MultiPoly::merged_variables(const std::vector<std::string>& a,
                                                     const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                 [](const std::string& x, const std::string& y) { return variable_name_less(x, y); });
  return out;
}

void MultiPoly::align_to(const std::vector<std::string>& vars) {
  if (vars == vars_) return;
  std::vector<std::size_t> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i)
    where[i] = static_cast<std::size_t>(std::find(vars.begin(), vars.end(), vars_[i]) - vars.begin());
  TermMap out;
  for (auto& [exps, c] : terms_) {
    Exponents e(vars.size(), 0);
    for (std::size_t i = 0; i < exps.size(); ++i) e[where[i]] = exps[i];
    out.emplace(std::move(e), std::move(c));
  }
  vars_ = vars;
  terms_ = std::move(out);
}

void MultiPoly::drop_unused_variables() {
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [exps, c] : terms_)
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] != 0) used[i] = true;
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) vars.push_back(vars_[i]);
  TermMap out;
  for (auto& [exps, c] : terms_) {
    Exponents e;
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (used[i]) e.push_back(exps[i]);
    out.emplace(std::move(e), std::move(c));
  }
  vars_ = std::move(vars);
  terms_ = std::move(out);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [exps, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (other.is_zero()) return *this;
  const auto vars = merged_variables(vars_, other.vars_);
  align_to(vars);
  MultiPoly rhs = other;
  rhs.align_to(vars);
  for (auto& [exps, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  drop_unused_variables();
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) { return *this += -other; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto vars = MultiPoly::merged_variables(a.vars_, b.vars_);
  MultiPoly lhs = a;
  MultiPoly rhs = b;
  lhs.align_to(vars);
  rhs.align_to(vars);
  MultiPoly::TermMap out;
  MultiPoly::Exponents e(vars.size());
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < vars.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = out.try_emplace(e, BigInt(ca * cb));
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return MultiPoly(vars, std::move(out));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) { return *this = *this * other; }

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(1);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& values) const {
  // Cache of powers per replaced variable, keyed by exponent.
  std::vector<std::map<int, MultiPoly>> cache(vars_.size());
  std::vector<const MultiPoly*> replacement(vars_.size(), nullptr);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = values.find(vars_[i]);
    if (it != values.end()) replacement[i] = &it->second;
  }

  auto power_of = [&](std::size_t i, int e) -> const MultiPoly& {
    auto& slot = cache[i];
    auto it = slot.find(e);
    if (it != slot.end()) return it->second;
    const MultiPoly& value = *replacement[i];
    MultiPoly p;
    if (e >= 0) {
      p = value.pow(static_cast<unsigned>(e));
    } else {
      if (value.term_count() != 1) {
        throw ArithmeticError("cannot substitute a non-monomial for " + vars_[i] +
                              ", which occurs with a negative exponent");
      }
      const auto& [vexps, vc] = *value.terms_.begin();
      if (vc != 1 && vc != -1) {
        throw ArithmeticError("cannot invert the coefficient substituted for " + vars_[i]);
      }
      TermMap inv;
      Exponents neg(vexps.size());
      for (std::size_t k = 0; k < vexps.size(); ++k) neg[k] = -vexps[k];
      inv.emplace(std::move(neg), vc);
      p = MultiPoly(value.vars_, std::move(inv)).pow(static_cast<unsigned>(-e));
    }
    return slot.emplace(e, std::move(p)).first->second;
  };

  MultiPoly result;
  for (const auto& [exps, c] : terms_) {
    Monomial kept;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (replacement[i] == nullptr && exps[i] != 0) kept.emplace(vars_[i], exps[i]);
    MultiPoly term = monomial(c, kept);
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (replacement[i] != nullptr && exps[i] != 0) term *= power_of(i, exps[i]);
    result += term;
  }
  return result;
}

Rational MultiPoly::eval(const std::map<std::string, Rational>& values) const {
  std::vector<Rational> point(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = values.find(vars_[i]);
    if (it == values.end()) throw InvalidArgument("no value given for variable " + vars_[i]);
    point[i] = it->second;
  }
  Rational total = 0;
  for (const auto& [exps, c] : terms_) {
    Rational term = Rational(c);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      const int e = exps[i];
      if (e == 0) continue;
      if (e < 0 && point[i] == 0) {
        throw ArithmeticError("division by zero: " + vars_[i] + "^" + std::to_string(e) + " at 0");
      }
      const Rational base = e > 0 ? point[i] : Rational(1) / point[i];
      term *= power(base, static_cast<unsigned>(e > 0 ? e : -e));
    }
    total += term;
  }
  return total;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [exps, c] : terms_) {
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_[i];
      if (exps[i] != 1) mono += '^' + std::to_string(exps[i]);
    }
    if (mono.empty()) {
      out << magnitude;
    } else if (magnitude == 1) {
      out << mono;
    } else {
      out << magnitude << '*' << mono;
    }
  }
  return out.str();
}

MultiPoly scale(const MultiPoly& p, const BigInt& c) { return p * MultiPoly::constant(c); }

MultiPoly expand_xy(const MultiPoly& t) {
  for (const char* var : {"X", "Y"}) {
    for (const auto& term : t.terms()) {
      auto it = term.monomial.find(var);
      if (it != term.monomial.end() && (it->second < 0 || it->second % 2 != 0)) {
        throw ArithmeticError(std::string("not expandable; gehm may be non-orientable (odd or negative power of ") +
                              var + ")");
      }
    }
  }
  // Halve the exponents, then substitute X2 -> x - 1 and Y2 -> y - 1.
  MultiPoly halved;
  for (const auto& term : t.terms()) {
    MultiPoly::Monomial m;
    for (const auto& [name, e] : term.monomial) {
      if (name == "X") m.emplace("X2", e / 2);
      else if (name == "Y") m.emplace("Y2", e / 2);
      else m.emplace(name, e);
    }
    halved += MultiPoly::monomial(term.coeff, m);
  }
  const MultiPoly one = MultiPoly::constant(1);
  return halved.substitute({{"X2", MultiPoly::variable("x") - one}, {"Y2", MultiPoly::variable("y") - one}});
}

MultiPoly parse_ring_value(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) throw InvalidArgument("empty ring value");
  MultiPoly value;
  if (std::all_of(body.begin(), body.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
    value = MultiPoly::constant(BigInt(std::string(body)));
  } else {
    const bool ident = (std::isalpha(static_cast<unsigned char>(body.front())) || body.front() == '_') &&
                       std::all_of(body.begin(), body.end(), [](char ch) {
                         return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
                       });
    if (!ident) throw InvalidArgument("ring value must be an integer or a variable name: " + std::string(text));
    value = MultiPoly::variable(std::string(body));
  }
  return negative ? -value : value;
}

Rational power(const Rational& base, unsigned exponent) {
  const BigInt num = boost::multiprecision::pow(boost::multiprecision::numerator(base), exponent);
  const BigInt den = boost::multiprecision::pow(boost::multiprecision::denominator(base), exponent);
  return Rational(num, den);
}

bool rational_sqrt(const Rational& value, Rational& root) {
  if (value < 0) return false;
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  const BigInt rn = boost::multiprecision::sqrt(num);
  const BigInt rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return false;
  root = Rational(rn, rd);
  return true;
}

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  auto digits_ok = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den) || den.front() == '-' || den.front() == '+') {
    throw InvalidArgument("not a rational number: " + std::string(text));
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  const BigInt d(std::string{den});
  if (d == 0) throw InvalidArgument("zero denominator: " + std::string(text));
  return Rational(BigInt(n), d);
}

}  // namespace gehm
