#pragma once

#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "minkring/rational.hpp"

namespace minkring {

// Product of named generators with nonzero integer exponents, sorted by name.
class Monomial {
 public:
  using Exponents = std::vector<std::pair<std::string, int>>;

  Monomial() = default;
  explicit Monomial(Exponents exps);
  static Monomial var(std::string name, int e = 1);

  const Exponents& exponents() const { return exps_; }
  int exponent(std::string_view name) const;
  long degree() const;
  bool is_one() const { return exps_.empty(); }
  bool has_negative() const;

  Monomial operator*(const Monomial& o) const;
  Monomial pow(int i) const;

  // "1", "x1*x2^2*z^-1".
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Canonical order: higher degree first, then by the first differing factor
  // (smaller name first, then larger exponent first).
  friend bool operator<(const Monomial& a, const Monomial& b);

 private:
  Exponents exps_;
};

class LaurentPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  LaurentPoly() = default;
  LaurentPoly(long c);                               // NOLINT(google-explicit-constructor)
  LaurentPoly(const Rational& c);                    // NOLINT(google-explicit-constructor)
  LaurentPoly(const Monomial& m, const Rational& c = 1);
  static LaurentPoly var(std::string name, int e = 1);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Coefficient of the unit monomial.
  Rational constant_term() const;
  bool has_negative_exponent() const;
  std::set<std::string> variables() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  // Negative n only for a single-term polynomial.
  LaurentPoly pow(int n) const;

  // Terms in canonical order joined by " + " / " - "; "0" when empty.
  std::string to_string() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add_term(const Monomial& m, const Rational& c);

  Terms terms_;
};

enum class ArithOp { Add, Sub, Mul };

LaurentPoly lp_arith(ArithOp op, const LaurentPoly& f, const LaurentPoly& g);

// x_k -> x_k^i for every generator; i = 0 sends every generator to 1.
LaurentPoly lp_power_map(const LaurentPoly& f, int i);

using Assignment = std::map<std::string, Rational, std::less<>>;

// Partial evaluation; unassigned generators stay symbolic.
LaurentPoly lp_substitute(const LaurentPoly& f, const Assignment& assignment);

LaurentPoly lp_rename(const LaurentPoly& f, const std::map<std::string, std::string>& renaming);

// Ideal membership in Q[t, t^-1] for polynomials in at most one shared variable.
bool univariate_ideal_member(const LaurentPoly& target, std::span<const LaurentPoly> gens);

}  // namespace minkring
