#pragma once

#include <map>
#include <span>
#include <string>

#include "minkring/geometry.hpp"
#include "minkring/rational.hpp"

namespace minkring {

enum class IndicatorMode { Closed, RelativeInterior };

// Finite Q-combination of cell indicators. Invariant: no zero coefficients, and on the Line
// family no breakpoint where the function is continuous, so equal functions have equal terms.
class SimpleFunction {
 public:
  using Terms = std::map<Cell, Rational>;

  explicit SimpleFunction(Ambient ambient);
  SimpleFunction(Ambient ambient, Terms terms);

  const Ambient& ambient() const { return ambient_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  std::string to_string() const;

  SimpleFunction& operator+=(const SimpleFunction& o);
  SimpleFunction& operator-=(const SimpleFunction& o);
  SimpleFunction& operator*=(const Rational& c);

  friend SimpleFunction operator+(SimpleFunction a, const SimpleFunction& b) { return a += b; }
  friend SimpleFunction operator-(SimpleFunction a, const SimpleFunction& b) { return a -= b; }
  friend SimpleFunction operator*(const Rational& c, SimpleFunction f) { return f *= c; }

  friend bool operator==(const SimpleFunction& a, const SimpleFunction& b) {
    return a.ambient_ == b.ambient_ && a.terms_ == b.terms_;
  }

 private:
  void normalize();

  Ambient ambient_;
  Terms terms_;
};

// Ambient defaults to p.natural_ambient(); an explicit one must admit p.
SimpleFunction indicator(const Polytope& p, IndicatorMode mode = IndicatorMode::Closed);
SimpleFunction indicator(const Polytope& p, IndicatorMode mode, const Ambient& ambient);

SimpleFunction combine(std::span<const Rational> coeffs, std::span<const SimpleFunction> fs);

// f as a combination of closed polytopes (inclusion-exclusion over the faces of each cell closure).
std::map<Polytope, Rational> closed_expansion(const SimpleFunction& f);

// Minkowski-ring product: [P]*[Q] = [P+Q] on closed polytopes, extended bilinearly.
SimpleFunction multiply(const SimpleFunction& f, const SimpleFunction& g);

// Function on the product ambient (x, y) -> f(x) g(y).
SimpleFunction tensor(const SimpleFunction& f, const SimpleFunction& g);

Rational evaluate_at(const SimpleFunction& f, std::span<const Scalar> x);
bool is_zero(const SimpleFunction& f);
Rational euler_char(const SimpleFunction& f);

}  // namespace minkring
