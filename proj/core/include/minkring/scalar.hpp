#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "minkring/rational.hpp"

namespace minkring {

// p + q*sqrt(2) with p, q rational.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long p) : p_(p) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational p) : p_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {}

  static Scalar sqrt2() { return Scalar(0, 1); }

  const Rational& rational_part() const { return p_; }
  const Rational& radical_part() const { return q_; }
  bool is_rational() const { return sgn(q_) == 0; }

  // Exact sign, integer arithmetic only.
  int sign() const;

  Scalar operator-() const { return Scalar(-p_, -q_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  Rational p_;
  Rational q_;
};

// Grammar: rational | [rational '*'] "sqrt2" | rational ('+'|'-') [rational '*'] "sqrt2".
Scalar parse_scalar(std::string_view text);

}  // namespace minkring
