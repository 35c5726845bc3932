#include "minkring/scalar.hpp"

#include "minkring/errors.hpp"

namespace minkring {

int Scalar::sign() const {
  int sp = sgn(p_), sq = sgn(q_);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // Opposite signs: |p| vs |q|*sqrt2 decided by p^2 vs 2q^2.
  Rational lhs = p_ * p_;
  Rational rhs = 2 * q_ * q_;
  int c = cmp(lhs, rhs);
  return c > 0 ? sp : sq;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  p_ += o.p_;
  q_ += o.q_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  p_ -= o.p_;
  q_ -= o.q_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Rational p = p_ * o.p_ + 2 * q_ * o.q_;
  Rational q = p_ * o.q_ + q_ * o.p_;
  p_ = std::move(p);
  q_ = std::move(q);
  return *this;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
  if (is_rational()) return minkring::to_string(p_);
  std::string rad;
  if (q_ == 1) {
    rad = "sqrt2";
  } else if (q_ == -1) {
    rad = "-sqrt2";
  } else {
    rad = minkring::to_string(q_) + "*sqrt2";
  }
  if (sgn(p_) == 0) return rad;
  if (rad[0] == '-') return minkring::to_string(p_) + rad;
  return minkring::to_string(p_) + "+" + rad;
}

namespace {

// Parses "[rational '*'] sqrt2" with an optional leading sign.
bool parse_radical(std::string_view t, Rational& out) {
  constexpr std::string_view kRoot = "sqrt2";
  if (t.size() < kRoot.size() || t.substr(t.size() - kRoot.size()) != kRoot) return false;
  std::string_view head = t.substr(0, t.size() - kRoot.size());
  if (head.empty() || head == "+") {
    out = 1;
  } else if (head == "-") {
    out = -1;
  } else {
    if (head.back() != '*') return false;
    // A failed coefficient means the text is not a bare radical, not that it is malformed.
    try {
      out = parse_rational(head.substr(0, head.size() - 1));
    } catch (const ParseError&) {
      return false;
    }
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  if (text.empty()) throw ParseError("empty scalar", 0);
  Rational q;
  if (parse_radical(text, q)) return Scalar(0, q);
  // Split at the last sign that is not in leading position.
  for (std::size_t i = text.size(); i-- > 1;) {
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != '/') {
      if (parse_radical(text.substr(i), q)) return Scalar(parse_rational(text.substr(0, i)), q);
      break;
    }
  }
  return Scalar(parse_rational(text));
}

}  // namespace minkring
