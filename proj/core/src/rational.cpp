#include "minkring/rational.hpp"

#include <cctype>

#include "minkring/errors.hpp"

namespace minkring {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  std::string digits;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    if (text[i] == '-') digits.push_back('-');
    ++i;
  }
  std::size_t start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits.push_back(text[i++]);
  if (i == start) throw ParseError("expected digits", i);
  std::string den = "1";
  if (i < text.size() && text[i] == '/') {
    ++i;
    den.clear();
    start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) den.push_back(text[i++]);
    if (i == start) throw ParseError("expected denominator", i);
  }
  if (i != text.size()) throw ParseError("trailing characters in rational", i);
  mpz_class n(digits, 10), d(den, 10);
  if (d == 0) throw DivisionByZero("zero denominator in rational literal");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace minkring
