#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace minkring {

using Rational = mpq_class;

// "3", "-1/2"; always in lowest terms.
std::string to_string(const Rational& q);

// Accepts an optional sign, digits, and an optional "/digits" part.
Rational parse_rational(std::string_view text);

inline int sign(const Rational& q) { return sgn(q); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace minkring
