#include "minkring/laurent.hpp"

#include <algorithm>
#include <climits>

#include "minkring/errors.hpp"

namespace minkring {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Exponents exps) {
  std::sort(exps.begin(), exps.end());
  for (auto& [name, e] : exps) {
    if (!exps_.empty() && exps_.back().first == name) {
      exps_.back().second += e;
    } else {
      exps_.emplace_back(std::move(name), e);
    }
  }
  std::erase_if(exps_, [](const auto& p) { return p.second == 0; });
}

Monomial Monomial::var(std::string name, int e) { return Monomial({{std::move(name), e}}); }

int Monomial::exponent(std::string_view name) const {
  for (const auto& [n, e] : exps_) {
    if (n == name) return e;
  }
  return 0;
}

long Monomial::degree() const {
  long d = 0;
  for (const auto& p : exps_) d += p.second;
  return d;
}

bool Monomial::has_negative() const {
  return std::any_of(exps_.begin(), exps_.end(), [](const auto& p) { return p.second < 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  auto a = exps_.begin(), b = o.exps_.begin();
  while (a != exps_.end() || b != o.exps_.end()) {
    if (b == o.exps_.end() || (a != exps_.end() && a->first < b->first)) {
      out.exps_.push_back(*a++);
    } else if (a == exps_.end() || b->first < a->first) {
      out.exps_.push_back(*b++);
    } else {
      long e = static_cast<long>(a->second) + b->second;
      if (e > INT_MAX || e < INT_MIN) throw ArityError("exponent overflow");
      if (e != 0) out.exps_.emplace_back(a->first, static_cast<int>(e));
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::pow(int i) const {
  if (i == 0) return {};
  Monomial out = *this;
  for (auto& p : out.exps_) {
    long e = static_cast<long>(p.second) * i;
    if (e > INT_MAX || e < INT_MIN) throw ArityError("exponent overflow");
    p.second = static_cast<int>(e);
  }
  return out;
}

std::string Monomial::to_string() const {
  if (exps_.empty()) return "1";
  std::string s;
  for (const auto& [name, e] : exps_) {
    if (!s.empty()) s += "*";
    s += name;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

bool operator<(const Monomial& a, const Monomial& b) {
  long da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  const auto& x = a.exps_;
  const auto& y = b.exps_;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (x[i].first != y[i].first) return x[i].first < y[i].first;
    if (x[i].second != y[i].second) return x[i].second > y[i].second;
  }
  return x.size() > y.size();
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Monomial(), c);
}

LaurentPoly::LaurentPoly(const Monomial& m, const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(m, c);
}

LaurentPoly LaurentPoly::var(std::string name, int e) { return LaurentPoly(Monomial::var(std::move(name), e)); }

bool LaurentPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

Rational LaurentPoly::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Rational(0) : it->second;
}

bool LaurentPoly::has_negative_exponent() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.has_negative(); });
}

std::set<std::string> LaurentPoly::variables() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& p : m.exponents()) out.insert(p.first);
  }
  return out;
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& kv : out.terms_) kv.second = -kv.second;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, Rational(-c));
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, Rational(ca * cb));
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::pow(int n) const {
  if (n < 0) {
    if (terms_.size() != 1) throw NegativeExponent("negative power of a non-monomial");
    const auto& [m, c] = *terms_.begin();
    Rational inv = 1 / c;
    Rational cn = 1;
    for (int i = 0; i < -n; ++i) cn *= inv;
    return LaurentPoly(m.pow(n), cn);
  }
  LaurentPoly out(1L), base = *this;
  for (unsigned e = static_cast<unsigned>(n); e; e >>= 1) {
    if (e & 1) out *= base;
    if (e > 1) base *= base;
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      s += minkring::to_string(mag);
    } else if (mag == 1) {
      s += m.to_string();
    } else {
      s += minkring::to_string(mag) + "*" + m.to_string();
    }
  }
  return s;
}

// ---------------------------------------------------------------- operations

LaurentPoly lp_arith(ArithOp op, const LaurentPoly& f, const LaurentPoly& g) {
  switch (op) {
    case ArithOp::Add:
      return f + g;
    case ArithOp::Sub:
      return f - g;
    case ArithOp::Mul:
      return f * g;
  }
  return {};
}

LaurentPoly lp_power_map(const LaurentPoly& f, int i) {
  LaurentPoly out;
  for (const auto& [m, c] : f.terms()) out += LaurentPoly(m.pow(i), c);
  return out;
}

LaurentPoly lp_substitute(const LaurentPoly& f, const Assignment& assignment) {
  LaurentPoly out;
  for (const auto& [m, c] : f.terms()) {
    Rational coeff = c;
    Monomial::Exponents rest;
    for (const auto& [name, e] : m.exponents()) {
      auto it = assignment.find(name);
      if (it == assignment.end()) {
        rest.emplace_back(name, e);
        continue;
      }
      const Rational& val = it->second;
      if (sgn(val) == 0) {
        if (e < 0) throw DivisionByZero("zero assigned to " + name + " with negative exponent");
        coeff = 0;
        break;
      }
      Rational base = e > 0 ? val : Rational(1 / val);
      for (int k = 0; k < std::abs(e); ++k) coeff *= base;
    }
    if (sgn(coeff) != 0) out += LaurentPoly(Monomial(std::move(rest)), coeff);
  }
  return out;
}

LaurentPoly lp_rename(const LaurentPoly& f, const std::map<std::string, std::string>& renaming) {
  LaurentPoly out;
  for (const auto& [m, c] : f.terms()) {
    Monomial::Exponents exps;
    for (const auto& [name, e] : m.exponents()) {
      auto it = renaming.find(name);
      exps.emplace_back(it == renaming.end() ? name : it->second, e);
    }
    out += LaurentPoly(Monomial(std::move(exps)), c);
  }
  return out;
}

namespace {

using Dense = std::vector<Rational>;  // coefficient of t^i at index i

void trim(Dense& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Dense form after dividing out the lowest power of the variable (a unit).
Dense unit_normalized(const LaurentPoly& f, const std::string& var) {
  if (f.is_zero()) return {};
  int lo = INT_MAX, hi = INT_MIN;
  for (const auto& [m, c] : f.terms()) {
    int e = m.exponent(var);
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  Dense out(static_cast<std::size_t>(hi - lo) + 1);
  for (const auto& [m, c] : f.terms()) out[m.exponent(var) - lo] += c;
  return out;
}

// Remainder of a modulo b; b nonzero.
Dense remainder(Dense a, const Dense& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    trim(a);
  }
  return a;
}

Dense gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool univariate_ideal_member(const LaurentPoly& target, std::span<const LaurentPoly> gens) {
  std::set<std::string> vars = target.variables();
  for (const auto& g : gens) {
    auto v = g.variables();
    vars.insert(v.begin(), v.end());
  }
  if (vars.size() > 1) throw ArityError("univariate_ideal_member needs at most one variable");
  if (target.is_zero()) return true;
  const std::string var = vars.empty() ? std::string() : *vars.begin();
  Dense g;
  for (const auto& gen : gens) g = gcd(std::move(g), unit_normalized(gen, var));
  if (g.empty()) return false;
  return remainder(unit_normalized(target, var), g).empty();
}

}  // namespace minkring
