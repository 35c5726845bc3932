#include "minkring/simplefn.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "minkring/errors.hpp"

namespace minkring {

namespace {

void require_same(const Ambient& a, const Ambient& b) {
  if (!(a == b)) throw AmbientMismatch("ambient mismatch: " + a.to_string() + " vs " + b.to_string());
}

bool cell_fits(const Cell& c, const Ambient& ambient) {
  if (c.family() != ambient.family) return false;
  switch (ambient.family) {
    case Family::Grid:
      return true;
    case Family::Box:
      return c.as<BoxCell>().dim == ambient.box_dim;
    case Family::Line: {
      const auto& l = c.as<LineCell>();
      return ambient.line_mode == LineMode::Sqrt2 || (l.lo.is_rational() && l.hi.is_rational());
    }
    case Family::Product: {
      const auto& parts = c.as<ProductCell>().parts;
      if (parts.size() != ambient.factors.size()) return false;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!cell_fits(parts[i], ambient.factors[i])) return false;
      }
      return true;
    }
  }
  return false;
}

// Rebuilds a 1-D function with only its true discontinuities as breakpoints.
SimpleFunction::Terms canonical_line(const SimpleFunction::Terms& terms) {
  std::vector<Scalar> bp;
  for (const auto& [cell, c] : terms) {
    const auto& l = cell.as<LineCell>();
    bp.push_back(l.lo);
    bp.push_back(l.hi);
  }
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
  const std::size_t k = bp.size();
  if (k == 0) return {};
  auto index = [&](const Scalar& s) {
    return static_cast<std::size_t>(std::lower_bound(bp.begin(), bp.end(), s) - bp.begin());
  };
  // Slot 2i is the point bp[i]; slot 2i+1 the gap (bp[i], bp[i+1]).
  std::vector<Rational> diff(2 * k);
  for (const auto& [cell, c] : terms) {
    const auto& l = cell.as<LineCell>();
    std::size_t lo = index(l.lo);
    if (l.is_point()) {
      diff[2 * lo] += c;
      diff[2 * lo + 1] -= c;
    } else {
      diff[2 * lo + 1] += c;
      diff[2 * index(l.hi)] -= c;
    }
  }
  std::vector<Rational> val(2 * k - 1);
  Rational run;
  for (std::size_t s = 0; s + 1 < 2 * k; ++s) {
    run += diff[s];
    val[s] = run;
  }
  auto gap = [&](std::ptrdiff_t i) -> Rational {
    if (i < 0 || i >= static_cast<std::ptrdiff_t>(k) - 1) return 0;
    return val[2 * i + 1];
  };
  std::vector<bool> absorbed(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto g = static_cast<std::ptrdiff_t>(i);
    absorbed[i] = val[2 * i] == gap(g - 1) && val[2 * i] == gap(g);
  }
  SimpleFunction::Terms out;
  for (std::size_t i = 0; i < k; ++i) {
    if (!absorbed[i] && sgn(val[2 * i]) != 0) out.emplace(LineCell{bp[i], bp[i]}, val[2 * i]);
  }
  for (std::size_t i = 0; i + 1 < k;) {
    std::size_t j = i + 1;
    while (j + 1 < k && absorbed[j]) ++j;
    Rational v = gap(static_cast<std::ptrdiff_t>(i));
    if (sgn(v) != 0) out.emplace(LineCell{bp[i], bp[j]}, v);
    i = j;
  }
  return out;
}

void accumulate(SimpleFunction::Terms& acc, const Cell& c, const Rational& coeff) {
  auto [it, inserted] = acc.try_emplace(c, coeff);
  if (!inserted) it->second += coeff;
}

}  // namespace

SimpleFunction::SimpleFunction(Ambient ambient) : ambient_(std::move(ambient)) {}

SimpleFunction::SimpleFunction(Ambient ambient, Terms terms) : ambient_(std::move(ambient)), terms_(std::move(terms)) {
  for (const auto& [cell, c] : terms_) {
    if (!cell_fits(cell, ambient_)) throw AmbientMismatch("cell " + cell.to_string() + " outside " + ambient_.to_string());
  }
  normalize();
}

void SimpleFunction::normalize() {
  std::erase_if(terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
  if (ambient_.family == Family::Line) terms_ = canonical_line(terms_);
}

std::string SimpleFunction::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [cell, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += minkring::to_string(c) + "*" + cell.to_string();
  }
  return s;
}

SimpleFunction& SimpleFunction::operator+=(const SimpleFunction& o) {
  require_same(ambient_, o.ambient_);
  for (const auto& [cell, c] : o.terms_) accumulate(terms_, cell, c);
  normalize();
  return *this;
}

SimpleFunction& SimpleFunction::operator-=(const SimpleFunction& o) {
  require_same(ambient_, o.ambient_);
  for (const auto& [cell, c] : o.terms_) accumulate(terms_, cell, Rational(-c));
  normalize();
  return *this;
}

SimpleFunction& SimpleFunction::operator*=(const Rational& c) {
  for (auto& [cell, v] : terms_) v *= c;
  normalize();
  return *this;
}

SimpleFunction indicator(const Polytope& p, IndicatorMode mode) { return indicator(p, mode, p.natural_ambient()); }

SimpleFunction indicator(const Polytope& p, IndicatorMode mode, const Ambient& ambient) {
  if (!fits(p, ambient)) throw AmbientMismatch(p.to_string() + " does not live in " + ambient.to_string());
  auto cells = mode == IndicatorMode::Closed ? decompose_cells(p) : relative_interior_cells(p);
  SimpleFunction::Terms terms;
  for (auto& c : cells) terms.emplace(std::move(c), 1);
  return SimpleFunction(ambient, std::move(terms));
}

SimpleFunction combine(std::span<const Rational> coeffs, std::span<const SimpleFunction> fs) {
  if (coeffs.size() != fs.size()) throw ArityError("combine needs one coefficient per function");
  if (fs.empty()) throw ArityError("combine needs at least one function");
  SimpleFunction::Terms acc;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    require_same(fs[0].ambient(), fs[i].ambient());
    for (const auto& [cell, c] : fs[i].terms()) accumulate(acc, cell, Rational(coeffs[i] * c));
  }
  return SimpleFunction(fs[0].ambient(), std::move(acc));
}

std::map<Polytope, Rational> closed_expansion(const SimpleFunction& f) {
  std::map<Polytope, Rational> out;
  for (const auto& [cell, c] : f.terms()) {
    const int d = cell.dim();
    for (auto& face : faces(cell.closure())) {
      Rational coeff = ((d - face.dim()) % 2 == 0) ? c : Rational(-c);
      auto [it, inserted] = out.try_emplace(std::move(face), coeff);
      if (!inserted) it->second += coeff;
    }
  }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

SimpleFunction multiply(const SimpleFunction& f, const SimpleFunction& g) {
  require_same(f.ambient(), g.ambient());
  auto cf = closed_expansion(f);
  auto cg = closed_expansion(g);
  SimpleFunction::Terms acc;
  for (const auto& [p, a] : cf) {
    for (const auto& [q, b] : cg) {
      Rational ab = a * b;
      for (const auto& cell : decompose_cells(minkowski_sum(p, q))) accumulate(acc, cell, ab);
    }
  }
  return SimpleFunction(f.ambient(), std::move(acc));
}

SimpleFunction tensor(const SimpleFunction& f, const SimpleFunction& g) {
  Ambient amb = Ambient::product({f.ambient(), g.ambient()});
  SimpleFunction::Terms acc;
  for (const auto& [cf, a] : f.terms()) {
    for (const auto& [cg, b] : g.terms()) acc.emplace(ProductCell{{cf, cg}}, a * b);
  }
  return SimpleFunction(std::move(amb), std::move(acc));
}

Rational evaluate_at(const SimpleFunction& f, std::span<const Scalar> x) {
  if (static_cast<int>(x.size()) != f.ambient().coordinate_count()) throw ArityError("point has wrong coordinate count");
  Rational sum;
  for (const auto& [cell, c] : f.terms()) {
    if (cell.contains(x)) sum += c;
  }
  return sum;
}

bool is_zero(const SimpleFunction& f) { return f.terms().empty(); }

Rational euler_char(const SimpleFunction& f) {
  Rational sum;
  for (const auto& [cell, c] : f.terms()) {
    if (cell.dim() % 2 == 0) {
      sum += c;
    } else {
      sum -= c;
    }
  }
  return sum;
}

}  // namespace minkring
