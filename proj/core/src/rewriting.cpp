#include "minkring/rewriting.hpp"

#include "minkring/errors.hpp"
#include "minkring/presentations.hpp"

namespace minkring {

namespace {

LaurentPoly var(const char* name, int e = 1) { return LaurentPoly::var(name, e); }

LaurentPoly translate_monomial(Int u, Int v) {
  return LaurentPoly(Monomial({{"x1", static_cast<int>(u)}, {"x2", static_cast<int>(v)}}));
}

// z^m - y^m; zero when m = 0.
LaurentPoly power_difference(const char* y, Int m) {
  return var("z").pow(static_cast<int>(m)) - var(y).pow(static_cast<int>(m));
}

const Presentation& coxeter() {
  static const Presentation p = coxeter_ring();
  return p;
}

LaurentPoly open_sum() {
  return open_cell_poly(TileKind::OpenEdgeU) + open_cell_poly(TileKind::OpenEdgeV) +
         open_cell_poly(TileKind::OpenEdgeS) + open_cell_poly(TileKind::OpenTriUp);
}

}  // namespace

FirstNormalForm first_normal_form(const GridSet& s) {
  NormalFormParams p;
  p.a = s.u_min();
  p.b = s.v_min();
  p.n1 = s.u_max() - s.s_min() + s.v_min();
  p.m2 = s.s_max() - s.u_max() - s.v_min();
  p.n3 = s.u_max() - s.s_max() + s.v_max();
  p.m1 = s.s_max() - s.v_max() - s.u_min();
  p.n2 = s.v_max() - s.s_min() + s.u_min();
  p.m3 = s.s_min() - s.v_min() - s.u_min();
  p.N = s.s_max() - s.u_min() - s.v_min();
  LaurentPoly c = var("z").pow(static_cast<int>(p.N)) - power_difference("y3", p.m3) -
                  var("x1").pow(static_cast<int>(p.m3 + p.n1)) * power_difference("y2", p.m2) -
                  var("x2").pow(static_cast<int>(p.m3 + p.n2)) * power_difference("y1", p.m1);
  return {p, translate_monomial(p.a, p.b) * c};
}

LaurentPoly open_cell_poly(TileKind kind) {
  const LaurentPoly x1 = var("x1"), x2 = var("x2");
  switch (kind) {
    case TileKind::Point:
      return 1L;
    case TileKind::OpenEdgeU:
      return var("y1") - 1 - x1;
    case TileKind::OpenEdgeV:
      return var("y2") - 1 - x2;
    case TileKind::OpenEdgeS:
      return var("y3") - x1 - x2;
    case TileKind::OpenTriUp:
      return var("z") - var("y1") - var("y2") - var("y3") + 1 + x1 + x2;
    case TileKind::OpenTriDown:
      return x1 * x2 * var("z", -1);
  }
  return {};
}

LaurentPoly tile_poly(const Tile& t) { return translate_monomial(t.at.u, t.at.v) * open_cell_poly(t.kind); }

Tile tile_of(const GridCell& c) {
  switch (c.kind) {
    case GridCellKind::Vertex:
      return {TileKind::Point, {c.u, c.v}};
    case GridCellKind::EdgeU:
      return {TileKind::OpenEdgeU, {c.u, c.v}};
    case GridCellKind::EdgeV:
      return {TileKind::OpenEdgeV, {c.u, c.v}};
    case GridCellKind::EdgeS:
      return {TileKind::OpenEdgeS, {c.u, c.v}};
    case GridCellKind::TriUp:
      return {TileKind::OpenTriUp, {c.u, c.v}};
    case GridCellKind::TriDown:
      return {TileKind::OpenTriDown, {c.u, c.v}};
  }
  return {};
}

std::string SecondNormalForm::macro_text() const {
  static const char* kMacro[] = {"1", "oy1", "oy2", "oy3", "oz", "z^-1"};
  std::string s;
  for (const auto& [t, c] : tiles) {
    Int u = t.at.u, v = t.at.v;
    if (t.kind == TileKind::OpenTriDown) {
      ++u;
      ++v;
    }
    std::string factors = Monomial({{"x1", static_cast<int>(u)}, {"x2", static_cast<int>(v)}}).to_string();
    std::string body;
    if (factors == "1") {
      body = kMacro[static_cast<int>(t.kind)];
    } else {
      body = factors;
      if (t.kind != TileKind::Point) body += std::string("*") + kMacro[static_cast<int>(t.kind)];
    }
    bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (mag != 1) body = to_string(mag) + "*" + body;
    if (s.empty()) {
      s = negative ? "-" + body : body;
    } else {
      s += (negative ? " - " : " + ") + body;
    }
  }
  return s.empty() ? "0" : s;
}

SecondNormalForm second_normal_form(const GridSet& s) { return second_normal_form(indicator(s)); }

SecondNormalForm second_normal_form(const SimpleFunction& f) {
  if (f.ambient().family != Family::Grid) throw FamilyMismatch("second normal form needs the grid ambient");
  SecondNormalForm out;
  for (const auto& [cell, c] : f.terms()) {
    Tile t = tile_of(cell.as<GridCell>());
    out.poly += LaurentPoly(c) * tile_poly(t);
    out.tiles.emplace_back(t, c);
  }
  return out;
}

LaurentPoly complete_homogeneous(int j) {
  LaurentPoly h;
  for (int i = 0; i <= j; ++i) h += LaurentPoly(Monomial({{"x1", i}, {"x2", j - i}}));
  return h;
}

LaurentPoly tiling_sum(int k) {
  LaurentPoly f;
  for (int j = 0; j <= k; ++j) f += complete_homogeneous(j);
  return f;
}

LaurentPoly zn_tiling(int n) {
  if (n < 0) throw ArityError("zn_tiling needs n >= 0");
  if (n == 0) return 1L;
  return tiling_sum(n) + tiling_sum(n - 1) * open_sum() + tiling_sum(n - 2) * open_cell_poly(TileKind::OpenTriDown);
}

LaurentPoly y_tiling(TilingAxis axis, int n) {
  if (n < 1) throw ArityError("y_tiling needs n >= 1");
  if (axis == TilingAxis::Y3) return complete_homogeneous(n) + open_cell_poly(TileKind::OpenEdgeS) * complete_homogeneous(n - 1);
  const char* x = axis == TilingAxis::Y ? "x" : (axis == TilingAxis::Y1 ? "x1" : "x2");
  const char* y = axis == TilingAxis::Y ? "y" : (axis == TilingAxis::Y1 ? "y1" : "y2");
  LaurentPoly open = var(y) - 1 - var(x);
  LaurentPoly points, edges;
  for (int i = 0; i <= n; ++i) points += var(x, i);
  for (int i = 0; i < n; ++i) edges += var(x, i);
  return points + open * edges;
}

StripReport strip_report(int n) {
  if (n < 1) throw ArityError("strip needs n >= 1");
  const Presentation& p = coxeter();
  const LaurentPoly x1 = var("x1"), x2 = var("x2"), y3 = var("y3"), z = var("z");
  LaurentPoly rhs = complete_homogeneous(n) + complete_homogeneous(n - 1) * open_sum() +
                    complete_homogeneous(n - 2) * open_cell_poly(TileKind::OpenTriDown);
  StripReport r;
  r.strip = kernel_member(p, z.pow(n) - z.pow(n - 1) - rhs);
  LaurentPoly reduced_lhs = y3.pow(n - 1) * z - y3.pow(n - 1);
  r.reduced = kernel_member(p, reduced_lhs - rhs);
  LaurentPoly step_lhs = y3.pow(n) * z - y3.pow(n) - x1 * reduced_lhs;
  LaurentPoly step_rhs = x2.pow(n + 1) + x2.pow(n) * (z - 1 - x1 - x2) + x1 * x2.pow(n) * var("z", -1);
  r.step = kernel_member(p, step_lhs - step_rhs);
  r.core = kernel_member(p, (y3 - x1) * (z - 1) - x2 * (z - 1 - x1 + x1 * var("z", -1)));
  return r;
}

bool verify_strip(int n) { return strip_report(n).all(); }

}  // namespace minkring
