#include "minkring/geometry.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "minkring/errors.hpp"

namespace minkring {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Int floor_of(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f.get_si();
}

const Rational& require_rational(const Scalar& s) {
  if (!s.is_rational()) throw FamilyMismatch("lattice coordinate must be rational");
  return s.rational_part();
}

Int require_integer(const Scalar& s) {
  const Rational& q = require_rational(s);
  if (!is_integer(q)) throw FamilyMismatch("lattice point coordinate must be an integer");
  return q.get_num().get_si();
}

std::vector<std::vector<Polytope>> cartesian(const std::vector<std::vector<Polytope>>& lists) {
  std::vector<std::vector<Polytope>> out{{}};
  for (const auto& list : lists) {
    std::vector<std::vector<Polytope>> next;
    for (const auto& prefix : out) {
      for (const auto& item : list) {
        next.push_back(prefix);
        next.back().push_back(item);
      }
    }
    out = std::move(next);
  }
  return out;
}

int factor_coordinate_count(const Polytope& p) { return p.natural_ambient().coordinate_count(); }

}  // namespace

// ---------------------------------------------------------------- Ambient

Ambient Ambient::grid() { return Ambient{}; }

Ambient Ambient::box(int d) {
  if (d < 1 || d > kMaxBoxDim) throw FamilyMismatch("box dimension out of range");
  Ambient a;
  a.family = Family::Box;
  a.box_dim = d;
  return a;
}

Ambient Ambient::line(LineMode mode) {
  Ambient a;
  a.family = Family::Line;
  a.line_mode = mode;
  return a;
}

Ambient Ambient::product(std::vector<Ambient> factors) {
  if (factors.empty()) throw FamilyMismatch("product ambient needs factors");
  for (const auto& f : factors) {
    if (f.family == Family::Line) throw FamilyMismatch("1-D scalar intervals cannot be product factors");
  }
  Ambient a;
  a.family = Family::Product;
  a.factors = std::move(factors);
  return a;
}

int Ambient::coordinate_count() const {
  switch (family) {
    case Family::Grid:
      return 2;
    case Family::Box:
      return box_dim;
    case Family::Line:
      return 1;
    case Family::Product: {
      int n = 0;
      for (const auto& f : factors) n += f.coordinate_count();
      return n;
    }
  }
  return 0;
}

std::string Ambient::to_string() const {
  switch (family) {
    case Family::Grid:
      return "grid";
    case Family::Box:
      return "box" + std::to_string(box_dim);
    case Family::Line:
      return line_mode == LineMode::Rational ? "line" : "line-sqrt2";
    case Family::Product: {
      std::string s = "product(";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += ",";
        s += factors[i].to_string();
      }
      return s + ")";
    }
  }
  return "";
}

bool operator==(const Ambient& a, const Ambient& b) {
  if (a.family != b.family) return false;
  switch (a.family) {
    case Family::Grid:
      return true;
    case Family::Box:
      return a.box_dim == b.box_dim;
    case Family::Line:
      return a.line_mode == b.line_mode;
    case Family::Product:
      return a.factors == b.factors;
  }
  return false;
}

// ---------------------------------------------------------------- GridSet

GridSet::GridSet(Int u_min, Int u_max, Int v_min, Int v_max, Int s_min, Int s_max)
    : u_min_(u_min), u_max_(u_max), v_min_(v_min), v_max_(v_max), s_min_(s_min), s_max_(s_max) {
  for (;;) {
    if (u_min_ > u_max_ || v_min_ > v_max_ || s_min_ > s_max_) throw EmptyPolytope("empty grid set");
    GridSet before = *this;
    u_max_ = std::min(u_max_, s_max_ - v_min_);
    u_min_ = std::max(u_min_, s_min_ - v_max_);
    v_max_ = std::min(v_max_, s_max_ - u_min_);
    v_min_ = std::max(v_min_, s_min_ - u_max_);
    s_max_ = std::min(s_max_, u_max_ + v_max_);
    s_min_ = std::max(s_min_, u_min_ + v_min_);
    if (before == *this) break;
  }
}

GridSet GridSet::point(GridPoint p) { return GridSet(p.u, p.u, p.v, p.v, p.u + p.v, p.u + p.v); }

GridSet GridSet::hull(GridPoint a, GridPoint b) {
  return GridSet(std::min(a.u, b.u), std::max(a.u, b.u), std::min(a.v, b.v), std::max(a.v, b.v),
                 std::min(a.u + a.v, b.u + b.v), std::max(a.u + a.v, b.u + b.v));
}

GridSet GridSet::triangle(Int n) { return GridSet(0, n, 0, n, 0, n); }

GridSet GridSet::down_triangle(Int n) { return GridSet(0, n, 0, n, n, 2 * n); }

GridSet GridSet::parallelogram(Int a, Int b) { return GridSet(0, a, 0, b, 0, a + b); }

int GridSet::dim() const {
  int degenerate = (u_min_ == u_max_) + (v_min_ == v_max_) + (s_min_ == s_max_);
  if (degenerate == 0) return 2;
  if (degenerate == 1) return 1;
  return 0;
}

std::vector<GridPoint> GridSet::vertices() const {
  const GridPoint cand[6] = {
      {s_min_ - v_min_, v_min_}, {u_max_, v_min_},        {u_max_, s_max_ - u_max_},
      {s_max_ - v_max_, v_max_}, {u_min_, v_max_},        {u_min_, s_min_ - u_min_},
  };
  std::vector<GridPoint> out;
  for (const auto& p : cand) {
    if (out.empty() || out.back() != p) out.push_back(p);
  }
  while (out.size() > 1 && out.front() == out.back()) out.pop_back();
  // A segment traversed both ways lists its endpoints twice.
  if (out.size() > 2 && dim() < 2) {
    std::vector<GridPoint> uniq;
    for (const auto& p : out) {
      if (std::find(uniq.begin(), uniq.end(), p) == uniq.end()) uniq.push_back(p);
    }
    out = std::move(uniq);
  }
  return out;
}

bool GridSet::contains(GridPoint p) const {
  Int s = p.u + p.v;
  return u_min_ <= p.u && p.u <= u_max_ && v_min_ <= p.v && p.v <= v_max_ && s_min_ <= s && s <= s_max_;
}

bool GridSet::contains(const Rational& u, const Rational& v) const {
  Rational s = u + v;
  return u_min_ <= u && u <= u_max_ && v_min_ <= v && v <= v_max_ && s_min_ <= s && s <= s_max_;
}

// ---------------------------------------------------------------- comparisons

std::strong_ordering operator<=>(const LinePolytope& a, const LinePolytope& b) {
  if (auto c = a.lo <=> b.lo; c != 0) return c;
  return a.hi <=> b.hi;
}

bool operator==(const ProductPolytope& a, const ProductPolytope& b) { return a.factors == b.factors; }

std::strong_ordering operator<=>(const ProductPolytope& a, const ProductPolytope& b) {
  return std::lexicographical_compare_three_way(a.factors.begin(), a.factors.end(), b.factors.begin(),
                                                b.factors.end());
}

std::strong_ordering operator<=>(const Polytope& a, const Polytope& b) {
  if (a.rep_.index() != b.rep_.index()) return a.rep_.index() <=> b.rep_.index();
  return std::visit(
      [&](const auto& x) -> std::strong_ordering {
        using T = std::decay_t<decltype(x)>;
        return x <=> std::get<T>(b.rep_);
      },
      a.rep_);
}

std::strong_ordering operator<=>(const LineCell& a, const LineCell& b) {
  if (auto c = a.lo <=> b.lo; c != 0) return c;
  return a.hi <=> b.hi;
}

bool operator==(const ProductCell& a, const ProductCell& b) { return a.parts == b.parts; }

std::strong_ordering operator<=>(const ProductCell& a, const ProductCell& b) {
  return std::lexicographical_compare_three_way(a.parts.begin(), a.parts.end(), b.parts.begin(), b.parts.end());
}

std::strong_ordering operator<=>(const Cell& a, const Cell& b) {
  if (a.rep_.index() != b.rep_.index()) return a.rep_.index() <=> b.rep_.index();
  return std::visit(
      [&](const auto& x) -> std::strong_ordering {
        using T = std::decay_t<decltype(x)>;
        return x <=> std::get<T>(b.rep_);
      },
      a.rep_);
}

// ---------------------------------------------------------------- Polytope

Polytope::Polytope(GridSet g) : rep_(g) {}

Polytope::Polytope(BoxPolytope b) : rep_(std::move(b)) {
  const auto& axes = std::get<BoxPolytope>(rep_).axes;
  if (axes.empty() || static_cast<int>(axes.size()) > kMaxBoxDim) throw FamilyMismatch("box dimension out of range");
  for (const auto& a : axes) {
    if (a.lo > a.hi) throw EmptyPolytope("box axis with lo > hi");
  }
}

Polytope::Polytope(LinePolytope l) : rep_(std::move(l)) {
  const auto& line = std::get<LinePolytope>(rep_);
  if (line.lo > line.hi) throw EmptyPolytope("interval with lo > hi");
}

Polytope::Polytope(ProductPolytope p) : rep_(std::move(p)) {
  const auto& fs = std::get<ProductPolytope>(rep_).factors;
  if (fs.empty()) throw FamilyMismatch("product needs factors");
  for (const auto& f : fs) {
    if (f.family() == Family::Line) throw FamilyMismatch("1-D scalar intervals cannot be product factors");
  }
}

Polytope Polytope::origin(const Ambient& ambient) {
  switch (ambient.family) {
    case Family::Grid:
      return GridSet::point({0, 0});
    case Family::Box:
      return box(std::vector<AxisRange>(ambient.box_dim));
    case Family::Line:
      return interval(0, 0);
    case Family::Product: {
      std::vector<Polytope> fs;
      for (const auto& f : ambient.factors) fs.push_back(origin(f));
      return product(std::move(fs));
    }
  }
  throw FamilyMismatch("unknown family");
}

Polytope Polytope::point(const Ambient& ambient, std::span<const Scalar> coords) {
  if (static_cast<int>(coords.size()) != ambient.coordinate_count()) throw ArityError("point has wrong coordinate count");
  switch (ambient.family) {
    case Family::Grid:
      return GridSet::point({require_integer(coords[0]), require_integer(coords[1])});
    case Family::Box: {
      std::vector<AxisRange> axes;
      for (const auto& c : coords) {
        Int k = require_integer(c);
        axes.push_back({k, k});
      }
      return box(std::move(axes));
    }
    case Family::Line:
      return interval(coords[0], coords[0]);
    case Family::Product: {
      std::vector<Polytope> fs;
      std::size_t at = 0;
      for (const auto& f : ambient.factors) {
        std::size_t n = f.coordinate_count();
        fs.push_back(point(f, coords.subspan(at, n)));
        at += n;
      }
      return product(std::move(fs));
    }
  }
  throw FamilyMismatch("unknown family");
}

Polytope Polytope::interval(Scalar lo, Scalar hi) { return LinePolytope{std::move(lo), std::move(hi)}; }

Polytope Polytope::box(std::vector<AxisRange> axes) { return BoxPolytope{std::move(axes)}; }

Polytope Polytope::product(std::vector<Polytope> factors) { return ProductPolytope{std::move(factors)}; }

int Polytope::dim() const {
  return std::visit(Overloaded{
                        [](const GridSet& g) { return g.dim(); },
                        [](const BoxPolytope& b) {
                          int d = 0;
                          for (const auto& a : b.axes) d += a.lo < a.hi;
                          return d;
                        },
                        [](const LinePolytope& l) { return l.lo < l.hi ? 1 : 0; },
                        [](const ProductPolytope& p) {
                          int d = 0;
                          for (const auto& f : p.factors) d += f.dim();
                          return d;
                        },
                    },
                    rep_);
}

Ambient Polytope::natural_ambient() const {
  return std::visit(Overloaded{
                        [](const GridSet&) { return Ambient::grid(); },
                        [](const BoxPolytope& b) { return Ambient::box(static_cast<int>(b.axes.size())); },
                        [](const LinePolytope& l) {
                          bool rational = l.lo.is_rational() && l.hi.is_rational();
                          return Ambient::line(rational ? LineMode::Rational : LineMode::Sqrt2);
                        },
                        [](const ProductPolytope& p) {
                          std::vector<Ambient> fs;
                          for (const auto& f : p.factors) fs.push_back(f.natural_ambient());
                          return Ambient::product(std::move(fs));
                        },
                    },
                    rep_);
}

std::vector<Scalar> Polytope::point_coordinates() const {
  if (dim() != 0) throw ArityError("point_coordinates needs a point");
  return std::visit(Overloaded{
                        [](const GridSet& g) { return std::vector<Scalar>{g.u_min(), g.v_min()}; },
                        [](const BoxPolytope& b) {
                          std::vector<Scalar> out;
                          for (const auto& a : b.axes) out.emplace_back(a.lo);
                          return out;
                        },
                        [](const LinePolytope& l) { return std::vector<Scalar>{l.lo}; },
                        [](const ProductPolytope& p) {
                          std::vector<Scalar> out;
                          for (const auto& f : p.factors) {
                            auto c = f.point_coordinates();
                            out.insert(out.end(), c.begin(), c.end());
                          }
                          return out;
                        },
                    },
                    rep_);
}

std::string Polytope::to_string() const {
  return std::visit(Overloaded{
                        [](const GridSet& g) {
                          std::ostringstream os;
                          os << "grid[u:" << g.u_min() << ".." << g.u_max() << ",v:" << g.v_min() << ".."
                             << g.v_max() << ",s:" << g.s_min() << ".." << g.s_max() << "]";
                          return os.str();
                        },
                        [](const BoxPolytope& b) {
                          std::ostringstream os;
                          os << "box";
                          for (const auto& a : b.axes) os << "[" << a.lo << ".." << a.hi << "]";
                          return os.str();
                        },
                        [](const LinePolytope& l) { return "[" + l.lo.to_string() + "," + l.hi.to_string() + "]"; },
                        [](const ProductPolytope& p) {
                          std::string s;
                          for (std::size_t i = 0; i < p.factors.size(); ++i) {
                            if (i) s += " x ";
                            s += "(" + p.factors[i].to_string() + ")";
                          }
                          return s;
                        },
                    },
                    rep_);
}

bool fits(const Polytope& p, const Ambient& ambient) {
  if (p.family() != ambient.family) return false;
  switch (ambient.family) {
    case Family::Grid:
      return true;
    case Family::Box:
      return static_cast<int>(p.as<BoxPolytope>().axes.size()) == ambient.box_dim;
    case Family::Line: {
      const auto& l = p.as<LinePolytope>();
      return ambient.line_mode == LineMode::Sqrt2 || (l.lo.is_rational() && l.hi.is_rational());
    }
    case Family::Product: {
      const auto& fs = p.as<ProductPolytope>().factors;
      if (fs.size() != ambient.factors.size()) return false;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        if (!fits(fs[i], ambient.factors[i])) return false;
      }
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------- operations

Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
  if (a.family() != b.family()) throw FamilyMismatch("Minkowski sum of different families");
  switch (a.family()) {
    case Family::Grid: {
      const auto& x = a.as<GridSet>();
      const auto& y = b.as<GridSet>();
      return GridSet(x.u_min() + y.u_min(), x.u_max() + y.u_max(), x.v_min() + y.v_min(), x.v_max() + y.v_max(),
                     x.s_min() + y.s_min(), x.s_max() + y.s_max());
    }
    case Family::Box: {
      const auto& x = a.as<BoxPolytope>().axes;
      const auto& y = b.as<BoxPolytope>().axes;
      if (x.size() != y.size()) throw FamilyMismatch("Minkowski sum of boxes of different dimension");
      std::vector<AxisRange> axes(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) axes[i] = {x[i].lo + y[i].lo, x[i].hi + y[i].hi};
      return Polytope::box(std::move(axes));
    }
    case Family::Line: {
      const auto& x = a.as<LinePolytope>();
      const auto& y = b.as<LinePolytope>();
      return Polytope::interval(x.lo + y.lo, x.hi + y.hi);
    }
    case Family::Product: {
      const auto& x = a.as<ProductPolytope>().factors;
      const auto& y = b.as<ProductPolytope>().factors;
      if (x.size() != y.size()) throw FamilyMismatch("Minkowski sum of products with different blocks");
      std::vector<Polytope> fs;
      for (std::size_t i = 0; i < x.size(); ++i) fs.push_back(minkowski_sum(x[i], y[i]));
      return Polytope::product(std::move(fs));
    }
  }
  throw FamilyMismatch("unknown family");
}

Polytope scale(const Polytope& p, Int k) {
  if (k < 0) throw ArityError("scale factor must be nonnegative");
  if (k == 0) return Polytope::origin(p.natural_ambient());
  switch (p.family()) {
    case Family::Grid: {
      const auto& g = p.as<GridSet>();
      return GridSet(k * g.u_min(), k * g.u_max(), k * g.v_min(), k * g.v_max(), k * g.s_min(), k * g.s_max());
    }
    case Family::Box: {
      auto axes = p.as<BoxPolytope>().axes;
      for (auto& a : axes) a = {k * a.lo, k * a.hi};
      return Polytope::box(std::move(axes));
    }
    case Family::Line: {
      const auto& l = p.as<LinePolytope>();
      return Polytope::interval(l.lo * Scalar(k), l.hi * Scalar(k));
    }
    case Family::Product: {
      std::vector<Polytope> fs;
      for (const auto& f : p.as<ProductPolytope>().factors) fs.push_back(scale(f, k));
      return Polytope::product(std::move(fs));
    }
  }
  throw FamilyMismatch("unknown family");
}

Polytope negate(const Polytope& p) {
  switch (p.family()) {
    case Family::Grid: {
      const auto& g = p.as<GridSet>();
      return GridSet(-g.u_max(), -g.u_min(), -g.v_max(), -g.v_min(), -g.s_max(), -g.s_min());
    }
    case Family::Box: {
      auto axes = p.as<BoxPolytope>().axes;
      for (auto& a : axes) a = {-a.hi, -a.lo};
      return Polytope::box(std::move(axes));
    }
    case Family::Line: {
      const auto& l = p.as<LinePolytope>();
      return Polytope::interval(-l.hi, -l.lo);
    }
    case Family::Product: {
      std::vector<Polytope> fs;
      for (const auto& f : p.as<ProductPolytope>().factors) fs.push_back(negate(f));
      return Polytope::product(std::move(fs));
    }
  }
  throw FamilyMismatch("unknown family");
}

Polytope translate(const Polytope& p, std::span<const Scalar> offset) {
  return minkowski_sum(p, Polytope::point(p.natural_ambient(), offset));
}

std::vector<Polytope> faces(const Polytope& p) {
  std::vector<Polytope> out;
  switch (p.family()) {
    case Family::Grid: {
      const auto& g = p.as<GridSet>();
      auto vs = g.vertices();
      for (const auto& v : vs) out.emplace_back(GridSet::point(v));
      if (g.dim() == 2) {
        for (std::size_t i = 0; i < vs.size(); ++i) out.emplace_back(GridSet::hull(vs[i], vs[(i + 1) % vs.size()]));
      }
      if (g.dim() > 0) out.push_back(p);
      break;
    }
    case Family::Box: {
      std::vector<std::vector<Polytope>> per_axis;
      for (const auto& a : p.as<BoxPolytope>().axes) {
        std::vector<Polytope> opts;
        opts.push_back(Polytope::box({{a.lo, a.lo}}));
        if (a.lo < a.hi) {
          opts.push_back(Polytope::box({{a.hi, a.hi}}));
          opts.push_back(Polytope::box({a}));
        }
        per_axis.push_back(std::move(opts));
      }
      for (const auto& combo : cartesian(per_axis)) {
        std::vector<AxisRange> axes;
        for (const auto& c : combo) axes.push_back(c.as<BoxPolytope>().axes[0]);
        out.push_back(Polytope::box(std::move(axes)));
      }
      break;
    }
    case Family::Line: {
      const auto& l = p.as<LinePolytope>();
      out.push_back(Polytope::interval(l.lo, l.lo));
      if (l.lo < l.hi) {
        out.push_back(Polytope::interval(l.hi, l.hi));
        out.push_back(p);
      }
      break;
    }
    case Family::Product: {
      std::vector<std::vector<Polytope>> per_factor;
      for (const auto& f : p.as<ProductPolytope>().factors) per_factor.push_back(faces(f));
      for (auto& combo : cartesian(per_factor)) out.push_back(Polytope::product(std::move(combo)));
      break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Polytope> vertices(const Polytope& p) {
  std::vector<Polytope> out;
  for (auto& f : faces(p)) {
    if (f.dim() == 0) out.push_back(std::move(f));
  }
  return out;
}

bool contains_point(const Polytope& p, std::span<const Scalar> x) {
  if (static_cast<int>(x.size()) != p.natural_ambient().coordinate_count()) throw ArityError("point has wrong coordinate count");
  switch (p.family()) {
    case Family::Grid: {
      if (!x[0].is_rational() || !x[1].is_rational()) return false;
      return p.as<GridSet>().contains(x[0].rational_part(), x[1].rational_part());
    }
    case Family::Box: {
      const auto& axes = p.as<BoxPolytope>().axes;
      for (std::size_t i = 0; i < axes.size(); ++i) {
        if (x[i] < Scalar(axes[i].lo) || x[i] > Scalar(axes[i].hi)) return false;
      }
      return true;
    }
    case Family::Line: {
      const auto& l = p.as<LinePolytope>();
      return l.lo <= x[0] && x[0] <= l.hi;
    }
    case Family::Product: {
      std::size_t at = 0;
      for (const auto& f : p.as<ProductPolytope>().factors) {
        std::size_t n = factor_coordinate_count(f);
        if (!contains_point(f, x.subspan(at, n))) return false;
        at += n;
      }
      return true;
    }
  }
  return false;
}

bool contains(const Polytope& outer, const Polytope& inner) {
  if (outer.family() != inner.family()) throw FamilyMismatch("containment across families");
  for (const auto& v : vertices(inner)) {
    auto c = v.point_coordinates();
    if (!contains_point(outer, c)) return false;
  }
  return true;
}

namespace {

std::vector<Cell> grid_cells(const GridSet& g) {
  std::vector<Cell> out;
  for (Int u = g.u_min(); u <= g.u_max(); ++u) {
    for (Int v = g.v_min(); v <= g.v_max(); ++v) {
      bool p00 = g.contains({u, v});
      bool p10 = g.contains({u + 1, v});
      bool p01 = g.contains({u, v + 1});
      bool p11 = g.contains({u + 1, v + 1});
      if (p00) out.emplace_back(GridCell{GridCellKind::Vertex, u, v});
      if (p00 && p10) out.emplace_back(GridCell{GridCellKind::EdgeU, u, v});
      if (p00 && p01) out.emplace_back(GridCell{GridCellKind::EdgeV, u, v});
      if (p10 && p01) out.emplace_back(GridCell{GridCellKind::EdgeS, u, v});
      if (p00 && p10 && p01) out.emplace_back(GridCell{GridCellKind::TriUp, u, v});
      if (p10 && p01 && p11) out.emplace_back(GridCell{GridCellKind::TriDown, u, v});
    }
  }
  return out;
}

std::vector<Cell> box_cells(const BoxPolytope& b) {
  const auto d = static_cast<std::uint8_t>(b.axes.size());
  std::vector<BoxCell> cur(1);
  cur[0].dim = d;
  for (std::size_t i = 0; i < b.axes.size(); ++i) {
    std::vector<BoxCell> next;
    for (const auto& c : cur) {
      for (Int k = b.axes[i].lo; k <= b.axes[i].hi; ++k) {
        BoxCell pt = c;
        pt.k[i] = k;
        next.push_back(pt);
        if (k < b.axes[i].hi) {
          BoxCell open = pt;
          open.open_mask |= static_cast<std::uint16_t>(1u << i);
          next.push_back(open);
        }
      }
    }
    cur = std::move(next);
  }
  return {cur.begin(), cur.end()};
}

}  // namespace

std::vector<Cell> decompose_cells(const Polytope& p) {
  std::vector<Cell> out;
  switch (p.family()) {
    case Family::Grid:
      out = grid_cells(p.as<GridSet>());
      break;
    case Family::Box:
      out = box_cells(p.as<BoxPolytope>());
      break;
    case Family::Line: {
      const auto& l = p.as<LinePolytope>();
      out.emplace_back(LineCell{l.lo, l.lo});
      if (l.lo < l.hi) {
        out.emplace_back(LineCell{l.lo, l.hi});
        out.emplace_back(LineCell{l.hi, l.hi});
      }
      break;
    }
    case Family::Product: {
      std::vector<std::vector<Cell>> acc{{}};
      for (const auto& f : p.as<ProductPolytope>().factors) {
        auto cells = decompose_cells(f);
        std::vector<std::vector<Cell>> next;
        for (const auto& prefix : acc) {
          for (const auto& c : cells) {
            next.push_back(prefix);
            next.back().push_back(c);
          }
        }
        acc = std::move(next);
      }
      for (auto& parts : acc) out.emplace_back(ProductCell{std::move(parts)});
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cell> relative_interior_cells(const Polytope& p) {
  std::set<Cell> boundary;
  for (const auto& f : faces(p)) {
    if (f == p) continue;
    for (auto& c : decompose_cells(f)) boundary.insert(std::move(c));
  }
  std::vector<Cell> out;
  for (auto& c : decompose_cells(p)) {
    if (!boundary.count(c)) out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------- Cell

namespace {

std::size_t cell_coordinate_count(const Cell& c) {
  switch (c.family()) {
    case Family::Grid:
      return 2;
    case Family::Box:
      return c.as<BoxCell>().dim;
    case Family::Line:
      return 1;
    case Family::Product: {
      std::size_t n = 0;
      for (const auto& part : c.as<ProductCell>().parts) n += cell_coordinate_count(part);
      return n;
    }
  }
  return 0;
}

}  // namespace

GridCell locate_grid_cell(const Rational& u, const Rational& v) {
  Int fu = floor_of(u), fv = floor_of(v);
  Rational a = u - fu, b = v - fv;
  GridCellKind kind;
  if (sgn(a) == 0 && sgn(b) == 0) {
    kind = GridCellKind::Vertex;
  } else if (sgn(a) == 0) {
    kind = GridCellKind::EdgeV;
  } else if (sgn(b) == 0) {
    kind = GridCellKind::EdgeU;
  } else {
    int c = cmp(Rational(a + b), 1);
    kind = c < 0 ? GridCellKind::TriUp : (c == 0 ? GridCellKind::EdgeS : GridCellKind::TriDown);
  }
  return {kind, fu, fv};
}

int Cell::dim() const {
  return std::visit(Overloaded{
                        [](const GridCell& c) {
                          switch (c.kind) {
                            case GridCellKind::Vertex:
                              return 0;
                            case GridCellKind::EdgeU:
                            case GridCellKind::EdgeV:
                            case GridCellKind::EdgeS:
                              return 1;
                            default:
                              return 2;
                          }
                        },
                        [](const BoxCell& c) { return __builtin_popcount(c.open_mask); },
                        [](const LineCell& c) { return c.is_point() ? 0 : 1; },
                        [](const ProductCell& c) {
                          int d = 0;
                          for (const auto& part : c.parts) d += part.dim();
                          return d;
                        },
                    },
                    rep_);
}

Polytope Cell::closure() const {
  return std::visit(Overloaded{
                        [](const GridCell& c) -> Polytope {
                          Int u = c.u, v = c.v;
                          switch (c.kind) {
                            case GridCellKind::Vertex:
                              return GridSet::point({u, v});
                            case GridCellKind::EdgeU:
                              return GridSet::hull({u, v}, {u + 1, v});
                            case GridCellKind::EdgeV:
                              return GridSet::hull({u, v}, {u, v + 1});
                            case GridCellKind::EdgeS:
                              return GridSet::hull({u + 1, v}, {u, v + 1});
                            case GridCellKind::TriUp:
                              return GridSet(u, u + 1, v, v + 1, u + v, u + v + 1);
                            case GridCellKind::TriDown:
                              return GridSet(u, u + 1, v, v + 1, u + v + 1, u + v + 2);
                          }
                          throw FamilyMismatch("unknown grid cell");
                        },
                        [](const BoxCell& c) -> Polytope {
                          std::vector<AxisRange> axes(c.dim);
                          for (int i = 0; i < c.dim; ++i) {
                            axes[i] = {c.k[i], c.k[i] + ((c.open_mask >> i) & 1)};
                          }
                          return Polytope::box(std::move(axes));
                        },
                        [](const LineCell& c) -> Polytope { return Polytope::interval(c.lo, c.hi); },
                        [](const ProductCell& c) -> Polytope {
                          std::vector<Polytope> fs;
                          for (const auto& part : c.parts) fs.push_back(part.closure());
                          return Polytope::product(std::move(fs));
                        },
                    },
                    rep_);
}

bool Cell::contains(std::span<const Scalar> x) const {
  return std::visit(Overloaded{
                        [&](const GridCell& c) {
                          if (x.size() != 2 || !x[0].is_rational() || !x[1].is_rational()) return false;
                          return locate_grid_cell(x[0].rational_part(), x[1].rational_part()) == c;
                        },
                        [&](const BoxCell& c) {
                          if (x.size() != c.dim) return false;
                          for (int i = 0; i < c.dim; ++i) {
                            if (!x[i].is_rational()) return false;
                            const Rational& q = x[i].rational_part();
                            if ((c.open_mask >> i) & 1) {
                              if (!(c.k[i] < q && q < c.k[i] + 1)) return false;
                            } else if (q != c.k[i]) {
                              return false;
                            }
                          }
                          return true;
                        },
                        [&](const LineCell& c) {
                          if (x.size() != 1) return false;
                          if (c.is_point()) return x[0] == c.lo;
                          return c.lo < x[0] && x[0] < c.hi;
                        },
                        [&](const ProductCell& c) {
                          std::size_t at = 0;
                          for (const auto& part : c.parts) {
                            std::size_t n = cell_coordinate_count(part);
                            if (at + n > x.size() || !part.contains(x.subspan(at, n))) return false;
                            at += n;
                          }
                          return at == x.size();
                        },
                    },
                    rep_);
}

std::vector<Scalar> Cell::representative() const {
  return std::visit(Overloaded{
                        [](const GridCell& c) {
                          Rational du, dv;
                          switch (c.kind) {
                            case GridCellKind::Vertex:
                              break;
                            case GridCellKind::EdgeU:
                              du = Rational(1, 2);
                              break;
                            case GridCellKind::EdgeV:
                              dv = Rational(1, 2);
                              break;
                            case GridCellKind::EdgeS:
                              du = dv = Rational(1, 2);
                              break;
                            case GridCellKind::TriUp:
                              du = dv = Rational(1, 3);
                              break;
                            case GridCellKind::TriDown:
                              du = dv = Rational(2, 3);
                              break;
                          }
                          return std::vector<Scalar>{Scalar(Rational(du + c.u)), Scalar(Rational(dv + c.v))};
                        },
                        [](const BoxCell& c) {
                          std::vector<Scalar> out;
                          for (int i = 0; i < c.dim; ++i) {
                            Rational q = c.k[i];
                            if ((c.open_mask >> i) & 1) q += Rational(1, 2);
                            out.emplace_back(q);
                          }
                          return out;
                        },
                        [](const LineCell& c) {
                          if (c.is_point()) return std::vector<Scalar>{c.lo};
                          return std::vector<Scalar>{(c.lo + c.hi) * Scalar(Rational(1, 2))};
                        },
                        [](const ProductCell& c) {
                          std::vector<Scalar> out;
                          for (const auto& part : c.parts) {
                            auto r = part.representative();
                            out.insert(out.end(), r.begin(), r.end());
                          }
                          return out;
                        },
                    },
                    rep_);
}

std::string Cell::to_string() const {
  return std::visit(Overloaded{
                        [](const GridCell& c) {
                          static const char* kNames[] = {"vertex", "edgeU", "edgeV", "edgeS", "triUp", "triDown"};
                          std::ostringstream os;
                          os << kNames[static_cast<int>(c.kind)] << "(" << c.u << "," << c.v << ")";
                          return os.str();
                        },
                        [](const BoxCell& c) {
                          std::ostringstream os;
                          os << "cell";
                          for (int i = 0; i < c.dim; ++i) {
                            if ((c.open_mask >> i) & 1) {
                              os << "(" << c.k[i] << "," << c.k[i] + 1 << ")";
                            } else {
                              os << "{" << c.k[i] << "}";
                            }
                          }
                          return os.str();
                        },
                        [](const LineCell& c) {
                          if (c.is_point()) return "{" + c.lo.to_string() + "}";
                          return "(" + c.lo.to_string() + "," + c.hi.to_string() + ")";
                        },
                        [](const ProductCell& c) {
                          std::string s;
                          for (std::size_t i = 0; i < c.parts.size(); ++i) {
                            if (i) s += " x ";
                            s += c.parts[i].to_string();
                          }
                          return s;
                        },
                    },
                    rep_);
}

}  // namespace minkring
