#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "minkring/scalar.hpp"

namespace minkring {

using Int = std::int64_t;

enum class Family : std::uint8_t { Grid, Box, Line, Product };
enum class LineMode : std::uint8_t { Rational, Sqrt2 };

// Describes the space a polytope or simple function lives in.
struct Ambient {
  Family family = Family::Grid;
  LineMode line_mode = LineMode::Rational;  // Line only
  int box_dim = 0;                          // Box only
  std::vector<Ambient> factors;             // Product only

  static Ambient grid();
  static Ambient box(int d);
  static Ambient line(LineMode mode);
  static Ambient product(std::vector<Ambient> factors);

  // Number of Scalar coordinates of a point.
  int coordinate_count() const;
  std::string to_string() const;

  friend bool operator==(const Ambient& a, const Ambient& b);
};

// Triangular lattice point in the basis OA, OB.
struct GridPoint {
  Int u = 0;
  Int v = 0;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

// {uMin <= u <= uMax, vMin <= v <= vMax, sMin <= u+v <= sMax}.
// Invariant: nonempty and every bound attained.
class GridSet {
 public:
  GridSet(Int u_min, Int u_max, Int v_min, Int v_max, Int s_min, Int s_max);

  static GridSet point(GridPoint p);
  // Smallest GridSet containing both points; exact when they differ along one lattice direction.
  static GridSet hull(GridPoint a, GridPoint b);
  // u, v >= 0, u+v <= n.
  static GridSet triangle(Int n = 1);
  // u, v <= n, u+v >= n, u, v >= 0: the n-scaled down triangle [A,B,A+B].
  static GridSet down_triangle(Int n = 1);
  // u in [0,a], v in [0,b].
  static GridSet parallelogram(Int a, Int b);

  Int u_min() const { return u_min_; }
  Int u_max() const { return u_max_; }
  Int v_min() const { return v_min_; }
  Int v_max() const { return v_max_; }
  Int s_min() const { return s_min_; }
  Int s_max() const { return s_max_; }

  int dim() const;
  // Counter-clockwise from the lowest-v, lowest-u corner; duplicates removed.
  std::vector<GridPoint> vertices() const;
  bool contains(GridPoint p) const;
  bool contains(const Rational& u, const Rational& v) const;

  friend auto operator<=>(const GridSet&, const GridSet&) = default;

 private:
  Int u_min_, u_max_, v_min_, v_max_, s_min_, s_max_;
};

struct AxisRange {
  Int lo = 0;
  Int hi = 0;
  friend auto operator<=>(const AxisRange&, const AxisRange&) = default;
};

struct BoxPolytope {
  std::vector<AxisRange> axes;
  friend auto operator<=>(const BoxPolytope&, const BoxPolytope&) = default;
};

struct LinePolytope {
  Scalar lo;
  Scalar hi;
  friend bool operator==(const LinePolytope&, const LinePolytope&) = default;
  friend std::strong_ordering operator<=>(const LinePolytope& a, const LinePolytope& b);
};

class Polytope;

struct ProductPolytope {
  std::vector<Polytope> factors;
  friend bool operator==(const ProductPolytope& a, const ProductPolytope& b);
  friend std::strong_ordering operator<=>(const ProductPolytope& a, const ProductPolytope& b);
};

// Nonempty closed convex polytope of one family. Points are the degenerate members.
class Polytope {
 public:
  using Rep = std::variant<GridSet, BoxPolytope, LinePolytope, ProductPolytope>;

  Polytope(GridSet g);          // NOLINT(google-explicit-constructor)
  Polytope(BoxPolytope b);      // NOLINT(google-explicit-constructor)
  Polytope(LinePolytope l);     // NOLINT(google-explicit-constructor)
  Polytope(ProductPolytope p);  // NOLINT(google-explicit-constructor)

  static Polytope origin(const Ambient& ambient);
  // Grid and Box coordinates must be integers.
  static Polytope point(const Ambient& ambient, std::span<const Scalar> coords);
  static Polytope interval(Scalar lo, Scalar hi);
  static Polytope box(std::vector<AxisRange> axes);
  static Polytope product(std::vector<Polytope> factors);

  Family family() const { return static_cast<Family>(rep_.index()); }
  const Rep& rep() const { return rep_; }
  template <class T>
  const T& as() const { return std::get<T>(rep_); }

  int dim() const;
  Ambient natural_ambient() const;
  // Only for dim() == 0.
  std::vector<Scalar> point_coordinates() const;
  std::string to_string() const;

  friend bool operator==(const Polytope& a, const Polytope& b) { return a.rep_ == b.rep_; }
  friend std::strong_ordering operator<=>(const Polytope& a, const Polytope& b);

 private:
  Rep rep_;
};

enum class GridCellKind : std::uint8_t { Vertex, EdgeU, EdgeV, EdgeS, TriUp, TriDown };

// Anchored at (u,v): EdgeU (u,v)-(u+1,v), EdgeV (u,v)-(u,v+1), EdgeS (u+1,v)-(u,v+1),
// TriUp (u,v),(u+1,v),(u,v+1), TriDown (u+1,v),(u,v+1),(u+1,v+1). Edges and triangles open.
struct GridCell {
  GridCellKind kind = GridCellKind::Vertex;
  Int u = 0;
  Int v = 0;
  friend auto operator<=>(const GridCell&, const GridCell&) = default;
};

inline constexpr int kMaxBoxDim = 8;

// Axis i is the point {k[i]} or, when bit i of open_mask is set, the open interval (k[i], k[i]+1).
struct BoxCell {
  std::uint8_t dim = 0;
  std::uint16_t open_mask = 0;
  std::array<Int, kMaxBoxDim> k{};
  friend auto operator<=>(const BoxCell&, const BoxCell&) = default;
};

// {lo} when lo == hi, else the open interval (lo, hi).
struct LineCell {
  Scalar lo;
  Scalar hi;
  bool is_point() const { return lo == hi; }
  friend bool operator==(const LineCell&, const LineCell&) = default;
  friend std::strong_ordering operator<=>(const LineCell& a, const LineCell& b);
};

class Cell;

struct ProductCell {
  std::vector<Cell> parts;
  friend bool operator==(const ProductCell& a, const ProductCell& b);
  friend std::strong_ordering operator<=>(const ProductCell& a, const ProductCell& b);
};

// Relatively open piece of the ambient space.
class Cell {
 public:
  using Rep = std::variant<GridCell, BoxCell, LineCell, ProductCell>;

  Cell(GridCell c) : rep_(c) {}                    // NOLINT(google-explicit-constructor)
  Cell(BoxCell c) : rep_(c) {}                     // NOLINT(google-explicit-constructor)
  Cell(LineCell c) : rep_(std::move(c)) {}         // NOLINT(google-explicit-constructor)
  Cell(ProductCell c) : rep_(std::move(c)) {}      // NOLINT(google-explicit-constructor)

  Family family() const { return static_cast<Family>(rep_.index()); }
  const Rep& rep() const { return rep_; }
  template <class T>
  const T& as() const { return std::get<T>(rep_); }

  int dim() const;
  Polytope closure() const;
  bool contains(std::span<const Scalar> x) const;
  std::vector<Scalar> representative() const;
  std::string to_string() const;

  friend bool operator==(const Cell& a, const Cell& b) { return a.rep_ == b.rep_; }
  friend std::strong_ordering operator<=>(const Cell& a, const Cell& b);

 private:
  Rep rep_;
};

// The grid cell containing the lattice-coordinate point (u, v).
GridCell locate_grid_cell(const Rational& u, const Rational& v);

bool fits(const Polytope& p, const Ambient& ambient);

Polytope minkowski_sum(const Polytope& a, const Polytope& b);
// k-fold Minkowski sum; k = 0 gives the origin of the same ambient.
Polytope scale(const Polytope& p, Int k);
Polytope negate(const Polytope& p);
Polytope translate(const Polytope& p, std::span<const Scalar> offset);

// All nonempty faces including p itself, sorted, pairwise distinct.
std::vector<Polytope> faces(const Polytope& p);
std::vector<Polytope> vertices(const Polytope& p);

bool contains_point(const Polytope& p, std::span<const Scalar> x);
// Convexity: inner is inside outer iff all vertices of inner are.
bool contains(const Polytope& outer, const Polytope& inner);

// Disjoint cells, sorted, whose union is p.
std::vector<Cell> decompose_cells(const Polytope& p);
// Cells of p not lying in any proper face.
std::vector<Cell> relative_interior_cells(const Polytope& p);

}  // namespace minkring
