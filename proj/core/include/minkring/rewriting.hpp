#pragma once

#include <string>
#include <vector>

#include "minkring/geometry.hpp"
#include "minkring/laurent.hpp"
#include "minkring/simplefn.hpp"

namespace minkring {

// Hexagon traversal counts of a GridSet. n1+m2+m3 = m1+n2+m3 = m1+m2+n3 = N.
struct NormalFormParams {
  Int a = 0, b = 0;
  Int N = 0;
  Int n1 = 0, n2 = 0, n3 = 0;
  Int m1 = 0, m2 = 0, m3 = 0;
  friend bool operator==(const NormalFormParams&, const NormalFormParams&) = default;
};

struct FirstNormalForm {
  NormalFormParams params;
  LaurentPoly poly;  // x1^a x2^b c_S
};

// c_S = z^N - (z^m3 - y3^m3) - x1^(m3+n1) (z^m2 - y2^m2) - x2^(m3+n2) (z^m1 - y1^m1).
FirstNormalForm first_normal_form(const GridSet& s);

enum class TileKind { Point, OpenEdgeU, OpenEdgeV, OpenEdgeS, OpenTriUp, OpenTriDown };

// Translate of one of 1, oy1, oy2, oy3, oz, z^-1; the open down triangle at (u,v) is x1^(u+1) x2^(v+1) z^-1.
struct Tile {
  TileKind kind = TileKind::Point;
  GridPoint at;
  friend auto operator<=>(const Tile&, const Tile&) = default;
};

// The open edges and triangle in the generator alphabet: oy1 = y1-1-x1, oy2 = y2-1-x2,
// oy3 = y3-x1-x2, oz = z-y1-y2-y3+1+x1+x2.
LaurentPoly open_cell_poly(TileKind kind);
LaurentPoly tile_poly(const Tile& t);
Tile tile_of(const GridCell& c);

struct SecondNormalForm {
  std::vector<std::pair<Tile, Rational>> tiles;
  LaurentPoly poly;
  // Compact form using the names oy1, oy2, oy3, oz.
  std::string macro_text() const;
};

SecondNormalForm second_normal_form(const GridSet& s);
// Any grid-ambient simple function, term by term.
SecondNormalForm second_normal_form(const SimpleFunction& f);

// h_j = sum_{i=0}^{j} x1^i x2^(j-i); zero for j < 0.
LaurentPoly complete_homogeneous(int j);
// f_k = h_0 + ... + h_k; zero for k < 0.
LaurentPoly tiling_sum(int k);

// f_n + f_{n-1}(oy1+oy2+oy3+oz) + f_{n-2} x1 x2 z^-1; 1 for n = 0.
LaurentPoly zn_tiling(int n);

enum class TilingAxis { Y, Y1, Y2, Y3 };

// Y, Y1, Y2: sum_{i=0}^n x^i + oy sum_{i=0}^{n-1} x^i. Y3: h_n + oy3 h_{n-1}.
LaurentPoly y_tiling(TilingAxis axis, int n);

struct StripReport {
  bool strip = false;    // z^n - z^(n-1) against the strip tiling
  bool reduced = false;  // y3^(n-1) z - y3^(n-1) against the same tiling
  bool step = false;     // the inductive step from n to n+1
  bool core = false;     // (y3-x1)(z-1) - x2(z-1-x1+x1 z^-1)
  bool all() const { return strip && reduced && step && core; }
};

// Each field is a kernel_member query in the Coxeter presentation.
StripReport strip_report(int n);
bool verify_strip(int n);

}  // namespace minkring
