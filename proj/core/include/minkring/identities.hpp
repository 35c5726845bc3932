#pragma once

#include <map>
#include <string>
#include <vector>

#include "minkring/geometry.hpp"
#include "minkring/laurent.hpp"
#include "minkring/presentations.hpp"

namespace minkring {

// A polytope and a duplicate-free list of its faces (P itself allowed).
class CoverSpec {
 public:
  CoverSpec(Polytope polytope, std::vector<Polytope> faces);

  const Polytope& polytope() const { return polytope_; }
  const std::vector<Polytope>& faces() const { return faces_; }
  // No listed face contains another.
  bool is_antichain() const;

  friend bool operator==(const CoverSpec& a, const CoverSpec& b);

 private:
  Polytope polytope_;
  std::vector<Polytope> faces_;  // sorted
};

// Face ring of P in a zero-anchored embedding: P is translated by `offset` so that its
// anchor vertex sits at the origin. The triangle uses the Coxeter names (anchor O -> 1),
// a 1-D interval uses x (lo), y (hi), z, boxes use b<axis codes> with codes 0, 1, I
// (anchor -> 1), other shapes v<i>, e<i>, p or g<i>.
struct FacePresentation {
  Presentation ring;
  std::vector<Scalar> offset;
  std::map<Polytope, std::string> names;  // faces of P in original position

  const std::string& name_of(const Polytope& face) const;
  LaurentPoly poly_of(const Polytope& face) const;
};

FacePresentation face_presentation(const Polytope& p);

// prod over F in C of ([P] - [F]); 1 for an empty C.
LaurentPoly id_expand(const CoverSpec& c);
LaurentPoly id_expand(const CoverSpec& c, const FacePresentation& fp);

bool covers_vertices(const CoverSpec& c);
bool id_holds(const CoverSpec& c);
bool id_holds(const CoverSpec& c, const FacePresentation& fp);

// b = (a \ {A}) u B for some A in a and a set B of proper faces of A covering the vertices of A.
bool covers_relation(const CoverSpec& a, const CoverSpec& b);

// Inclusion-minimal vertex covers by proper faces.
std::vector<CoverSpec> vertex_cover_antichains(const Polytope& p);

// Elements of vertex_cover_antichains with no predecessor under covers_relation.
std::vector<CoverSpec> minimal_antichains(const Polytope& p);

inline constexpr std::size_t kMaxAntichainFaces = 12;

}  // namespace minkring
