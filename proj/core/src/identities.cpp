#include "minkring/identities.hpp"

#include <algorithm>

#include "minkring/errors.hpp"

namespace minkring {

namespace {

bool is_proper_subset_face(const Polytope& inner, const Polytope& outer) {
  return !(inner == outer) && contains(outer, inner);
}

bool antichain(const std::vector<Polytope>& fs) {
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = 0; j < fs.size(); ++j) {
      if (i != j && contains(fs[j], fs[i])) return false;
    }
  }
  return true;
}

bool covers_vertices_of(const Polytope& p, const std::vector<Polytope>& fs) {
  for (const auto& v : vertices(p)) {
    bool hit = std::any_of(fs.begin(), fs.end(), [&](const Polytope& f) { return contains(f, v); });
    if (!hit) return false;
  }
  return true;
}

std::vector<Polytope> proper_faces(const Polytope& p) {
  std::vector<Polytope> out;
  for (auto& f : faces(p)) {
    if (!(f == p)) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- CoverSpec

CoverSpec::CoverSpec(Polytope polytope, std::vector<Polytope> faces_list)
    : polytope_(std::move(polytope)), faces_(std::move(faces_list)) {
  std::sort(faces_.begin(), faces_.end());
  if (std::adjacent_find(faces_.begin(), faces_.end()) != faces_.end()) throw InvalidCover("duplicate face in cover");
  const auto all = minkring::faces(polytope_);
  for (const auto& f : faces_) {
    if (!std::binary_search(all.begin(), all.end(), f)) throw InvalidCover(f.to_string() + " is not a face of " + polytope_.to_string());
  }
}

bool CoverSpec::is_antichain() const { return antichain(faces_); }

bool operator==(const CoverSpec& a, const CoverSpec& b) { return a.polytope_ == b.polytope_ && a.faces_ == b.faces_; }

// ---------------------------------------------------------------- face presentations

const std::string& FacePresentation::name_of(const Polytope& face) const {
  auto it = names.find(face);
  if (it == names.end()) throw InvalidCover(face.to_string() + " has no generator in the face presentation");
  return it->second;
}

LaurentPoly FacePresentation::poly_of(const Polytope& face) const {
  const std::string& n = name_of(face);
  return n == "1" ? LaurentPoly(1L) : LaurentPoly::var(n);
}

FacePresentation face_presentation(const Polytope& p) {
  const auto all = faces(p);
  const auto verts = vertices(p);
  // Anchor: first hexagon vertex of a grid set, low corner of a box or interval, else the smallest vertex.
  Polytope anchor = verts.front();
  if (p.family() == Family::Grid) anchor = GridSet::point(p.as<GridSet>().vertices().front());
  if (p.family() == Family::Box) {
    std::vector<AxisRange> lo;
    for (const auto& a : p.as<BoxPolytope>().axes) lo.push_back({a.lo, a.lo});
    anchor = Polytope::box(std::move(lo));
  }
  if (p.family() == Family::Line) anchor = Polytope::interval(p.as<LinePolytope>().lo, p.as<LinePolytope>().lo);
  std::vector<Scalar> offset;
  for (const auto& c : anchor.point_coordinates()) offset.push_back(-c);

  std::map<Polytope, std::string> names;
  const Polytope shifted = translate(p, offset);
  if (p.family() == Family::Grid && shifted == Polytope(GridSet::triangle(1))) {
    const std::map<Polytope, std::string> std_names = {
        {GridSet::point({0, 0}), "1"},           {GridSet::point({1, 0}), "x1"},
        {GridSet::point({0, 1}), "x2"},          {GridSet::hull({0, 0}, {1, 0}), "y1"},
        {GridSet::hull({0, 0}, {0, 1}), "y2"},   {GridSet::hull({1, 0}, {0, 1}), "y3"},
        {GridSet::triangle(1), "z"},
    };
    for (const auto& f : all) names[f] = std_names.at(translate(f, offset));
  } else if (p.family() == Family::Line) {
    const auto& l = p.as<LinePolytope>();
    names[Polytope::interval(l.lo, l.lo)] = "x";
    if (l.lo < l.hi) {
      names[Polytope::interval(l.hi, l.hi)] = "y";
      names[p] = "z";
    }
  } else if (p.family() == Family::Box) {
    const auto& axes = p.as<BoxPolytope>().axes;
    for (const auto& f : all) {
      std::string code = "b";
      const auto& fa = f.as<BoxPolytope>().axes;
      for (std::size_t i = 0; i < axes.size(); ++i) {
        if (fa[i].lo < fa[i].hi) {
          code += 'I';
        } else {
          code += fa[i].lo == axes[i].lo ? '0' : '1';
        }
      }
      names[f] = f == anchor ? "1" : code;
    }
  } else if (p.family() == Family::Grid) {
    int nv = 0, ne = 0;
    for (const auto& f : all) {
      if (f == anchor) {
        names[f] = "1";
      } else if (f.dim() == 0) {
        names[f] = "v" + std::to_string(++nv);
      } else if (f.dim() == 1 && p.dim() == 2) {
        names[f] = "e" + std::to_string(++ne);
      } else {
        names[f] = "p";
      }
    }
  } else {
    int ng = 0;
    for (const auto& f : all) names[f] = f == anchor ? "1" : "g" + std::to_string(++ng);
  }

  std::vector<Generator> gens;
  for (const auto& f : all) {
    const std::string& n = names.at(f);
    if (n != "1") gens.push_back({n, translate(f, offset), Polarity::Invertible});
  }
  Presentation ring("face:" + p.to_string(), shifted.natural_ambient(), std::move(gens), {});
  return FacePresentation{std::move(ring), std::move(offset), std::move(names)};
}

// ---------------------------------------------------------------- identities

LaurentPoly id_expand(const CoverSpec& c) { return id_expand(c, face_presentation(c.polytope())); }

LaurentPoly id_expand(const CoverSpec& c, const FacePresentation& fp) {
  const LaurentPoly whole = fp.poly_of(c.polytope());
  LaurentPoly out(1L);
  for (const auto& f : c.faces()) out *= whole - fp.poly_of(f);
  return out;
}

bool covers_vertices(const CoverSpec& c) { return covers_vertices_of(c.polytope(), c.faces()); }

bool id_holds(const CoverSpec& c) { return id_holds(c, face_presentation(c.polytope())); }

bool id_holds(const CoverSpec& c, const FacePresentation& fp) { return kernel_member(fp.ring, id_expand(c, fp)); }

bool covers_relation(const CoverSpec& a, const CoverSpec& b) {
  if (!(a.polytope() == b.polytope())) throw InvalidCover("covers_relation needs covers of one polytope");
  if (!a.is_antichain() || !b.is_antichain()) throw AntichainViolation("covers_relation needs antichains");
  const auto& bf = b.faces();
  for (const auto& A : a.faces()) {
    std::vector<Polytope> rest;
    for (const auto& f : a.faces()) {
      if (!(f == A)) rest.push_back(f);
    }
    bool rest_kept = std::all_of(rest.begin(), rest.end(),
                                 [&](const Polytope& f) { return std::binary_search(bf.begin(), bf.end(), f); });
    if (!rest_kept) continue;
    std::vector<Polytope> replacement;
    for (const auto& f : bf) {
      if (!std::binary_search(rest.begin(), rest.end(), f)) replacement.push_back(f);
    }
    if (replacement.empty()) continue;
    bool proper = std::all_of(replacement.begin(), replacement.end(),
                              [&](const Polytope& f) { return is_proper_subset_face(f, A); });
    if (proper && covers_vertices_of(A, replacement)) return true;
  }
  return false;
}

std::vector<CoverSpec> vertex_cover_antichains(const Polytope& p) {
  const auto all = faces(p);
  if (all.size() > kMaxAntichainFaces) throw FaceBoundExceeded("polytope has more than 12 faces");
  const auto proper = proper_faces(p);
  const std::size_t n = proper.size();
  std::vector<std::uint32_t> covers;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<Polytope> fs;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) fs.push_back(proper[i]);
    }
    if (covers_vertices_of(p, fs)) covers.push_back(mask);
  }
  std::vector<CoverSpec> out;
  for (auto mask : covers) {
    bool minimal = std::none_of(covers.begin(), covers.end(),
                                [&](std::uint32_t other) { return other != mask && (other & mask) == other; });
    if (!minimal) continue;
    std::vector<Polytope> fs;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) fs.push_back(proper[i]);
    }
    out.emplace_back(p, std::move(fs));
  }
  return out;
}

std::vector<CoverSpec> minimal_antichains(const Polytope& p) {
  auto all = vertex_cover_antichains(p);
  std::vector<CoverSpec> out;
  for (const auto& b : all) {
    bool has_predecessor = std::any_of(all.begin(), all.end(), [&](const CoverSpec& a) { return covers_relation(a, b); });
    if (!has_predecessor) out.push_back(b);
  }
  return out;
}

}  // namespace minkring
