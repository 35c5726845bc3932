#include <algorithm>
#include <set>
#include <sstream>

#include "minkring/cli.hpp"
#include "minkring/errors.hpp"
#include "minkring/identities.hpp"
#include "minkring/rewriting.hpp"
#include "minkring/simplefn.hpp"

namespace minkring::cli {
namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t i = s.find(sep, start);
    out.emplace_back(s.substr(start, i == std::string_view::npos ? std::string_view::npos : i - start));
    if (i == std::string_view::npos) break;
    start = i + 1;
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += sep;
    s += parts[i];
  }
  return s;
}

Ring resolve_interval(const std::vector<std::string>& parts, std::string_view selector) {
  if (parts.size() < 3) throw Error("interval selector needs two endpoints: " + std::string(selector));
  RingKind kind = RingKind::Polynomial;
  bool full = false;
  for (std::size_t i = 3; i < parts.size(); ++i) {
    if (parts[i] == "laurent") {
      kind = RingKind::Laurent;
    } else if (parts[i] == "full") {
      full = true;
    } else if (parts[i] != "poly") {
      throw Error("unknown interval mode '" + parts[i] + "'");
    }
  }
  return interval_ring(parse_scalar(parts[1]), parse_scalar(parts[2]), kind, full);
}

std::string point_text(const std::vector<Scalar>& x) {
  std::vector<std::string> parts;
  for (const auto& c : x) parts.push_back(c.to_string());
  return "(" + join(parts, ",") + ")";
}

std::string ideal_text(const std::vector<LaurentPoly>& gens) {
  std::vector<std::string> parts;
  for (const auto& g : gens) parts.push_back(g.to_string());
  return "(" + join(parts, ", ") + ")";
}

LaurentPoly parse_in(const Ring& ring, std::string_view text) {
  if (const auto* pr = std::get_if<PrincipalRing>(&ring)) {
    return parse_poly(text, Alphabet{{"x", pr->kind == RingKind::Laurent}});
  }
  return parse_poly(text, alphabet_of(*presentation_of(ring)));
}

std::string ring_id(const Ring& ring) {
  if (const auto* pr = std::get_if<PrincipalRing>(&ring)) return pr->id;
  return presentation_of(ring)->id();
}

const Presentation& require_presentation(const Ring& ring, std::string_view verb) {
  const Presentation* p = presentation_of(ring);
  if (!p) throw Error(std::string(verb) + " needs a presented ring");
  return *p;
}

// Lower dimension first, then by vertex letters in label order.
void sort_faces(std::string_view polytope_name, std::vector<Polytope>& fs) {
  const auto labels = vertex_labels(polytope_name);
  auto key = [&](const Polytope& f) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (contains(f, labels[i].second)) idx.push_back(i);
    }
    return std::make_pair(f.dim(), idx);
  };
  std::stable_sort(fs.begin(), fs.end(), [&](const Polytope& a, const Polytope& b) { return key(a) < key(b); });
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

void run_member(const Command& c, Report& r) {
  Ring ring = resolve_ring(c.ring);
  LaurentPoly f = parse_in(ring, c.payload);
  r.add("ring", ring_id(ring));
  r.add("input", f.to_string());
  if (const auto* pr = std::get_if<PrincipalRing>(&ring)) {
    r.add("result", bool_text(principal_member(pr->shape, pr->kind, f)));
    return;
  }
  const Presentation& p = *presentation_of(ring);
  auto w = nonzero_witness(p, f);
  r.add("result", bool_text(!w));
  if (w) {
    r.add("witness", point_text(w->point));
    r.add("witness_value", to_string(w->value));
  }
}

void run_normalize(const Command& c, Report& r) {
  Ring ring = resolve_ring(c.ring);
  const Presentation& p = require_presentation(ring, "normalize");
  LaurentPoly f = parse_in(ring, c.payload);
  r.add("ring", p.id());
  r.add("input", f.to_string());
  if (p.ambient().family == Family::Grid) {
    SecondNormalForm nf = second_normal_form(phi_map(p, f));
    r.add("result", nf.poly.to_string());
    r.add("tiles", nf.tiles.empty() ? "0" : nf.macro_text());
  } else {
    r.add("result", f.to_string());
  }
}

void run_tile(const Command& c, Report& r) {
  if (c.n < 0 || c.n > 64) throw Error("tile: n must be in 0..64");
  static const std::map<std::string, TilingAxis, std::less<>> kAxes = {
      {"y", TilingAxis::Y}, {"y1", TilingAxis::Y1}, {"y2", TilingAxis::Y2}, {"y3", TilingAxis::Y3}};
  LaurentPoly lhs, tiling;
  Presentation p = coxeter_ring();
  if (c.axis == "z") {
    tiling = zn_tiling(c.n);
    lhs = LaurentPoly::var("z", c.n);
  } else if (auto it = kAxes.find(c.axis); it != kAxes.end()) {
    tiling = y_tiling(it->second, c.n);
    lhs = LaurentPoly::var(c.axis, c.n);
    if (it->second == TilingAxis::Y) p = box_ring(1, false);
  } else {
    throw Error("tile: unknown axis '" + c.axis + "'");
  }
  r.add("ring", p.id());
  r.add("input", lhs.to_string());
  r.add("result", tiling.to_string());
  r.add("holds", bool_text(kernel_member(p, lhs - tiling)));
}

void run_identity(const Command& c, Report& r) {
  Polytope poly = named_polytope(c.polytope);
  const auto listed = parse_cover(c.polytope, c.cover);
  CoverSpec spec(poly, listed);
  FacePresentation fp = face_presentation(poly);
  std::vector<std::string> labels, embedding;
  for (const auto& f : listed) labels.push_back(face_label(c.polytope, f));
  std::vector<Polytope> all;
  for (const auto& [face, name] : fp.names) all.push_back(face);
  sort_faces(c.polytope, all);
  for (const auto& f : all) embedding.push_back(face_label(c.polytope, f) + "=" + fp.name_of(f));
  r.add("ring", fp.ring.id());
  r.add("polytope", c.polytope);
  r.add("cover", join(labels, ","));
  r.add("embedding", join(embedding, " "));
  r.add("expansion", id_expand(spec, fp).to_string());
  r.add("holds", bool_text(id_holds(spec, fp)));
  r.add("covers", bool_text(covers_vertices(spec)));
}

void run_minimal_covers(const Command& c, Report& r) {
  Polytope poly = named_polytope(c.polytope);
  auto mins = minimal_antichains(poly);
  r.add("polytope", c.polytope);
  r.add("result", std::to_string(mins.size()));
  for (const auto& m : mins) {
    std::vector<Polytope> fs = m.faces();
    sort_faces(c.polytope, fs);
    std::vector<std::string> labels;
    for (const auto& f : fs) labels.push_back(face_label(c.polytope, f));
    r.add("cover", join(labels, ","));
  }
}

void run_euler(const Command& c, Report& r) {
  Ring ring = resolve_ring(c.ring);
  const Presentation& p = require_presentation(ring, "euler");
  LaurentPoly f = parse_in(ring, c.payload);
  r.add("ring", p.id());
  r.add("input", f.to_string());
  r.add("result", to_string(euler_char(phi_map(p, f))));
}

void run_product(const Command& c, Report& r) {
  Ring ring = resolve_ring(c.ring);
  const auto* pp = std::get_if<ProductPresentation>(&ring);
  if (!pp) throw Error("product needs a product:<left>,<right> ring");
  r.add("ring", pp->combined.id());
  for (const auto& [from, to] : pp->right_renaming) r.add("rename", from + " -> " + to);
  r.add("generators", join(pp->combined.names(), ","));
  for (const auto& d : pp->combined.declared()) r.add("declared", d.to_string());
  TensorReport t = tensor_report(*pp, c.bound);
  r.add("monomial_pairs", std::to_string(t.monomial_pairs));
  r.add("kernel_samples", std::to_string(t.kernel_samples));
  r.add("result", bool_text(t.ok()));
}

void run_classify(const Command& c, Report& r) {
  Ring ring = resolve_ring(c.ring);
  r.add("ring", ring_id(ring));
  if (const auto* pr = std::get_if<PrincipalRing>(&ring)) {
    r.add("result", classify_principal(pr->shape, pr->kind).to_string());
    return;
  }
  const Presentation& p = *presentation_of(ring);
  if (p.ambient().family == Family::Line && p.id().rfind("interval:", 0) == 0) {
    auto parts = split(p.id(), ':');
    auto ends = split(parts[1], ',');
    IntervalClass ic = interval_class(parse_scalar(ends[0]), parse_scalar(ends[1]));
    r.add("class", std::string(1, ic.label));
    if (ic.label == 'C' || ic.label == 'D') {
      r.add("m", std::to_string(ic.m));
      r.add("n", std::to_string(ic.n));
    }
  }
  r.add("result", ideal_text(p.declared()));
}

}  // namespace

Ring resolve_ring(std::string_view selector) {
  auto parts = split(selector, ':');
  const std::string& head = parts[0];
  if (selector == "coxeter") return coxeter_ring();
  if (head == "interval") {
    // interval:a,b[:mode]; endpoints are separated by a comma inside parts[1].
    auto ends = split(parts.size() > 1 ? parts[1] : "", ',');
    if (ends.size() != 2) throw Error("interval selector needs two endpoints: " + std::string(selector));
    std::vector<std::string> flat{head, ends[0], ends[1]};
    flat.insert(flat.end(), parts.begin() + 2, parts.end());
    return resolve_interval(flat, selector);
  }
  if (head == "box") {
    if (parts.size() < 2 || parts.size() > 3) throw Error("bad box selector: " + std::string(selector));
    bool signed_ring = parts.size() == 3;
    if (signed_ring && parts[2] != "signed") throw Error("unknown box mode '" + parts[2] + "'");
    int d = 0;
    try {
      d = std::stoi(parts[1]);
    } catch (const std::exception&) {
      throw Error("bad box dimension '" + parts[1] + "'");
    }
    return box_ring(d, signed_ring);
  }
  if (head == "principal") {
    static const std::map<std::string, PrincipalShape, std::less<>> kShapes = {
        {"empty", PrincipalShape::Empty},
        {"origin", PrincipalShape::Origin},
        {"self-similar", PrincipalShape::SelfSimilar},
        {"bounded", PrincipalShape::BoundedNondegenerate}};
    if (parts.size() < 2 || parts.size() > 3 || !kShapes.count(parts[1])) {
      throw Error("bad principal selector: " + std::string(selector));
    }
    bool laurent = parts.size() == 3;
    if (laurent && parts[2] != "laurent") throw Error("unknown principal mode '" + parts[2] + "'");
    return PrincipalRing{kShapes.at(parts[1]), laurent ? RingKind::Laurent : RingKind::Polynomial,
                         std::string(selector)};
  }
  if (selector.starts_with("product:")) {
    std::string_view rest = selector.substr(8);
    // Try each comma until both halves resolve to presented rings.
    for (std::size_t i = rest.find(','); i != std::string_view::npos; i = rest.find(',', i + 1)) {
      try {
        Ring l = resolve_ring(rest.substr(0, i));
        Ring rr = resolve_ring(rest.substr(i + 1));
        const Presentation* lp = presentation_of(l);
        const Presentation* rp = presentation_of(rr);
        if (lp && rp) return product_presentation(*lp, *rp);
      } catch (const Error&) {
      }
    }
    throw Error("bad product selector: " + std::string(selector));
  }
  throw Error("unknown ring selector: " + std::string(selector));
}

const Presentation* presentation_of(const Ring& r) {
  if (const auto* p = std::get_if<Presentation>(&r)) return p;
  if (const auto* pp = std::get_if<ProductPresentation>(&r)) return &pp->combined;
  return nullptr;
}

std::vector<std::pair<char, Polytope>> vertex_labels(std::string_view name) {
  auto gp = [](Int u, Int v) { return Polytope(GridSet::point({u, v})); };
  auto bp = [](Int a, Int b) { return Polytope::box({{a, a}, {b, b}}); };
  if (name == "triangle") return {{'O', gp(0, 0)}, {'A', gp(1, 0)}, {'B', gp(0, 1)}};
  if (name == "square") return {{'O', bp(0, 0)}, {'A', bp(1, 0)}, {'B', bp(0, 1)}, {'C', bp(1, 1)}};
  if (name == "interval") return {{'O', Polytope::interval(0, 0)}, {'A', Polytope::interval(1, 1)}};
  throw Error("unknown polytope '" + std::string(name) + "'");
}

Polytope named_polytope(std::string_view name) {
  if (name == "triangle") return GridSet::triangle(1);
  if (name == "square") return Polytope::box({{0, 1}, {0, 1}});
  if (name == "interval") return Polytope::interval(0, 1);
  throw Error("unknown polytope '" + std::string(name) + "'");
}

std::string face_label(std::string_view polytope_name, const Polytope& face) {
  static const char* kKinds[] = {"vertex", "edge", "face", "cell"};
  std::string letters;
  for (const auto& [ch, v] : vertex_labels(polytope_name)) {
    if (contains(face, v)) letters += ch;
  }
  return std::string(kKinds[std::min(face.dim(), 3)]) + ":" + letters;
}

std::vector<Polytope> parse_cover(std::string_view polytope_name, std::string_view text) {
  const Polytope p = named_polytope(polytope_name);
  const auto labels = vertex_labels(polytope_name);
  std::vector<Polytope> out;
  for (const auto& item : split(text, ',')) {
    std::string_view letters = item;
    if (auto colon = letters.find(':'); colon != std::string_view::npos) letters = letters.substr(colon + 1);
    std::set<char> want(letters.begin(), letters.end());
    if (want.empty()) throw InvalidCover("empty face label in cover '" + std::string(text) + "'");
    const Polytope* match = nullptr;
    std::vector<Polytope> all = faces(p);
    for (const auto& f : all) {
      std::set<char> have;
      for (const auto& [ch, v] : labels) {
        if (contains(f, v)) have.insert(ch);
      }
      if (have == want) match = &f;
    }
    if (!match) throw InvalidCover("'" + item + "' is not a face of " + std::string(polytope_name));
    std::string kind = item.substr(0, item.find(':'));
    if (item.find(':') != std::string::npos && face_label(polytope_name, *match).rfind(kind + ":", 0) != 0) {
      throw InvalidCover("'" + item + "' has the wrong face kind");
    }
    out.push_back(*match);
  }
  return out;
}

std::optional<Verb> parse_verb(std::string_view s) {
  for (Verb v : {Verb::Member, Verb::Normalize, Verb::Tile, Verb::Identity, Verb::MinimalCovers, Verb::Euler,
                 Verb::Product, Verb::Classify}) {
    if (verb_name(v) == s) return v;
  }
  return std::nullopt;
}

std::string_view verb_name(Verb v) {
  switch (v) {
    case Verb::Member: return "member";
    case Verb::Normalize: return "normalize";
    case Verb::Tile: return "tile";
    case Verb::Identity: return "identity";
    case Verb::MinimalCovers: return "minimal-covers";
    case Verb::Euler: return "euler";
    case Verb::Product: return "product";
    case Verb::Classify: return "classify";
  }
  return "";
}

std::string Report::render(Format f) const {
  std::ostringstream os;
  if (f == Format::Structured) {
    os << "minkring-report: 1\n";
    for (const auto& [k, v] : fields) os << k << ": " << v << "\n";
    if (status != 0) os << "error: " << error << "\n";
  } else {
    for (const auto& [k, v] : fields) {
      if (k == "result" || k == "holds") os << v << "\n";
    }
  }
  return os.str();
}

Report run(const Command& c) {
  Report r;
  r.add("verb", std::string(verb_name(c.verb)));
  try {
    switch (c.verb) {
      case Verb::Member: run_member(c, r); break;
      case Verb::Normalize: run_normalize(c, r); break;
      case Verb::Tile: run_tile(c, r); break;
      case Verb::Identity: run_identity(c, r); break;
      case Verb::MinimalCovers: run_minimal_covers(c, r); break;
      case Verb::Euler: run_euler(c, r); break;
      case Verb::Product: run_product(c, r); break;
      case Verb::Classify: run_classify(c, r); break;
    }
  } catch (const Error& e) {
    r.status = 1;
    r.error = e.what();
  }
  return r;
}

}  // namespace minkring::cli
