#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "minkring/geometry.hpp"
#include "minkring/laurent.hpp"
#include "minkring/presentations.hpp"
#include "minkring/products.hpp"

namespace minkring::cli {

// name -> may carry a negative exponent.
using Alphabet = std::map<std::string, bool, std::less<>>;

Alphabet alphabet_of(const Presentation& p);

// sum := ['+'|'-'] term (('+'|'-') term)*
// term := factor (['*'] factor)*
// factor := (rational | name | '(' sum ')') ['^' signed-integer]
// Without an alphabet every name is accepted and may be inverted.
LaurentPoly parse_poly(std::string_view text, const std::optional<Alphabet>& alphabet = std::nullopt);

struct PrincipalRing {
  PrincipalShape shape = PrincipalShape::Origin;
  RingKind kind = RingKind::Polynomial;
  std::string id;
};

using Ring = std::variant<Presentation, ProductPresentation, PrincipalRing>;

// coxeter | interval:a,b[:laurent][:full] | box:d[:signed] | product:<left>,<right>
// | principal:<empty|origin|self-similar|bounded>[:laurent]
Ring resolve_ring(std::string_view selector);
const Presentation* presentation_of(const Ring& r);

// Named test polytopes: triangle, square, interval.
Polytope named_polytope(std::string_view name);
// Vertex letters of a named polytope, in label order.
std::vector<std::pair<char, Polytope>> vertex_labels(std::string_view name);
// "edge:OA" style label of a face, from its vertex letters.
std::string face_label(std::string_view polytope_name, const Polytope& face);
// Comma-separated face labels; the kind prefix is optional.
std::vector<Polytope> parse_cover(std::string_view polytope_name, std::string_view text);

enum class Verb { Member, Normalize, Tile, Identity, MinimalCovers, Euler, Product, Classify };
enum class Format { Structured, Text };

std::optional<Verb> parse_verb(std::string_view s);
std::string_view verb_name(Verb v);

struct Command {
  Verb verb = Verb::Member;
  std::string ring = "coxeter";
  std::string payload;   // polynomial text for member, normalize, euler
  std::string polytope;  // identity, minimal-covers
  std::string cover;     // identity
  std::string axis = "z";
  int n = 1;      // tile
  int bound = 1;  // product
  Format format = Format::Structured;
};

struct Report {
  int status = 0;
  std::vector<std::pair<std::string, std::string>> fields;
  std::string error;

  void add(std::string key, std::string value) { fields.emplace_back(std::move(key), std::move(value)); }
  // Structured: a version line then "key: value" lines. Text: the values of the "result" fields.
  std::string render(Format f) const;
};

// Module errors become status 1 with the message in `error`.
Report run(const Command& command);

}  // namespace minkring::cli
