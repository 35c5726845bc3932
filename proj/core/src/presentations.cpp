#include "minkring/presentations.hpp"

#include <climits>
#include <set>
#include <sstream>

#include "minkring/errors.hpp"

namespace minkring {

namespace {

LaurentPoly var(const std::string& name) { return LaurentPoly::var(name); }

std::string join(const std::vector<LaurentPoly>& gens) {
  std::string s = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += gens[i].to_string();
  }
  return s + ")";
}

}  // namespace

// ---------------------------------------------------------------- Presentation

Presentation::Presentation(std::string id, Ambient ambient, std::vector<Generator> generators,
                           std::vector<LaurentPoly> declared)
    : id_(std::move(id)), ambient_(std::move(ambient)), generators_(std::move(generators)),
      declared_(std::move(declared)) {
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.name.empty() || !seen.insert(g.name).second) throw Error("duplicate or empty generator name: " + g.name);
    if (!fits(g.polytope, ambient_)) throw AmbientMismatch("generator " + g.name + " outside " + ambient_.to_string());
  }
  for (const auto& d : declared_) {
    if (!kernel_member(*this, d)) throw Error("declared generator not in kernel: " + d.to_string());
  }
}

RingKind Presentation::ring_kind() const {
  for (const auto& g : generators_) {
    if (g.polarity == Polarity::Plain) return RingKind::Polynomial;
  }
  return RingKind::Laurent;
}

const Generator* Presentation::find(std::string_view name) const {
  for (const auto& g : generators_) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

std::vector<std::string> Presentation::names() const {
  std::vector<std::string> out;
  for (const auto& g : generators_) out.push_back(g.name);
  return out;
}

std::string Presentation::describe() const {
  std::ostringstream os;
  os << "minkring-presentation: 1\n";
  os << "id: " << id_ << "\n";
  os << "ambient: " << ambient_.to_string() << "\n";
  os << "ring: " << (ring_kind() == RingKind::Laurent ? "laurent" : "polynomial") << "\n";
  for (const auto& g : generators_) {
    os << "generator: " << g.name << " " << (g.polarity == Polarity::Invertible ? "invertible" : "plain") << " "
       << g.polytope.to_string() << "\n";
  }
  for (const auto& d : declared_) os << "declared: " << d.to_string() << "\n";
  return os.str();
}

// ---------------------------------------------------------------- phi

SimpleFunction phi_map(const Presentation& p, const LaurentPoly& f) {
  SimpleFunction::Terms acc;
  auto add = [&](const Polytope& q, const Rational& c) {
    for (auto& cell : decompose_cells(q)) {
      auto [it, inserted] = acc.try_emplace(std::move(cell), c);
      if (!inserted) it->second += c;
    }
  };
  const Polytope origin = Polytope::origin(p.ambient());
  for (const auto& [m, c] : f.terms()) {
    Polytope pos = origin;
    Polytope neg = origin;
    bool has_neg = false;
    for (const auto& [name, e] : m.exponents()) {
      const Generator* g = p.find(name);
      if (!g) throw ArityError("unknown generator '" + name + "' for " + p.id());
      if (e > 0) {
        pos = minkowski_sum(pos, scale(g->polytope, e));
      } else {
        if (g->polarity == Polarity::Plain) throw NegativeExponent("negative exponent on plain generator " + name);
        neg = minkowski_sum(neg, scale(g->polytope, -e));
        has_neg = true;
      }
    }
    if (!has_neg) {
      add(pos, c);
      continue;
    }
    for (const auto& face : faces(neg)) {
      add(minkowski_sum(pos, negate(face)), face.dim() % 2 == 0 ? c : Rational(-c));
    }
  }
  return SimpleFunction(p.ambient(), std::move(acc));
}

bool kernel_member(const Presentation& p, const LaurentPoly& f) { return is_zero(phi_map(p, f)); }

std::optional<NonzeroWitness> nonzero_witness(const Presentation& p, const LaurentPoly& f) {
  SimpleFunction img = phi_map(p, f);
  if (is_zero(img)) return std::nullopt;
  auto point = img.terms().begin()->first.representative();
  Rational value = evaluate_at(img, point);
  return NonzeroWitness{std::move(point), std::move(value)};
}

// ---------------------------------------------------------------- principal case

std::string IdealDescription::to_string() const {
  if (whole_ring) return "(1)";
  if (generators.empty()) return "(0)";
  return join(generators);
}

IdealDescription classify_principal(PrincipalShape s, RingKind ring) {
  const LaurentPoly x = var("x");
  if (ring == RingKind::Polynomial) {
    switch (s) {
      case PrincipalShape::Empty:
        return {false, {x}};
      case PrincipalShape::Origin:
        return {false, {x - 1}};
      case PrincipalShape::SelfSimilar:
        return {false, {x * (x - 1)}};
      case PrincipalShape::BoundedNondegenerate:
        return {false, {}};
    }
  }
  switch (s) {
    case PrincipalShape::Empty:
      return {true, {}};
    case PrincipalShape::Origin:
    case PrincipalShape::SelfSimilar:
      return {false, {x - 1}};
    case PrincipalShape::BoundedNondegenerate:
      return {false, {}};
  }
  return {};
}

bool principal_member(PrincipalShape s, RingKind ring, const LaurentPoly& f) {
  auto vars = f.variables();
  if (vars.size() > 1 || (vars.size() == 1 && *vars.begin() != "x")) throw ArityError("principal ring has the single generator x");
  IdealDescription ideal = classify_principal(s, ring);
  if (ideal.whole_ring) return true;
  if (ring == RingKind::Laurent) return univariate_ideal_member(f, ideal.generators);
  if (f.has_negative_exponent()) throw NegativeExponent("negative exponent in polynomial ring");
  if (ideal.generators.empty()) return f.is_zero();
  // Q[x]: the single generator g = x^k h with h(0) != 0 divides f iff x^k | f and h | f.
  const LaurentPoly& g = ideal.generators[0];
  int k = INT_MAX;
  for (const auto& [m, c] : g.terms()) k = std::min(k, m.exponent("x"));
  for (const auto& [m, c] : f.terms()) {
    if (m.exponent("x") < k) return false;
  }
  return univariate_ideal_member(f, ideal.generators);
}

// ---------------------------------------------------------------- catalog

IntervalClass interval_class(const Scalar& alpha, const Scalar& beta) {
  if (!(alpha < beta)) throw DegenerateInterval("interval ring needs alpha < beta");
  if (alpha.sign() == 0 || beta.sign() == 0) return {'A', 0, 0};
  const Rational& p = alpha.rational_part();
  const Rational& q = alpha.radical_part();
  const Rational& r = beta.rational_part();
  const Rational& s = beta.radical_part();
  if (p * s - q * r != 0) return {'B', 0, 0};
  Rational ratio = sgn(s) != 0 ? Rational(q / s) : Rational(p / r);
  mpz_class num = abs(ratio.get_num());
  long m = num.get_si();
  long n = ratio.get_den().get_si();
  return {sgn(ratio) > 0 ? 'C' : 'D', m, n};
}

Presentation interval_ring(const Scalar& alpha, const Scalar& beta, RingKind ring, bool keep_unit) {
  IntervalClass cls = interval_class(alpha, beta);
  const Polarity pol = ring == RingKind::Laurent ? Polarity::Invertible : Polarity::Plain;
  const bool rational = alpha.is_rational() && beta.is_rational();
  Ambient amb = Ambient::line(rational ? LineMode::Rational : LineMode::Sqrt2);
  std::string id = "interval:" + alpha.to_string() + "," + beta.to_string();
  if (ring == RingKind::Laurent) id += ":laurent";
  const LaurentPoly x = var("x"), y = var("y"), z = var("z");
  if (cls.label == 'A' && !keep_unit) {
    const Scalar& e = alpha.sign() == 0 ? beta : alpha;
    return Presentation(id, amb,
                        {{"x", Polytope::interval(e, e), pol}, {"y", Polytope::interval(alpha, beta), pol}},
                        {(y - 1) * (y - x)});
  }
  if (keep_unit) id += ":full";
  std::vector<Generator> gens = {{"x", Polytope::interval(alpha, alpha), pol},
                                 {"y", Polytope::interval(beta, beta), pol},
                                 {"z", Polytope::interval(alpha, beta), pol}};
  std::vector<LaurentPoly> declared = {(z - x) * (z - y)};
  switch (cls.label) {
    case 'A':
      declared.push_back(alpha.sign() == 0 ? x - 1 : y - 1);
      break;
    case 'C':
      declared.push_back(y.pow(static_cast<int>(cls.m)) - x.pow(static_cast<int>(cls.n)));
      break;
    case 'D':
      declared.push_back(x.pow(static_cast<int>(cls.n)) * y.pow(static_cast<int>(cls.m)) - 1);
      break;
    default:
      break;
  }
  return Presentation(id, amb, std::move(gens), std::move(declared));
}

Presentation box_ring(int d, bool signed_ring) {
  if (d < 1 || d > 4) throw ArityError("box ring dimension must be in 1..4");
  const Polarity pol = signed_ring ? Polarity::Invertible : Polarity::Plain;
  std::vector<Generator> gens;
  std::vector<LaurentPoly> declared;
  for (int i = 0; i < d; ++i) {
    std::string suffix = d == 1 ? "" : std::to_string(i + 1);
    std::vector<AxisRange> point(d), segment(d);
    point[i] = {1, 1};
    segment[i] = {0, 1};
    gens.push_back({"x" + suffix, Polytope::box(point), pol});
    gens.push_back({"y" + suffix, Polytope::box(segment), pol});
    declared.push_back((var("y" + suffix) - 1) * (var("y" + suffix) - var("x" + suffix)));
  }
  std::string id = "box:" + std::to_string(d) + (signed_ring ? ":signed" : "");
  return Presentation(id, Ambient::box(d), std::move(gens), std::move(declared));
}

Presentation coxeter_ring() {
  const LaurentPoly x1 = var("x1"), x2 = var("x2"), y1 = var("y1"), y2 = var("y2"), y3 = var("y3"), z = var("z");
  std::vector<Generator> gens = {
      {"x1", GridSet::point({1, 0})},
      {"x2", GridSet::point({0, 1})},
      {"y1", GridSet::hull({0, 0}, {1, 0})},
      {"y2", GridSet::hull({0, 0}, {0, 1})},
      {"y3", GridSet::hull({1, 0}, {0, 1})},
      {"z", GridSet::triangle(1)},
  };
  std::vector<LaurentPoly> declared = {
      (y1 - 1) * (y1 - x1), (y2 - 1) * (y2 - x2), (y3 - x1) * (y3 - x2),
      (z - 1) * (z - y3),   (z - x1) * (z - y2),  (z - x2) * (z - y1),
      (z - y1) * (z - y2),  (z - y1) * (z - y3),  (z - y2) * (z - y3),
  };
  return Presentation("coxeter", Ambient::grid(), std::move(gens), std::move(declared));
}

bool minimality_witness(const Presentation& p, std::size_t target_index, const Witness& witness) {
  const auto& decl = p.declared();
  if (target_index >= decl.size()) throw ArityError("target index out of range");
  Assignment full = witness.values;
  if (witness.rest) {
    for (const auto& name : p.names()) full.try_emplace(name, *witness.rest);
  }
  std::vector<LaurentPoly> others;
  LaurentPoly target;
  std::set<std::string> free;
  for (std::size_t i = 0; i < decl.size(); ++i) {
    LaurentPoly img = lp_substitute(decl[i], full);
    auto v = img.variables();
    free.insert(v.begin(), v.end());
    if (i == target_index) {
      target = std::move(img);
    } else {
      others.push_back(std::move(img));
    }
  }
  if (free.size() > 1) throw UnsupportedWitness("witness leaves more than one variable free");
  if (target.is_zero()) return false;
  return !univariate_ideal_member(target, others);
}

LaurentPoly random_ideal_element(const Presentation& p, std::mt19937_64& rng, int terms) {
  const auto& decl = p.declared();
  if (decl.empty()) return {};
  std::uniform_int_distribution<std::size_t> pick(0, decl.size() - 1);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3), exp_signed(-2, 2), exp_plain(0, 2), use(0, 2);
  LaurentPoly out;
  for (int t = 0; t < terms; ++t) {
    Monomial::Exponents exps;
    for (const auto& g : p.generators()) {
      if (use(rng) != 0) continue;
      int e = g.polarity == Polarity::Invertible ? exp_signed(rng) : exp_plain(rng);
      if (e != 0) exps.emplace_back(g.name, e);
    }
    int a = num(rng);
    if (a == 0) a = 1;
    Rational coeff(a, den(rng));
    coeff.canonicalize();
    out += LaurentPoly(Monomial(std::move(exps)), coeff) * decl[pick(rng)];
  }
  return out;
}

}  // namespace minkring
