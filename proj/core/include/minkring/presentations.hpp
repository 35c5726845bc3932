#pragma once

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "minkring/geometry.hpp"
#include "minkring/laurent.hpp"
#include "minkring/simplefn.hpp"

namespace minkring {

enum class Polarity { Plain, Invertible };
enum class RingKind { Polynomial, Laurent };

struct Generator {
  std::string name;
  Polytope polytope;
  Polarity polarity = Polarity::Invertible;
};

// phi(name) = [polytope]. Declared kernel generators are verified at construction.
class Presentation {
 public:
  Presentation(std::string id, Ambient ambient, std::vector<Generator> generators, std::vector<LaurentPoly> declared);

  const std::string& id() const { return id_; }
  const Ambient& ambient() const { return ambient_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<LaurentPoly>& declared() const { return declared_; }
  // Laurent when every generator is invertible.
  RingKind ring_kind() const;

  const Generator* find(std::string_view name) const;
  std::vector<std::string> names() const;

  // Versioned line-oriented descriptor.
  std::string describe() const;

 private:
  std::string id_;
  Ambient ambient_;
  std::vector<Generator> generators_;
  std::vector<LaurentPoly> declared_;
};

// A monomial with negative part Q- maps to sum over faces F of Q- of (-1)^dim F [Q+ - F].
SimpleFunction phi_map(const Presentation& p, const LaurentPoly& f);
bool kernel_member(const Presentation& p, const LaurentPoly& f);

struct NonzeroWitness {
  std::vector<Scalar> point;
  Rational value;
};
// A point where phi(f) is nonzero, if any.
std::optional<NonzeroWitness> nonzero_witness(const Presentation& p, const LaurentPoly& f);

enum class PrincipalShape { Empty, Origin, SelfSimilar, BoundedNondegenerate };

struct IdealDescription {
  bool whole_ring = false;
  std::vector<LaurentPoly> generators;  // empty and !whole_ring: the zero ideal
  std::string to_string() const;
};

// Kernel of Q[x] (or Q[x,x^-1]) -> M({S}) for the four shapes of S.
IdealDescription classify_principal(PrincipalShape s, RingKind ring);
bool principal_member(PrincipalShape s, RingKind ring, const LaurentPoly& f);

struct IntervalClass {
  char label = 'A';  // 'A'..'D'
  long m = 0;        // C: alpha/beta = m/n; D: alpha/beta = -m/n
  long n = 0;
};

IntervalClass interval_class(const Scalar& alpha, const Scalar& beta);

// x -> {alpha}, y -> {beta}, z -> [alpha, beta]. Case A drops the unit endpoint
// (x -> the nonzero endpoint, y -> the interval) unless keep_unit is set.
Presentation interval_ring(const Scalar& alpha, const Scalar& beta, RingKind ring, bool keep_unit = false);

// x_i -> e_i, y_i -> [0, e_i]; names x, y when d = 1.
Presentation box_ring(int d, bool signed_ring);

// x1 -> {A}, x2 -> {B}, y1 -> [O,A], y2 -> [O,B], y3 -> [A,B], z -> [O,A,B]; declared G1 then G2.
Presentation coxeter_ring();

struct Witness {
  Assignment values;
  std::optional<Rational> rest;  // value for every generator not in values
};

// True iff after substitution the target is outside the ideal of the other declared generators,
// decided in one variable.
bool minimality_witness(const Presentation& p, std::size_t target_index, const Witness& witness);

// Random Q-combination of declared generators times monomials with exponents in [-2, 2]
// (nonnegative for plain generators).
LaurentPoly random_ideal_element(const Presentation& p, std::mt19937_64& rng, int terms = 3);

}  // namespace minkring
