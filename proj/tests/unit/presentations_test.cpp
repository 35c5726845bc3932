#include <gtest/gtest.h>

#include <random>

#include "catalog.hpp"
#include "minkring/errors.hpp"
#include "minkring/presentations.hpp"
#include "random_objects.hpp"

namespace minkring {
namespace {

using testing::kIterations;

LaurentPoly v(const char* name, int e = 1) { return LaurentPoly::var(name, e); }

TEST(Coxeter, DeclaredGeneratorsAreTheNineRelations) {
  Presentation p = coxeter_ring();
  LaurentPoly x1 = v("x1"), x2 = v("x2"), y1 = v("y1"), y2 = v("y2"), y3 = v("y3"), z = v("z");
  std::vector<LaurentPoly> expected = {
      (y1 - 1) * (y1 - x1), (y2 - 1) * (y2 - x2), (y3 - x1) * (y3 - x2),
      (z - 1) * (z - y3),   (z - x1) * (z - y2),  (z - x2) * (z - y1),
      (z - y1) * (z - y2),  (z - y1) * (z - y3),  (z - y2) * (z - y3),
  };
  EXPECT_EQ(p.declared(), expected);
  for (const auto& g : p.declared()) EXPECT_TRUE(kernel_member(p, g)) << g.to_string();
  EXPECT_EQ(p.ring_kind(), RingKind::Laurent);
}

TEST(Coxeter, MinimalityWitnesses) {
  Presentation p = coxeter_ring();
  for (std::size_t i = 0; i < 9; ++i) EXPECT_TRUE(minimality_witness(p, i, testing::coxeter_witness(i))) << i;
  // The unaugmented assignment for (z-x1)(z-y2) leaves x1 and y2 free.
  Witness loose{{{"z", 1}, {"y1", 1}, {"y3", 1}, {"x2", 1}}, std::nullopt};
  EXPECT_THROW(minimality_witness(p, 4, loose), UnsupportedWitness);
  // The printed assignment y1 = y3 = 1, rest 0 fails: (z-1)(z-y3) becomes the unit 1.
  EXPECT_FALSE(minimality_witness(p, 7, {{{"y1", 1}, {"y3", 1}}, Rational(0)}));
  EXPECT_FALSE(minimality_witness(p, 8, {{{"y2", 1}, {"y3", 1}}, Rational(0)}));
}

TEST(Coxeter, WitnessRejectsRedundantGenerator) {
  Presentation base = coxeter_ring();
  std::vector<LaurentPoly> declared = base.declared();
  declared.push_back(declared[0] * v("y2"));  // redundant: a multiple of the first generator
  Presentation p("coxeter+redundant", base.ambient(), base.generators(), declared);
  EXPECT_FALSE(minimality_witness(p, 9, {{{"x1", 1}, {"x2", 1}, {"y2", 1}, {"y3", 1}, {"z", 1}}, std::nullopt}));
}

TEST(Coxeter, RhombusAndDownTriangle) {
  Presentation p = coxeter_ring();
  LaurentPoly x1 = v("x1"), x2 = v("x2"), y1 = v("y1"), y2 = v("y2"), y3 = v("y3"), z = v("z");
  LaurentPoly rhs = z * z - x1 * (z - y2) - x2 * (z - y1);
  EXPECT_TRUE(kernel_member(p, y1 * y2 - rhs));
  EXPECT_FALSE(kernel_member(p, y1 * y1 * y2 * y2 - rhs));
  EXPECT_EQ(phi_map(p, y1 * y2), indicator(GridSet::parallelogram(1, 1)));
  LaurentPoly down = x1 * x2 * v("z", -1) + x2 * y1 + x1 * y2 + y3 - x1 - x2 - x1 * x2;
  EXPECT_EQ(down.size(), 7u);
  EXPECT_EQ(phi_map(p, down), indicator(GridSet::down_triangle(1)));
  EXPECT_TRUE(kernel_member(p, down - (z * z - (z - y3) - x1 * (z - y2) - x2 * (z - y1))));
  // Open down triangle.
  EXPECT_EQ(phi_map(p, x1 * x2 * v("z", -1)), indicator(GridSet::down_triangle(1), IndicatorMode::RelativeInterior));
}

TEST(Phi, MonomialsMapToMinkowskiSums) {
  Presentation p = coxeter_ring();
  std::mt19937_64 rng(1);
  for (int i = 0; i < kIterations / 4; ++i) {
    Polytope sum = Polytope::origin(Ambient::grid());
    Monomial m;
    for (const auto& g : p.generators()) {
      int e = static_cast<int>(testing::uniform(rng, 0, 2));
      m = m * Monomial::var(g.name, e);
      sum = minkowski_sum(sum, scale(g.polytope, e));
    }
    EXPECT_EQ(phi_map(p, LaurentPoly(m)), indicator(sum)) << m.to_string();
  }
  EXPECT_EQ(phi_map(p, v("x1", -1)), indicator(GridSet::point({-1, 0})));
}

TEST(Phi, IsARingHomomorphism) {
  std::mt19937_64 rng(2);
  for (const auto& p : testing::catalog()) {
    bool laurent = p.ring_kind() == RingKind::Laurent;
    for (int i = 0; i < 6; ++i) {
      LaurentPoly f = testing::random_poly(rng, p.names(), 3, 2, laurent);
      LaurentPoly g = testing::random_poly(rng, p.names(), 3, 2, laurent);
      EXPECT_EQ(phi_map(p, f * g), multiply(phi_map(p, f), phi_map(p, g))) << p.id();
      EXPECT_EQ(phi_map(p, f + g), phi_map(p, f) + phi_map(p, g));
    }
  }
}

TEST(Phi, WitnessPointsCarryTheValue) {
  Presentation p = coxeter_ring();
  std::mt19937_64 rng(3);
  for (int i = 0; i < kIterations / 4; ++i) {
    LaurentPoly f = testing::random_poly(rng, p.names(), 3, 1, true);
    auto w = nonzero_witness(p, f);
    SimpleFunction image = phi_map(p, f);
    ASSERT_EQ(w.has_value(), !is_zero(image));
    if (w) {
      EXPECT_NE(w->value, 0);
      EXPECT_EQ(evaluate_at(image, w->point), w->value);
    }
  }
  EXPECT_FALSE(nonzero_witness(p, p.declared()[3]).has_value());
}

TEST(Ideal, RandomElementsAreKernelMembersAndVanishAtOnes) {
  std::mt19937_64 rng(4);
  for (const auto& p : testing::catalog()) {
    Assignment ones;
    for (const auto& n : p.names()) ones[n] = 1;
    for (int i = 0; i < 8; ++i) {
      LaurentPoly f = random_ideal_element(p, rng);
      EXPECT_TRUE(kernel_member(p, f)) << p.id() << " " << f.to_string();
      EXPECT_TRUE(lp_substitute(f, ones).is_zero());
    }
  }
}

TEST(Ideal, PowerClosure) {
  for (const auto& p : testing::catalog()) {
    std::vector<int> powers = p.ring_kind() == RingKind::Laurent ? std::vector<int>{-2, -1, 2, 3}
                                                                 : std::vector<int>{2, 3};
    for (const auto& g : p.declared()) {
      for (int i : powers) EXPECT_TRUE(kernel_member(p, lp_power_map(g, i))) << p.id() << " " << g.to_string();
    }
  }
}

TEST(Principal, FourShapes) {
  EXPECT_EQ(classify_principal(PrincipalShape::Empty, RingKind::Polynomial).to_string(), "(x)");
  EXPECT_EQ(classify_principal(PrincipalShape::Empty, RingKind::Laurent).to_string(), "(1)");
  EXPECT_EQ(classify_principal(PrincipalShape::Origin, RingKind::Polynomial).to_string(), "(x - 1)");
  EXPECT_EQ(classify_principal(PrincipalShape::SelfSimilar, RingKind::Polynomial).to_string(), "(x^2 - x)");
  EXPECT_EQ(classify_principal(PrincipalShape::SelfSimilar, RingKind::Laurent).to_string(), "(x - 1)");
  EXPECT_EQ(classify_principal(PrincipalShape::BoundedNondegenerate, RingKind::Laurent).to_string(), "(0)");
  LaurentPoly x = v("x");
  EXPECT_TRUE(principal_member(PrincipalShape::Origin, RingKind::Polynomial, x * x - 1));
  EXPECT_FALSE(principal_member(PrincipalShape::SelfSimilar, RingKind::Polynomial, x - 1));
  EXPECT_TRUE(principal_member(PrincipalShape::SelfSimilar, RingKind::Laurent, v("x", -1) - 1));
  EXPECT_TRUE(principal_member(PrincipalShape::Empty, RingKind::Laurent, x + 5));
  EXPECT_FALSE(principal_member(PrincipalShape::BoundedNondegenerate, RingKind::Polynomial, x));
}

TEST(Interval, Classes) {
  EXPECT_EQ(interval_class(0, 2).label, 'A');
  EXPECT_EQ(interval_class(-3, 0).label, 'A');
  EXPECT_EQ(interval_class(1, Scalar::sqrt2()).label, 'B');
  IntervalClass c = interval_class(1, 2);
  EXPECT_EQ(c.label, 'C');
  EXPECT_EQ(c.m, 1);
  EXPECT_EQ(c.n, 2);
  IntervalClass d = interval_class(-1, 2);
  EXPECT_EQ(d.label, 'D');
  EXPECT_EQ(d.m, 1);
  EXPECT_EQ(d.n, 2);
  IntervalClass r = interval_class(Scalar(0, 2), Scalar(0, 3));
  EXPECT_EQ(r.label, 'C');
  EXPECT_EQ(r.m, 2);
  EXPECT_EQ(r.n, 3);
  EXPECT_THROW(interval_class(1, 1), DegenerateInterval);
}

TEST(Interval, DeclaredGenerators) {
  LaurentPoly x = v("x"), y = v("y"), z = v("z");
  EXPECT_EQ(interval_ring(0, 2, RingKind::Polynomial).declared(), std::vector<LaurentPoly>{(y - 1) * (y - x)});
  EXPECT_EQ(interval_ring(1, Scalar::sqrt2(), RingKind::Polynomial).declared(),
            std::vector<LaurentPoly>{(z - x) * (z - y)});
  EXPECT_EQ(interval_ring(1, 2, RingKind::Polynomial).declared(),
            (std::vector<LaurentPoly>{(z - x) * (z - y), y - x * x}));
  EXPECT_EQ(interval_ring(-1, 2, RingKind::Laurent).declared(),
            (std::vector<LaurentPoly>{(z - x) * (z - y), x * x * y - 1}));
}

// x^i y^j - x^i' y^j' is in the kernel iff the point sums coincide, read off the generator polytopes.
void check_binomials(const Presentation& p, int* passing) {
  *passing = 0;
  auto point_sum = [&](int i, int j) {
    return minkowski_sum(scale(p.find("x")->polytope, i), scale(p.find("y")->polytope, j));
  };
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      for (int k = 0; k <= 3; ++k)
        for (int l = 0; l <= 3; ++l) {
          if (i == k && j == l) continue;
          LaurentPoly f = v("x", i) * v("y", j) - v("x", k) * v("y", l);
          bool predicted = point_sum(i, j) == point_sum(k, l);
          EXPECT_EQ(kernel_member(p, f), predicted) << p.id() << " " << f.to_string();
          *passing += predicted ? 1 : 0;
        }
}

TEST(Interval, BinomialCatalog) {
  int passing = 0;
  check_binomials(interval_ring(1, Scalar::sqrt2(), RingKind::Polynomial), &passing);
  EXPECT_EQ(passing, 0);
  // alpha/beta = 1/2: (i', j') = (i, j) + l(2, -1).
  check_binomials(interval_ring(1, 2, RingKind::Polynomial), &passing);
  int lattice = 0;
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      for (int l : {-3, -2, -1, 1, 2, 3}) {
        int k = i + 2 * l, m = j - l;
        lattice += (k >= 0 && k <= 3 && m >= 0 && m <= 3) ? 1 : 0;
      }
  EXPECT_EQ(passing, lattice);
  EXPECT_GT(passing, 0);
  // alpha/beta = -1/2: (i', j') = (i, j) + l(2, 1).
  check_binomials(interval_ring(-1, 2, RingKind::Polynomial), &passing);
  lattice = 0;
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      for (int l : {-3, -2, -1, 1, 2, 3}) {
        int k = i + 2 * l, m = j + l;
        lattice += (k >= 0 && k <= 3 && m >= 0 && m <= 3) ? 1 : 0;
      }
  EXPECT_EQ(passing, lattice);
  EXPECT_GT(passing, 0);
}

TEST(Box, SignedInverseIdentity) {
  Presentation p = box_ring(1, true);
  LaurentPoly x = v("x"), y = v("y"), xi = v("x", -1);
  EXPECT_TRUE(kernel_member(p, v("y", -1) - (1 + xi - xi * y)));
  EXPECT_FALSE(kernel_member(p, v("y", -1) - (1 + xi)));
  Presentation q = box_ring(3, false);
  EXPECT_EQ(q.declared().size(), 3u);
  EXPECT_EQ(q.ring_kind(), RingKind::Polynomial);
}

TEST(Presentation, Validation) {
  Ambient g = Ambient::grid();
  std::vector<Generator> dup = {{"a", GridSet::triangle()}, {"a", GridSet::point({1, 0})}};
  EXPECT_THROW(Presentation("dup", g, dup, {}), Error);
  std::vector<Generator> one = {{"a", GridSet::triangle()}};
  EXPECT_THROW(Presentation("bad", g, one, {v("a") - 1}), Error);
  std::vector<Generator> wrong = {{"a", Polytope::box({{0, 1}})}};
  EXPECT_THROW(Presentation("amb", g, wrong, {}), Error);
  std::string d = coxeter_ring().describe();
  EXPECT_EQ(d.substr(0, d.find('\n')), "minkring-presentation: 1");
  EXPECT_NE(d.find("generator: z invertible"), std::string::npos);
}

}  // namespace
}  // namespace minkring
