#include <gtest/gtest.h>

#include <random>

#include "minkring/errors.hpp"
#include "minkring/simplefn.hpp"
#include "random_objects.hpp"

namespace minkring {
namespace {

using testing::kIterations;

std::vector<std::vector<Scalar>> grid_probes(const GridSet& g) {
  std::vector<std::vector<Scalar>> out;
  for (Int a = 2 * (g.u_min() - 1); a <= 2 * (g.u_max() + 1); ++a) {
    for (Int b = 2 * (g.v_min() - 1); b <= 2 * (g.v_max() + 1); ++b) {
      Rational u(a, 2), v(b, 2);
      u.canonicalize();
      v.canonicalize();
      out.push_back({u, v});
      Rational w = v + Rational(1, 3);
      out.push_back({u, w});
    }
  }
  return out;
}

TEST(Indicator, AgreesWithMembershipOnProbes) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < kIterations / 2; ++i) {
    GridSet g = testing::random_grid_set(rng, 2);
    SimpleFunction f = indicator(g);
    SimpleFunction ri = indicator(g, IndicatorMode::RelativeInterior);
    std::vector<Polytope> proper;
    for (const auto& face : faces(g)) {
      if (!(face == Polytope(g))) proper.push_back(face);
    }
    for (const auto& x : grid_probes(g)) {
      bool in = contains_point(g, x);
      EXPECT_EQ(evaluate_at(f, x), in ? 1 : 0);
      bool on_boundary = false;
      for (const auto& face : proper) on_boundary = on_boundary || contains_point(face, x);
      EXPECT_EQ(evaluate_at(ri, x), in && !on_boundary ? 1 : 0);
    }
  }
}

TEST(Indicator, LineProbes) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < kIterations; ++i) {
    Polytope p = testing::random_interval(rng, true);
    SimpleFunction f = indicator(p, IndicatorMode::Closed, Ambient::line(LineMode::Sqrt2));
    const auto& l = p.as<LinePolytope>();
    for (int j = 0; j < 20; ++j) {
      Scalar x = testing::random_scalar(rng, true);
      std::vector<Scalar> xs{x};
      EXPECT_EQ(evaluate_at(f, xs), (l.lo <= x && x <= l.hi) ? 1 : 0);
    }
    std::vector<Scalar> lo{l.lo}, hi{l.hi};
    EXPECT_EQ(evaluate_at(f, lo), 1);
    EXPECT_EQ(evaluate_at(f, hi), 1);
  }
}

TEST(Indicator, LineCanonicalFormMergesContinuousBreakpoints) {
  Ambient amb = Ambient::line(LineMode::Rational);
  SimpleFunction a = indicator(Polytope::interval(0, 1), IndicatorMode::Closed, amb);
  SimpleFunction b = indicator(Polytope::interval(1, 2), IndicatorMode::Closed, amb);
  SimpleFunction c = indicator(Polytope::interval(1, 1), IndicatorMode::Closed, amb);
  EXPECT_EQ(a + b - c, indicator(Polytope::interval(0, 2), IndicatorMode::Closed, amb));
}

TEST(Indicator, RelativeInteriorIsAlternatingFaceSum) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < kIterations / 2; ++i) {
    Polytope p = i % 3 == 0 ? testing::random_box(rng, 3)
                 : i % 3 == 1 ? Polytope(testing::random_grid_set(rng))
                              : testing::random_interval(rng, true);
    SimpleFunction expected(p.natural_ambient());
    for (const auto& f : faces(p)) {
      SimpleFunction term = indicator(f, IndicatorMode::Closed, p.natural_ambient());
      if ((p.dim() - f.dim()) % 2) {
        expected -= term;
      } else {
        expected += term;
      }
    }
    EXPECT_EQ(indicator(p, IndicatorMode::RelativeInterior), expected) << p.to_string();
    EXPECT_EQ(euler_char(indicator(p)), 1);
    EXPECT_EQ(euler_char(indicator(p, IndicatorMode::RelativeInterior)), p.dim() % 2 ? -1 : 1);
  }
}

TEST(Multiply, IndicatorsMultiplyToMinkowskiSums) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < kIterations / 2; ++i) {
    Polytope a = testing::random_grid_set(rng, 2), b = testing::random_grid_set(rng, 2);
    EXPECT_EQ(multiply(indicator(a), indicator(b)), indicator(minkowski_sum(a, b)));
    Polytope c = testing::random_box(rng, 2), d = testing::random_box(rng, 2);
    EXPECT_EQ(multiply(indicator(c), indicator(d)), indicator(minkowski_sum(c, d)));
    Polytope e = testing::random_interval(rng, true), f = testing::random_interval(rng, true);
    Ambient amb = Ambient::line(LineMode::Sqrt2);
    EXPECT_EQ(multiply(indicator(e, IndicatorMode::Closed, amb), indicator(f, IndicatorMode::Closed, amb)),
              indicator(minkowski_sum(e, f), IndicatorMode::Closed, amb));
  }
}

TEST(Multiply, RingAxiomsOnMixedCombinations) {
  std::mt19937_64 rng(5);
  auto random_fn = [&] {
    SimpleFunction f(Ambient::grid());
    for (int k = 0; k < 3; ++k) {
      Rational c(testing::uniform(rng, -3, 3));
      auto mode = testing::uniform(rng, 0, 1) ? IndicatorMode::Closed : IndicatorMode::RelativeInterior;
      f += c * indicator(testing::random_grid_set(rng, 1), mode);
    }
    return f;
  };
  for (int i = 0; i < 20; ++i) {
    SimpleFunction f = random_fn(), g = random_fn(), h = random_fn();
    EXPECT_EQ(multiply(f, g), multiply(g, f));
    EXPECT_EQ(multiply(multiply(f, g), h), multiply(f, multiply(g, h)));
    EXPECT_EQ(multiply(f, g + h), multiply(f, g) + multiply(f, h));
    EXPECT_EQ(euler_char(multiply(f, g)), euler_char(f) * euler_char(g));
  }
}

TEST(Multiply, OpenSegmentSquares) {
  // Open cells multiply with a sign: (0,1) * (0,1) = -(0,2), since ([S] - [0] - [A])^2 is -1 at A.
  Polytope seg = GridSet::hull({0, 0}, {1, 0});
  SimpleFunction open = indicator(seg, IndicatorMode::RelativeInterior);
  EXPECT_EQ(multiply(open, open), Rational(-1) * indicator(scale(seg, 2), IndicatorMode::RelativeInterior));
  auto exp = closed_expansion(open);
  EXPECT_EQ(exp.size(), 3u);
  EXPECT_EQ(exp.at(seg), 1);
}

TEST(Tensor, EvaluatesAsProduct) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 20; ++i) {
    GridSet g = testing::random_grid_set(rng, 1);
    Polytope b = testing::random_box(rng, 1);
    SimpleFunction t = tensor(indicator(g), indicator(b, IndicatorMode::RelativeInterior));
    EXPECT_EQ(t, indicator(Polytope::product({g, b}), IndicatorMode::Closed) -
                     tensor(indicator(g), indicator(b) - indicator(b, IndicatorMode::RelativeInterior)));
  }
}

TEST(Euler, EqualIndicatorSumsHaveEqualLengths) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto [lhs, rhs] = testing::equal_indicator_sums(rng, 6);
    SimpleFunction f(Ambient::grid()), g(Ambient::grid());
    for (const auto& p : lhs) f += indicator(p);
    for (const auto& p : rhs) g += indicator(p);
    ASSERT_EQ(f, g);
    EXPECT_EQ(euler_char(f), Rational(static_cast<long>(lhs.size())));
    EXPECT_EQ(lhs.size(), rhs.size());
  }
}

TEST(SimpleFunction, AmbientChecks) {
  EXPECT_THROW(indicator(GridSet::triangle(), IndicatorMode::Closed, Ambient::box(2)), AmbientMismatch);
  EXPECT_THROW(indicator(GridSet::triangle()) + indicator(Polytope::box({{0, 1}})), AmbientMismatch);
}

}  // namespace
}  // namespace minkring
