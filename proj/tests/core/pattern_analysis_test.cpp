#include <gtest/gtest.h>

#include "qapblock/error.hpp"
#include "qapblock/generators.hpp"
#include "qapblock/pattern_analysis.hpp"
#include "test_support.hpp"

namespace qapblock {
namespace {

using testing::mat;

TEST(QuadraticOnInterval, InteriorVertex) {
  const IntervalMinimum m = quadratic_on_interval(1, -1, 0, 0, 1);
  EXPECT_EQ(m.argmin, Rational(1, 2));
  EXPECT_EQ(m.min, Rational(-1, 4));
  EXPECT_TRUE(m.interior);
  EXPECT_TRUE(m.unique);
}

TEST(QuadraticOnInterval, ConcaveTakesAnEndpoint) {
  const IntervalMinimum m = quadratic_on_interval(-4, 24, 0, 1, 4);
  EXPECT_EQ(m.argmin, 1);
  EXPECT_EQ(m.min, 20);
  EXPECT_FALSE(m.interior);
  EXPECT_TRUE(m.unique);
}

TEST(QuadraticOnInterval, ConstantIsNotUnique) {
  const IntervalMinimum m = quadratic_on_interval(0, 0, 7, 0, 1);
  EXPECT_EQ(m.min, 7);
  EXPECT_FALSE(m.unique);
  EXPECT_FALSE(m.interior);
}

TEST(QuadraticOnInterval, VertexOutsideAndDegenerateInterval) {
  const IntervalMinimum right = quadratic_on_interval(1, -10, 0, 0, 1);
  EXPECT_EQ(right.argmin, 1);
  EXPECT_FALSE(right.interior);
  const IntervalMinimum point = quadratic_on_interval(1, 0, 0, 2, 2);
  EXPECT_EQ(point.min, 4);
  EXPECT_FALSE(point.interior);
  EXPECT_THROW(quadratic_on_interval(1, 0, 0, 1, 0), InvalidInput);
}

TEST(Ensemble, Validation) {
  EXPECT_THROW(Ensemble(2, 0, 1, Rational(1, 2), {0, 0}), InvalidInput);
  EXPECT_THROW(Ensemble(3, 1, 1, 1, {0, 0, 0}), InvalidInput);
  EXPECT_THROW(Ensemble(3, 0, 1, 2, {0, 0, -1}), InvalidInput);
  EXPECT_NO_THROW(Ensemble(3, 0, 2, Rational(1, 3), {0, Rational(2, 3), 0}));
  EXPECT_THROW(VeryBadEnsemble(0, 1, {0, 1}, {1, 1}), InvalidInput);
}

TEST(Qp1, ConcavePatternHasBoundaryMinimum) {
  const QpSolution s = qp1_minimize(mat({{0, 2}, {2, 1}}), Ensemble(2, 0, 1, 1, {0, 0}));
  EXPECT_FALSE(s.interior_r_s);
  EXPECT_FALSE(is_bad(mat({{0, 2}, {2, 1}}), Ensemble(2, 0, 1, 1, {0, 0})));
}

TEST(Qp1, ConvexPatternHasInteriorMinimum) {
  const SymMatrix p = mat({{2, 0}, {0, 2}});
  const Ensemble e(2, 0, 1, 1, {0, 0});
  const QpSolution s = qp1_minimize(p, e);
  EXPECT_EQ(s.x, (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
  EXPECT_EQ(s.value, 1);
  EXPECT_TRUE(s.unique);
  EXPECT_TRUE(s.interior_r_s);
  EXPECT_TRUE(is_bad(p, e));
}

TEST(Qp1, ConvexWithBoundaryVertex) {
  const QpSolution s = qp1_minimize(mat({{0, 0}, {0, 1}}), Ensemble(2, 0, 1, 1, {0, 0}));
  EXPECT_EQ(s.x[0], 1);
  EXPECT_EQ(s.value, 0);
  EXPECT_FALSE(s.interior_r_s);
}

TEST(Qp1, ZeroGammaIsNeverBad) {
  const SymMatrix p = mat({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  EXPECT_FALSE(is_bad(p, Ensemble(3, 0, 1, 0, {0, 0, 1})));
}

TEST(Qp1, BeatsTheRationalGrid) {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 40; ++k) {
    const std::size_t q = 2 + rng() % 3;
    const SymMatrix p = testing::random_symmetric(rng, q, -4, 6);
    const Rational gamma(static_cast<long>(rng() % 5), 4);
    std::vector<Rational> fixed(q);
    // Spread 1 - gamma over the first index outside {0, 1}, or force gamma = 1 when q = 2.
    const Rational g = q == 2 ? Rational(1) : gamma;
    if (q > 2) fixed[2] = 1 - g;
    const Ensemble e(q, 0, 1, g, fixed);
    const QpSolution s = qp1_minimize(p, e);
    EXPECT_EQ(quadratic_form(p, s.x), s.value);
    for (long step = 0; step <= 100; ++step) {
      std::vector<Rational> x = fixed;
      x[0] = g * Rational(step, 100);
      x[1] = g - x[0];
      EXPECT_LE(s.value, quadratic_form(p, x));
    }
  }
}

TEST(Qp2, ClosedFormMinimizer) {
  const QpSolution a = qp2_minimize_2x2(mat({{3, 1}, {1, 2}}), 0, 1);
  EXPECT_EQ(a.x, (std::vector<Rational>{Rational(1, 3), Rational(2, 3)}));
  EXPECT_TRUE(a.unique);
  const QpSolution b = qp2_minimize_2x2(mat({{2, 0}, {0, 2}}), 0, 1);
  EXPECT_EQ(b.x, (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
  EXPECT_EQ(b.value, 1);
  EXPECT_THROW(qp2_minimize_2x2(mat({{2, 2}, {2, 2}}), 0, 1), ClassificationError);
}

TEST(Qp2, StationaryAlongTheConstraint) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const SymMatrix p = gen_pattern(2, PatternFamily::kCondition16, seed);
    const QpSolution s = qp2_minimize_2x2(p, 0, 1);
    EXPECT_EQ(2 * p(0, 0) * s.x[0] + 2 * p(0, 1) * s.x[1], 2 * p(1, 1) * s.x[1] + 2 * p(0, 1) * s.x[0]);
  }
}

TEST(Qp2, EmbeddedInALargerPattern) {
  const SymMatrix p = mat({{0, 5, 5}, {5, 3, 1}, {5, 1, 2}});
  const QpSolution s = qp2_minimize_2x2(p, 1, 2);
  EXPECT_EQ(s.x, (std::vector<Rational>{0, Rational(1, 3), Rational(2, 3)}));
}

TEST(Conditions, Examples) {
  EXPECT_TRUE(satisfies_condition14(mat({{0, 2}, {2, 1}})));
  EXPECT_FALSE(satisfies_condition14(mat({{0, 0}, {0, 1}})));
  EXPECT_TRUE(satisfies_condition16(mat({{3, 1}, {1, 2}}), 0, 1));
  EXPECT_FALSE(satisfies_condition16(mat({{0, 0}, {0, 1}}), 0, 1));
}

TEST(ClassifyPattern, Examples) {
  EXPECT_TRUE(std::holds_alternative<PolynomialByCondition14>(classify_pattern(mat({{0, 2}, {2, 1}}))));
  const PatternVerdict hard = classify_pattern(mat({{3, 1}, {1, 2}}));
  ASSERT_TRUE(std::holds_alternative<NPHardByCondition16>(hard));
  const auto& w = std::get<NPHardByCondition16>(hard);
  EXPECT_EQ(w.witness.r(), 0u);
  EXPECT_EQ(w.witness.s(), 1u);
  EXPECT_EQ(w.witness.lower(), (std::vector<Rational>{0, 0}));
  EXPECT_EQ(w.witness.upper(), (std::vector<Rational>{1, 1}));
  EXPECT_EQ(w.minimizer.x, (std::vector<Rational>{Rational(1, 3), Rational(2, 3)}));
  EXPECT_TRUE(std::holds_alternative<UnknownComplexity>(classify_pattern(mat({{0, 0}, {0, 1}}))));
}

TEST(ClassifyPattern, PicksTheLexicographicallyFirstPair) {
  const SymMatrix p = mat({{0, 9, 9}, {9, 3, 1}, {9, 1, 3}});
  const auto verdict = classify_pattern(p);
  ASSERT_TRUE(std::holds_alternative<NPHardByCondition16>(verdict));
  EXPECT_EQ(std::get<NPHardByCondition16>(verdict).witness.r(), 1u);
  EXPECT_EQ(std::get<NPHardByCondition16>(verdict).witness.s(), 2u);
}

TEST(ClassifyPattern, ConditionsNeverBothHold) {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 300; ++k) {
    const std::size_t q = 1 + rng() % 4;
    const SymMatrix p = testing::random_symmetric(rng, q, -3, 3);
    const PatternVerdict v = classify_pattern(p);
    EXPECT_EQ(std::holds_alternative<PolynomialByCondition14>(v), satisfies_condition14(p));
  }
}

TEST(Classify2x2, Dichotomy) {
  EXPECT_EQ(classify_2x2(mat({{0, 0}, {0, 1}})), TwoByTwoVerdict::kPolynomial);
  EXPECT_EQ(classify_2x2(mat({{2, 0}, {0, 2}})), TwoByTwoVerdict::kNPHard);
  EXPECT_EQ(classify_2x2(mat({{1, 1}, {1, 1}})), TwoByTwoVerdict::kPolynomial);
  EXPECT_THROW(classify_2x2(mat({{1}})), InvalidInput);
}

}  // namespace
}  // namespace qapblock
