#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "qapblock/error.hpp"
#include "qapblock/generators.hpp"
#include "qapblock/pattern_analysis.hpp"
#include "qapblock/product_block.hpp"
#include "test_support.hpp"

namespace qapblock {
namespace {

using testing::mat;

const SymMatrix kPattern = mat({{0, 2}, {2, 1}});

TEST(ObjectiveFromBlockSums, Examples) {
  EXPECT_EQ(objective_from_block_sums(kPattern, {Rational(1, 4), Rational(3, 4)}), Rational(21, 16));
  EXPECT_EQ(objective_from_block_sums(kPattern, {0, 0}), 0);
  EXPECT_EQ(objective_from_block_sums(mat({{2, 0}, {0, 2}}), {Rational(1, 2), Rational(1, 2)}), 1);
  EXPECT_THROW(objective_from_block_sums(kPattern, {1}), InvalidInput);
}

TEST(ProductBlockInstance, Validation) {
  EXPECT_THROW(ProductBlockInstance(ProductSpec({2, 1}), BlockSpec(kPattern, {1, 1})), InvalidInput);
  EXPECT_THROW(ProductBlockInstance(ProductSpec({1, 2}), BlockSpec(kPattern, {1, 2})), InvalidInput);
}

TEST(SolveProductBlock, FirstExamplePrefersReversedOrder) {
  const ProductBlockInstance inst(ProductSpec({1, 1, 2}), BlockSpec(kPattern, {1, 2}));
  const ProductBlockSolution sol = solve_product_block(inst);
  EXPECT_EQ(sol.value, 20);
  EXPECT_EQ(sol.block_order, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(sol.permutation, Permutation({2, 0, 1}));
  EXPECT_EQ(sol.certification, Certification::kTheoremOptimal);
  EXPECT_EQ(evaluate(expand_to_qap(inst), Permutation::identity(3)), 21);
}

TEST(SolveProductBlock, SecondExamplePrefersIdentityOrder) {
  const ProductBlockInstance inst(ProductSpec({1, 2, 2}), BlockSpec(kPattern, {1, 2}));
  const ProductBlockSolution sol = solve_product_block(inst);
  EXPECT_EQ(sol.value, 32);
  EXPECT_EQ(sol.block_order, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(sol.permutation.is_identity());
  EXPECT_EQ(evaluate(expand_to_qap(inst), Permutation({2, 1, 0})), 33);
}

TEST(SolveProductBlock, SingleBlock) {
  const ProductBlockInstance inst(ProductSpec({1, 2, 3}), BlockSpec(mat({{Rational(1, 2)}}), {3}));
  EXPECT_EQ(solve_product_block(inst).value, Rational(1, 2) * 36);
}

TEST(SolveProductBlock, ExpandsToTheDisplayedMatrices) {
  const QapInstance q = expand_to_qap(ProductBlockInstance(ProductSpec({1, 1, 2}), BlockSpec(kPattern, {1, 2})));
  EXPECT_EQ(q.a(), mat({{1, 1, 2}, {1, 1, 2}, {2, 2, 4}}));
  EXPECT_EQ(q.b(), mat({{0, 2, 2}, {2, 1, 1}, {2, 1, 1}}));
  EXPECT_EQ(expand_to_qap(ProductBlockInstance(ProductSpec({3}), BlockSpec(mat({{1}}), {1}))).size(), 1u);
}

TEST(SolveProductBlock, RefusesUncertifiedPatternsWithoutAttestation) {
  const ProductBlockInstance inst(ProductSpec({1, 2, 3, 4}), BlockSpec(mat({{2, 0}, {0, 2}}), {2, 2}));
  EXPECT_THROW(solve_product_block(inst), ClassificationError);
  ProductBlockOptions attest;
  attest.attest = true;
  const ProductBlockSolution sol = solve_product_block(inst, attest);
  EXPECT_EQ(sol.certification, Certification::kSeparableHeuristic);
  EXPECT_EQ(to_string(sol.certification), "separable-heuristic");
  EXPECT_EQ(to_string(Certification::kTheoremOptimal), "theorem-optimal");
}

TEST(SolveProductBlock, RefusesTooManyBlocks) {
  const std::size_t q = 9;
  const SymMatrix p = SymMatrix::generate(q, [](std::size_t i, std::size_t j) { return Rational(i == j ? 0 : 1); });
  std::vector<Rational> alpha(q, 1);
  EXPECT_THROW(solve_product_block(ProductBlockInstance(ProductSpec(alpha), BlockSpec(p, std::vector<std::size_t>(q, 1)))),
               SizeLimitError);
}

TEST(SolveProductBlock, EmptyBlocksAreSkipped) {
  const SymMatrix p = mat({{0, 2, 5}, {2, 1, 5}, {5, 5, 5}});
  ASSERT_TRUE(pattern_certified_polynomial(p));
  const ProductBlockInstance inst(ProductSpec({1, 1, 2}), BlockSpec(p, {1, 2, 0}));
  EXPECT_EQ(solve_product_block(inst).value, 20);
}

TEST(PatternCertification, UsesBothCertificates) {
  EXPECT_TRUE(pattern_certified_polynomial(kPattern));
  EXPECT_TRUE(pattern_certified_polynomial(mat({{0, 0}, {0, 1}})));
  EXPECT_FALSE(pattern_certified_polynomial(mat({{2, 0}, {0, 2}})));
}

TEST(SolveProductBlock, MatchesOracleAndEvaluation) {
  std::mt19937_64 rng(51);
  for (int k = 0; k < 150; ++k) {
    const std::size_t n = 1 + rng() % 7;
    const std::size_t q = 1 + rng() % 3;
    const SymMatrix p = gen_pattern(q, PatternFamily::kCondition14, rng());
    std::vector<std::size_t> sizes(q, 0);
    for (std::size_t i = 0; i < n; ++i) ++sizes[rng() % q];
    const ProductBlockInstance inst(gen_product(n, rng()), BlockSpec(p, sizes));
    const ProductBlockSolution sol = solve_product_block(inst);
    const QapInstance qap = expand_to_qap(inst);
    EXPECT_EQ(evaluate(qap, sol.permutation), sol.value);
    EXPECT_EQ(brute_force_optimum(qap).value, sol.value);
  }
}

TEST(SolveProductBlock, ScaleInvariance) {
  std::mt19937_64 rng(52);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 2 + rng() % 6;
    const SymMatrix p = gen_pattern(2, PatternFamily::kCondition14, rng());
    const std::size_t first = rng() % (n + 1);
    const BlockSpec blocks(p, {first, n - first});
    const ProductSpec alpha = gen_product(n, rng());
    const Rational c = testing::random_fraction(rng, 1, 7, 3);
    std::vector<Rational> scaled = alpha.alpha();
    for (auto& x : scaled) x *= c;
    const ProductBlockSolution base = solve_product_block(ProductBlockInstance(alpha, blocks));
    const ProductBlockSolution big = solve_product_block(ProductBlockInstance(ProductSpec(scaled), blocks));
    EXPECT_EQ(big.value, c * c * base.value);
    EXPECT_EQ(big.block_order, base.block_order);
  }
}

TEST(Ingestion, MapsBackToOriginalIndices) {
  std::mt19937_64 rng(53);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 1 + rng() % 7;
    std::vector<Rational> alpha = gen_product(n, rng()).alpha();
    std::shuffle(alpha.begin(), alpha.end(), rng);
    std::vector<std::size_t> sizes{n / 2, n - n / 2};
    const BlockSpec blocks(kPattern, sizes);
    const SortedIngestion in = ingest_product_block(ProductSpec(alpha), blocks);
    EXPECT_TRUE(in.instance.alpha().is_monotone());
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(in.instance.alpha().alpha()[i], alpha[in.sorted_to_original[i]]);
    const ProductBlockSolution sol = solve_product_block(in.instance);
    const QapInstance original(expand(ProductSpec(alpha)), expand(blocks));
    EXPECT_EQ(evaluate(original, in.sorted_to_original.compose(sol.permutation)), sol.value);
  }
}

TEST(BlockOrder, PermutationForOrder) {
  const BlockSpec blocks(kPattern, {1, 2});
  EXPECT_EQ(permutation_for_block_order(blocks, {0, 1}), Permutation::identity(3));
  EXPECT_EQ(permutation_for_block_order(blocks, {1, 0}), Permutation({2, 0, 1}));
}

TEST(BlockOrder, BlockSumsMatchTheFullObjective) {
  std::mt19937_64 rng(54);
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = 2 + rng() % 6;
    const SymMatrix p = testing::random_symmetric(rng, 3, -2, 4);
    std::vector<std::size_t> sizes(3, 0);
    for (std::size_t i = 0; i < n; ++i) ++sizes[rng() % 3];
    const ProductBlockInstance inst(gen_product(n, rng()), BlockSpec(p, sizes));
    std::vector<std::size_t> order{0, 1, 2};
    do {
      const Permutation pi = permutation_for_block_order(inst.blocks(), order);
      std::vector<Rational> y(3);
      const auto owner = inst.blocks().block_of();
      for (std::size_t i = 0; i < n; ++i) y[owner[i]] += inst.alpha().alpha()[pi[i]];
      EXPECT_EQ(evaluate(expand_to_qap(inst), pi), objective_from_block_sums(p, y));
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

}  // namespace
}  // namespace qapblock
