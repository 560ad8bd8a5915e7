#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <optional>

#include "qapblock/error.hpp"
#include "qapblock/generators.hpp"
#include "qapblock/matrix_classes.hpp"
#include "qapblock/qap.hpp"
#include "test_support.hpp"

namespace qapblock {
namespace {

using testing::example_a;
using testing::example_b;
using testing::mat;

// Plain next_permutation scan; first strict improvement keeps the lexicographically smallest argmin.
OracleResult naive_optimum(const QapInstance& inst) {
  std::vector<std::size_t> p(inst.size());
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::optional<OracleResult> best;
  do {
    Permutation pi(p);
    Rational v = evaluate(inst, pi);
    if (!best || v < best->value) best = OracleResult{std::move(v), std::move(pi)};
  } while (std::next_permutation(p.begin(), p.end()));
  return *best;
}

TEST(Oracle, NonMonotoneExample) {
  const OracleResult r = brute_force_optimum(QapInstance(example_a(), example_b()));
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(r.argmin, Permutation({1, 0, 2}));
}

TEST(Oracle, SingleElement) {
  const OracleResult r = brute_force_optimum(QapInstance(mat({{5}}), mat({{3}})));
  EXPECT_EQ(r.value, 15);
  EXPECT_TRUE(r.argmin.is_identity());
}

TEST(Oracle, LambdaGmamExampleAtLambdaOne) {
  const QapInstance inst(expand(OneLambdaOneSpec(1, 0, 2, 2)), expand(MultiCutSpec({2, 2})));
  EXPECT_EQ(brute_force_optimum(inst).value, 6);
}

TEST(Oracle, RefusesAboveCap) {
  const QapInstance inst(SymMatrix::zero(5), SymMatrix::zero(5));
  EXPECT_THROW(brute_force_optimum(inst, 4), SizeLimitError);
  EXPECT_NO_THROW(brute_force_optimum(inst, 5));
}

TEST(Oracle, MatchesNaiveEnumerationIncludingArgmin) {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 60; ++k) {
    const std::size_t n = 1 + rng() % 6;
    const SymMatrix a = testing::random_symmetric(rng, n, -3, 3);
    // Small value range so that B often has interchangeable positions and ties are common.
    const SymMatrix b = SymMatrix::generate(n, [&](std::size_t, std::size_t) { return Rational(static_cast<long>(rng() % 2)); });
    const QapInstance inst(a, b);
    const OracleResult expected = naive_optimum(inst);
    const OracleResult got = brute_force_optimum(inst);
    EXPECT_EQ(got.value, expected.value);
    EXPECT_EQ(got.argmin, expected.argmin);
  }
}

TEST(Oracle, SymmetryReductionAndThreadsDoNotChangeResult) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const std::size_t n = 8;
    const QapInstance inst(gen_anti_monge(n, 3, seed), expand(gen_multicut(n, 3, seed + 100)));
    OracleOptions plain;
    plain.exploit_symmetry = false;
    plain.threads = 1;
    OracleOptions fast;
    fast.threads = 4;
    const OracleResult x = brute_force_optimum(inst, plain);
    const OracleResult y = brute_force_optimum(inst, fast);
    EXPECT_EQ(x.value, y.value);
    EXPECT_EQ(x.argmin, y.argmin);
  }
}

TEST(Oracle, Deterministic) {
  const QapInstance inst(gen_anti_monge(7, 2, 5), expand(gen_multicut(7, 2, 5)));
  const OracleResult x = brute_force_optimum(inst);
  const OracleResult y = brute_force_optimum(inst);
  EXPECT_EQ(x.value, y.value);
  EXPECT_EQ(x.argmin, y.argmin);
}

TEST(Oracle, InterchangeableClasses) {
  EXPECT_EQ(interchangeable_classes(expand(MultiCutSpec({1, 2}))), (std::vector<std::size_t>{0, 1, 1}));
  EXPECT_EQ(interchangeable_classes(expand(MultiCutSpec({2, 1, 2}))), (std::vector<std::size_t>{0, 0, 1, 2, 2}));
  EXPECT_EQ(interchangeable_classes(mat({{1, 2}, {2, 3}})), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(interchangeable_classes(SymMatrix::zero(3)), (std::vector<std::size_t>{0, 0, 0}));
}

}  // namespace
}  // namespace qapblock
