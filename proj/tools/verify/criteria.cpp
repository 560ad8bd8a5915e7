#include "verify/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qapblock/cut_solver.hpp"
#include "qapblock/generators.hpp"
#include "qapblock/matrix_classes.hpp"
#include "qapblock/pattern_analysis.hpp"
#include "qapblock/product_block.hpp"
#include "qapblock/qap.hpp"
#include "qapblock/reductions.hpp"
#include "verify/oracles.hpp"

namespace qapblock::verify {

namespace {

class Tally {
 public:
  Tally(int id, std::string title) {
    result_.id = id;
    result_.title = std::move(title);
  }

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++result_.checks;
    if (ok) return;
    if (result_.failures++ == 0) result_.first_failure = describe();
  }

  void fail(const std::string& what) {
    ++result_.checks;
    if (result_.failures++ == 0) result_.first_failure = what;
  }

  CriterionResult take() { return std::move(result_); }

 private:
  CriterionResult result_;
};

std::size_t scaled(std::size_t count, const VerifyConfig& config) {
  const auto n = static_cast<std::size_t>(std::llround(static_cast<double>(count) * config.sample_scale));
  return std::max<std::size_t>(1, n);
}

std::uint64_t stream_seed(const VerifyConfig& config, int criterion, std::uint64_t sample) {
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(criterion), static_cast<std::uint32_t>(sample)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (std::uint64_t{words[0]} << 32) | words[1];
}

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Rational random_fraction(std::mt19937_64& rng, long lo, long hi, long max_den) {
  return Rational(std::uniform_int_distribution<long>(lo, hi)(rng), std::uniform_int_distribution<long>(1, max_den)(rng));
}

SymMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  return SymMatrix::generate(n, [&](std::size_t, std::size_t) { return random_fraction(rng, lo, hi, 3); });
}

SymMatrix dense(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return SymMatrix(r);
}

Rational oracle_value(const QapInstance& inst, std::size_t cap) { return brute_force_optimum(inst, cap).value; }

// Criterion 1: the worked examples.
CriterionResult criterion1(const VerifyConfig&) {
  Tally tally(1, "worked examples: non-monotone, lambda-GMAM, three-matrix product-block");

  const SymMatrix a = dense({{2, 1, 1}, {1, 0, 0}, {1, 0, 0}});
  const SymMatrix b = dense({{0, 1, 1}, {1, 0, 0}, {1, 0, 0}});
  const QapInstance ex(a, b);
  tally.expect(evaluate(ex, Permutation::identity(3)) == 4, [] { return "non-monotone example: identity value != 4"; });
  tally.expect(evaluate(ex, Permutation({2, 1, 0})) == 2, [] { return "non-monotone example: swap(1,3) value != 2"; });
  tally.expect(oracle_value(ex, 3) == 2, [] { return "non-monotone example: optimum != 2"; });

  for (const Rational& lambda : {Rational(1), Rational(3, 2)}) {
    const QapInstance inst(expand(OneLambdaOneSpec(lambda, 0, 2, 2)), expand(MultiCutSpec({2, 2})));
    const Rational better = 4 + 2 * lambda;
    tally.expect(evaluate(inst, Permutation::identity(4)) == 8,
                 [&] { return "lambda-GMAM example: identity != 8 at lambda " + lambda.str(); });
    tally.expect(evaluate(inst, Permutation({0, 3, 2, 1})) == better,
                 [&] { return "lambda-GMAM example: swap(2,4) != 4 + 2 lambda at lambda " + lambda.str(); });
    tally.expect(oracle_value(inst, 4) == better,
                 [&] { return "lambda-GMAM example: optimum != 4 + 2 lambda at lambda " + lambda.str(); });
  }

  const SymMatrix pattern = dense({{0, 2}, {2, 1}});
  const BlockSpec blocks(pattern, {1, 2});
  const Permutation reversed({2, 1, 0});
  struct Case {
    std::vector<Rational> alpha;
    Rational identity_value, reversed_value, optimum;
  };
  for (const Case& c : {Case{{1, 1, 2}, 21, 20, 20}, Case{{1, 2, 2}, 32, 33, 32}}) {
    const ProductBlockInstance pb{ProductSpec(c.alpha), blocks};
    const QapInstance inst = expand_to_qap(pb);
    tally.expect(evaluate(inst, Permutation::identity(3)) == c.identity_value,
                 [&] { return "three-matrix example: identity value != " + c.identity_value.str(); });
    tally.expect(evaluate(inst, reversed) == c.reversed_value,
                 [&] { return "three-matrix example: reversed value != " + c.reversed_value.str(); });
    tally.expect(oracle_value(inst, 3) == c.optimum,
                 [&] { return "three-matrix example: optimum != " + c.optimum.str(); });
    tally.expect(solve_product_block(pb).value == c.optimum,
                 [&] { return "three-matrix example: product-block solver != " + c.optimum.str(); });
  }
  return tally.take();
}

// Criterion 2: two-block closed form vs integer grid vs oracle, every admissible shape.
CriterionResult criterion2(const VerifyConfig& config) {
  Tally tally(2, "two-block closed form = grid minimum = oracle on every shape");
  for (std::size_t n = 1; n <= config.two_block_max; ++n) {
    for (std::size_t r = 0; r <= n; ++r) {
      for (std::size_t s = 0; r + s <= n; ++s) {
        const std::size_t t = n - r - s;
        for (std::size_t u = 0; 2 * u <= n; ++u) {
          const std::size_t v = n - u;
          if (s + t > 2 * v) continue;
          const TwoBlockShape shape(r, s, t, u, v);
          const Rational closed = closed_form_two_block(shape).value;
          const Rational grid = two_block_grid_minimum(r, s, t, u);
          const Rational oracle = oracle_value(expand_two_block(shape), config.two_block_max);
          tally.expect(closed == grid && grid == oracle, [&] {
            std::ostringstream os;
            os << "shape (r,s,t,u,v) = (" << r << ',' << s << ',' << t << ',' << u << ',' << v << "): closed "
               << closed << ", grid " << grid << ", oracle " << oracle;
            return os.str();
          });
        }
      }
    }
  }
  return tally.take();
}

// Criterion 3: identity is optimal for monotone anti-Monge x normal-form multi-cut.
CriterionResult criterion3(const VerifyConfig& config) {
  Tally tally(3, "identity optimal for monotone anti-Monge x normal-form multi-cut");
  for (std::size_t i = 0, count = scaled(200, config); i < count; ++i) {
    std::mt19937_64 rng(stream_seed(config, 3, i));
    const std::size_t n = pick(rng, 1, config.max_n);
    const std::size_t q = pick(rng, 1, n);
    const SymMatrix a = gen_monotone_anti_monge(n, pick(rng, 1, 4), rng());
    const MultiCutSpec b = gen_multicut(n, q, rng());
    const CutSolution sol = solve_multicut_monotone_antimonge(a, b);
    const Rational oracle = oracle_value(QapInstance(a, expand(b)), config.max_n);
    tally.expect(sol.permutation.is_identity() && sol.value == oracle, [&] {
      return "sample " + std::to_string(i) + " (n=" + std::to_string(n) + "): identity " + sol.value.str() +
             ", oracle " + oracle.str();
    });
  }
  return tally.take();
}

// Criterion 4: identity is optimal for anti-Monge x equal-size multi-cut.
CriterionResult criterion4(const VerifyConfig& config) {
  Tally tally(4, "identity optimal for anti-Monge x equal-block multi-cut");
  std::vector<std::size_t> dims;
  for (std::size_t n : {4, 6, 8}) {
    if (n <= config.max_n) dims.push_back(n);
  }
  if (dims.empty()) dims.push_back(2 * std::max<std::size_t>(1, config.max_n / 2));
  for (std::size_t i = 0, count = scaled(100, config); i < count; ++i) {
    std::mt19937_64 rng(stream_seed(config, 4, i));
    const std::size_t n = dims[pick(rng, 0, dims.size() - 1)];
    std::vector<std::size_t> divisors;
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d == 0) divisors.push_back(d);
    }
    const std::size_t q = divisors[pick(rng, 0, divisors.size() - 1)];
    const SymMatrix a = gen_anti_monge(n, pick(rng, 1, 4), rng());
    const MultiCutSpec b(std::vector<std::size_t>(q, n / q));
    const CutSolution sol = solve_equal_blocks_antimonge(a, b);
    const Rational oracle = oracle_value(QapInstance(a, expand(b)), config.max_n);
    tally.expect(sol.value == oracle, [&] {
      return "sample " + std::to_string(i) + " (n=" + std::to_string(n) + ", q=" + std::to_string(q) +
             "): identity " + sol.value.str() + ", oracle " + oracle.str();
    });
  }
  return tally.take();
}

std::vector<std::size_t> random_composition(std::mt19937_64& rng, std::size_t n, std::size_t q) {
  std::vector<std::size_t> cuts(q - 1);
  for (auto& c : cuts) c = pick(rng, 0, n);
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::size_t> sizes;
  std::size_t prev = 0;
  for (auto c : cuts) {
    sizes.push_back(c - prev);
    prev = c;
  }
  sizes.push_back(n - prev);
  return sizes;
}

SymMatrix certified_pattern(std::mt19937_64& rng, std::size_t q) {
  if (q == 2 && pick(rng, 0, 1) == 1) {
    for (;;) {
      SymMatrix p = gen_pattern(2, PatternFamily::kAny, rng());
      if (classify_2x2(p) == TwoByTwoVerdict::kPolynomial) return p;
    }
  }
  return gen_pattern(q, PatternFamily::kCondition14, rng());
}

// Criterion 5: product-block solver vs oracle, and separability of some optimum.
CriterionResult criterion5(const VerifyConfig& config) {
  Tally tally(5, "product-block solver = oracle; an optimum is separable");
  const std::size_t per_cell = scaled(100, config);
  for (std::size_t n = 1; n <= config.max_n; ++n) {
    for (std::size_t q = 1; q <= 3; ++q) {
      for (std::size_t i = 0; i < per_cell; ++i) {
        std::mt19937_64 rng(stream_seed(config, 5, (n * 8 + q) * 100000 + i));
        const SymMatrix pattern = certified_pattern(rng, q);
        const BlockSpec blocks(pattern, random_composition(rng, n, q));
        std::vector<Rational> alpha = gen_product(n, rng()).alpha();
        std::shuffle(alpha.begin(), alpha.end(), rng);
        const ProductSpec original(alpha);
        const SortedIngestion ingested = ingest_product_block(original, blocks);
        const ProductBlockSolution sol = solve_product_block(ingested.instance);
        const QapInstance qap(expand(original), expand(blocks));
        const Rational oracle = oracle_value(qap, config.max_n);
        const Permutation mapped = ingested.sorted_to_original.compose(sol.permutation);
        auto where = [&] { return "n=" + std::to_string(n) + " q=" + std::to_string(q) + " sample " + std::to_string(i); };
        tally.expect(sol.value == oracle && evaluate(qap, mapped) == oracle, [&] {
          return where() + ": solver " + sol.value.str() + ", oracle " + oracle.str();
        });

        // Best separable assignment, evaluated on the full sorted QAP.
        const QapInstance sorted_qap = expand_to_qap(ingested.instance);
        std::vector<std::size_t> order(q);
        std::iota(order.begin(), order.end(), std::size_t{0});
        Rational best_separable = evaluate(sorted_qap, permutation_for_block_order(blocks, order));
        while (std::next_permutation(order.begin(), order.end())) {
          best_separable = std::min(best_separable, evaluate(sorted_qap, permutation_for_block_order(blocks, order)));
        }
        tally.expect(best_separable == oracle, [&] {
          return where() + ": best separable " + best_separable.str() + ", oracle " + oracle.str();
        });
      }
    }
  }
  return tally.take();
}

// Criterion 6: closed-form 2x2 minimizer vs a 1/100 grid, plus stationarity.
CriterionResult criterion6(const VerifyConfig& config) {
  Tally tally(6, "closed-form 2x2 minimizer beats the 1/100 grid and is stationary");
  for (std::size_t i = 0, count = scaled(50, config); i < count; ++i) {
    const SymMatrix p = gen_pattern(2, PatternFamily::kCondition16, stream_seed(config, 6, i));
    const QpSolution sol = qp2_minimize_2x2(p, 0, 1);
    const Rational& xr = sol.x[0];
    const Rational& xs = sol.x[1];
    auto tag = [&] { return "pattern " + to_string(p); };
    tally.expect(xr + xs == 1 && xr.sign() > 0 && xs.sign() > 0 && xr < 1 && xs < 1,
                 [&] { return tag() + ": minimizer not strictly inside the simplex"; });
    // Lagrange stationarity on x_r + x_s = 1: (P x)_r = (P x)_s.
    const Rational grad_r = p(0, 0) * xr + p(0, 1) * xs;
    const Rational grad_s = p(1, 0) * xr + p(1, 1) * xs;
    tally.expect(grad_r == grad_s, [&] { return tag() + ": not stationary"; });
    for (long k = 0; k <= 100; ++k) {
      const std::vector<Rational> g{Rational(k, 100), Rational(100 - k, 100)};
      const Rational value = quadratic_form(p, g);
      const bool ok = g[0] == xr ? value == sol.value : value > sol.value;
      tally.expect(ok, [&] { return tag() + ": grid point " + g[0].str() + " is not beaten"; });
    }
  }
  return tally.take();
}

std::vector<Rational> random_split_to_one(std::mt19937_64& rng, std::size_t parts) {
  // Positive parts of 1 on a common denominator.
  const long den = static_cast<long>(pick(rng, parts, parts + 10));
  std::vector<long> cuts;
  std::vector<long> pool(static_cast<std::size_t>(den - 1));
  std::iota(pool.begin(), pool.end(), 1L);
  std::shuffle(pool.begin(), pool.end(), rng);
  cuts.assign(pool.begin(), pool.begin() + static_cast<long>(parts - 1));
  std::sort(cuts.begin(), cuts.end());
  std::vector<Rational> out;
  long prev = 0;
  for (long c : cuts) {
    out.emplace_back(c - prev, den);
    prev = c;
  }
  out.emplace_back(den - prev, den);
  return out;
}

std::vector<std::vector<Rational>> partition_yes_instances(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Rational>> out;
  while (out.size() < count) {
    const std::size_t m = pick(rng, 2, 6);
    const std::size_t left = pick(rng, 1, m - 1);
    std::vector<Rational> v = random_split_to_one(rng, left);
    for (auto& x : random_split_to_one(rng, m - left)) v.push_back(x);
    std::shuffle(v.begin(), v.end(), rng);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<Rational>> partition_no_instances(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Rational>> out{{Rational(2)}};
  while (out.size() < count) {
    const std::size_t m = pick(rng, 2, 6);
    std::vector<Rational> v = random_split_to_one(rng, m);
    for (auto& x : v) x *= 2;
    if (subsets_summing_to_one(v).empty()) out.push_back(std::move(v));
  }
  return out;
}

// Criterion 7: Partition reduction equivalence over [[2,0],[0,2]].
CriterionResult criterion7(const VerifyConfig& config) {
  Tally tally(7, "partition reduction: threshold reached iff a subset sums to 1");
  const SymMatrix pattern = dense({{2, 0}, {0, 2}});
  const std::size_t count = std::min<std::size_t>(20, scaled(20, config));
  auto yes = partition_yes_instances(stream_seed(config, 7, 0), count);
  auto no = partition_no_instances(stream_seed(config, 7, 1), count);
  for (auto* group : {&yes, &no}) {
    for (const auto& v : *group) {
      const PartitionReduction red = reduce_partition(pattern, PartitionInstance(v));
      const auto subsets = subsets_summing_to_one(v);
      const PartitionSearchResult search = partition_oracle_search(red);
      auto tag = [&] {
        std::string s = "v = (";
        for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].str();
        return s + ")";
      };
      tally.expect((group == &yes) == !subsets.empty(), [&] { return tag() + ": instance drawn in the wrong group"; });
      tally.expect(search.feasible_below_threshold == !subsets.empty(), [&] {
        return tag() + ": search best " + search.best.str() + " vs threshold " + red.threshold.str();
      });
      if (subsets.empty()) {
        tally.expect(search.best > red.threshold, [&] { return tag() + ": NO instance reaches the threshold"; });
      } else {
        tally.expect(search.best == red.threshold, [&] { return tag() + ": YES optimum differs from threshold"; });
      }
      for (const auto& subset : subsets) {
        const CertificatePermutation cert =
            yes_certificate_to_permutation(red, std::set<std::size_t>(subset.begin(), subset.end()));
        tally.expect(cert.value == red.threshold && evaluate(red.instance(), cert.permutation) == red.threshold,
                     [&] { return tag() + ": certificate value " + cert.value.str(); });
      }
    }
  }
  return tally.take();
}

std::vector<Edge> graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v, ++bit) {
      if (mask >> bit & 1U) edges.emplace_back(u, v);
    }
  }
  return edges;
}

// Criterion 8: Graph Bisection reduction equivalence.
CriterionResult criterion8(const VerifyConfig& config) {
  Tally tally(8, "bisection reduction: optimum <= threshold iff min bisection <= t");
  auto check_graph = [&](std::size_t n, const std::vector<Edge>& edges) {
    const std::size_t cut = min_bisection_cut(n, edges);
    const BisectionReduction base = reduce_bisection(GraphBisectionInstance(n, edges, 0));
    const Rational optimum = oracle_value(base.instance, n);
    for (std::size_t t = 0; t <= edges.size(); ++t) {
      const BisectionReduction red = reduce_bisection(GraphBisectionInstance(n, edges, static_cast<std::int64_t>(t)));
      tally.expect((optimum <= red.threshold) == (cut <= t), [&] {
        return "n=" + std::to_string(n) + ", |E|=" + std::to_string(edges.size()) + ", t=" + std::to_string(t) +
               ": optimum " + optimum.str() + ", threshold " + red.threshold.str() + ", min cut " + std::to_string(cut);
      });
    }
  };
  for (std::uint64_t mask = 0; mask < 64; ++mask) check_graph(4, graph_from_mask(4, mask));
  for (std::size_t i = 0, count = scaled(100, config); i < count; ++i) {
    std::mt19937_64 rng(stream_seed(config, 8, i));
    check_graph(6, graph_from_mask(6, rng() & ((std::uint64_t{1} << 15) - 1)));
  }
  return tally.take();
}

// Criterion 9: sum matrices against constant row sums, and linearity.
CriterionResult criterion9(const VerifyConfig& config) {
  Tally tally(9, "sum matrix x constant-row-sum B is constant; objective is linear");
  const std::size_t cap = std::min<std::size_t>(6, config.max_n);
  for (std::size_t i = 0, count = scaled(100, config); i < count; ++i) {
    std::mt19937_64 rng(stream_seed(config, 9, i));
    const std::size_t n = pick(rng, 1, cap);
    std::vector<Rational> alpha(n);
    for (auto& x : alpha) x = random_fraction(rng, -6, 6, 4);
    const SymMatrix a = expand(SumSpec(alpha));
    // B = sum of weighted (P_sigma + P_sigma^T): symmetric, every row sums to 2 * total weight.
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
    Rational beta;
    for (std::size_t term = 0, terms = pick(rng, 1, 3); term < terms; ++term) {
      std::vector<std::size_t> sigma(n);
      std::iota(sigma.begin(), sigma.end(), std::size_t{0});
      std::shuffle(sigma.begin(), sigma.end(), rng);
      const Rational c = random_fraction(rng, 1, 5, 3);
      for (std::size_t k = 0; k < n; ++k) {
        rows[k][sigma[k]] += c;
        rows[sigma[k]][k] += c;
      }
      beta += 2 * c;
    }
    const SymMatrix b(rows);
    const Rational expected = 2 * beta * std::accumulate(alpha.begin(), alpha.end(), Rational(0));
    const auto values = all_permutation_values(a, b);
    const bool constant = std::all_of(values.begin(), values.end(), [&](const Rational& x) { return x == expected; });
    tally.expect(constant, [&] { return "sample " + std::to_string(i) + ": values differ from 2 beta sum(alpha) = " + expected.str(); });
  }
  for (std::size_t i = 0, count = scaled(100, config); i < count; ++i) {
    std::mt19937_64 rng(stream_seed(config, 9, 1000000 + i));
    const std::size_t n = pick(rng, 1, config.max_n);
    const SymMatrix a1 = random_symmetric(rng, n, -9, 9);
    const SymMatrix a2 = random_symmetric(rng, n, -9, 9);
    const SymMatrix b = random_symmetric(rng, n, -9, 9);
    std::vector<std::size_t> image(n);
    std::iota(image.begin(), image.end(), std::size_t{0});
    std::shuffle(image.begin(), image.end(), rng);
    const Permutation pi(image);
    tally.expect(evaluate(a1 + a2, b, pi) == evaluate(a1, b, pi) + evaluate(a2, b, pi),
                 [&] { return "linearity sample " + std::to_string(i); });
  }
  return tally.take();
}

SymMatrix perturbed(std::mt19937_64& rng, const SymMatrix& a) {
  auto rows = a.rows();
  const std::size_t n = a.size();
  const std::size_t i = pick(rng, 0, n - 1), j = pick(rng, 0, n - 1);
  rows[i][j] += random_fraction(rng, -3, 3, 2);
  rows[j][i] = rows[i][j];
  return SymMatrix(rows);
}

// Criterion 10: recognition soundness.
CriterionResult criterion10(const VerifyConfig& config) {
  Tally tally(10, "anti-Monge check, split and lambda=2 decomposition are sound");
  std::size_t agreed_true = 0;
  for (std::size_t i = 0, count = scaled(200, config); i < count; ++i) {
    std::mt19937_64 rng(stream_seed(config, 10, i));
    const std::size_t n = pick(rng, 1, 7);
    SymMatrix a = SymMatrix::zero(n);
    switch (i % 3) {
      case 0: a = gen_anti_monge(n, pick(rng, 1, 3), rng()); break;
      case 1: a = perturbed(rng, gen_anti_monge(n, pick(rng, 1, 3), rng())); break;
      default: a = random_symmetric(rng, n, 0, 6); break;
    }
    const bool fast = is_anti_monge(a);
    agreed_true += fast;
    tally.expect(fast == anti_monge_exhaustive(a), [&] { return "anti-Monge checks disagree on " + to_string(a); });
  }
  tally.expect(agreed_true > 0, [] { return "no anti-Monge matrix among the recognition samples"; });

  for (std::size_t i = 0, count = scaled(200, config); i < count; ++i) {
    std::mt19937_64 rng(stream_seed(config, 10, 1000000 + i));
    const std::size_t n = pick(rng, 1, 9);
    const SymMatrix a = gen_anti_monge(n, pick(rng, 1, 4), rng());
    const AntiMongeSplit split = split_anti_monge(a);
    const SymMatrix& m = split.monotone_part;
    const bool ok = split.sum_part.alpha().front() == 0 && m + expand(split.sum_part) == a && is_monotone(m) &&
                    anti_monge_exhaustive(m);
    tally.expect(ok, [&] { return "split_anti_monge postcondition fails on " + to_string(a); });
  }

  for (std::size_t i = 0, count = scaled(50, config); i < count; ++i) {
    std::mt19937_64 rng(stream_seed(config, 10, 2000000 + i));
    const std::size_t n = pick(rng, 1, 12);
    const SymMatrix a = gen_monotone_anti_monge(n, pick(rng, 1, 5), rng());
    const auto coeffs = gmam_decompose(a, 2);
    tally.expect(coeffs && gmam_compose(n, 2, *coeffs) == a,
                 [&] { return "gmam_decompose(., 2) fails at n=" + std::to_string(n) + " sample " + std::to_string(i); });
  }
  return tally.take();
}

}  // namespace

CriterionResult run_criterion(int id, const VerifyConfig& config) {
  switch (id) {
    case 1: return criterion1(config);
    case 2: return criterion2(config);
    case 3: return criterion3(config);
    case 4: return criterion4(config);
    case 5: return criterion5(config);
    case 6: return criterion6(config);
    case 7: return criterion7(config);
    case 8: return criterion8(config);
    case 9: return criterion9(config);
    case 10: return criterion10(config);
    default: throw std::invalid_argument("no criterion " + std::to_string(id) + " (expected 1..10)");
  }
}

std::vector<CriterionResult> run_criteria(const std::vector<int>& ids, const VerifyConfig& config) {
  for (int id : ids) {
    if (id < 1 || id > kCriterionCount) throw std::invalid_argument("no criterion " + std::to_string(id) + " (expected 1..10)");
  }
  std::vector<CriterionResult> out;
  out.reserve(ids.size());
  for (int id : ids) {
    try {
      out.push_back(run_criterion(id, config));
    } catch (const std::exception& e) {
      CriterionResult failed;
      failed.id = id;
      failed.title = "aborted";
      failed.checks = 1;
      failed.failures = 1;
      failed.first_failure = std::string("exception: ") + e.what();
      out.push_back(std::move(failed));
    }
  }
  return out;
}

std::string format_result(const CriterionResult& result) {
  std::ostringstream os;
  os << (result.passed() ? "PASS" : "FAIL") << "  criterion " << result.id << "  " << result.title << "  ("
     << result.checks << " checks";
  if (result.failures) os << ", " << result.failures << " failed; first: " << result.first_failure;
  os << ')';
  return os.str();
}

}  // namespace qapblock::verify
