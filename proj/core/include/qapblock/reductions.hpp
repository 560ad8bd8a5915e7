#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "qapblock/matrix_classes.hpp"
#include "qapblock/pattern_analysis.hpp"
#include "qapblock/permutation.hpp"
#include "qapblock/qap.hpp"

namespace qapblock {

/// Positive rationals v_1..v_m with sum exactly 2.
class PartitionInstance {
 public:
  explicit PartitionInstance(std::vector<Rational> values);

  const std::vector<Rational>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<Rational> values_;
};

/// Product-block QAP built from a Partition instance and a pattern with a satisfies_condition16 witness.
struct PartitionReduction {
  SymMatrix pattern;
  PartitionInstance partition;
  std::size_t r = 0;  // free pair of the very bad ensemble (0-based)
  std::size_t s = 0;
  std::int64_t k = 0;  // K: x*_i K integral, plus the strict lower bounds on K
  std::int64_t l = 0;  // L = m K
  std::size_t n = 0;   // n = L - 2
  std::vector<Rational> alpha;  // m partition-values (1 + v_k)/L, then n - m dummy-values 1/L
  BlockSpec blocks;             // |I_r| = x*_r L - 1, |I_s| = x*_s L - 1, |I_i| = x*_i L otherwise
  Rational threshold;           // z* = sum p_ij x*_i x*_j
  VeryBadEnsemble ensemble;
  QpSolution x_star;

  QapInstance instance() const;
};

/// Throws ClassificationError when no pair passes satisfies_condition16.
PartitionReduction reduce_partition(const SymMatrix& pattern, const PartitionInstance& partition);

struct CertificatePermutation {
  Permutation permutation;
  Rational value;
};

/// Builds the permutation induced by a YES certificate `subset` (0-based partition indices with
/// values summing to 1). Its objective equals the threshold.
CertificatePermutation yes_certificate_to_permutation(const PartitionReduction& red, const std::set<std::size_t>& subset);

struct PartitionSearchResult {
  Rational best;
  bool feasible_below_threshold = false;
};

inline constexpr std::size_t kPartitionSearchMaxValues = 12;
inline constexpr std::size_t kPartitionSearchMaxBlocks = 4;

/// Exhaustive over the q^m placements of partition-values into blocks. Dummies are
/// interchangeable, so every placement determines its block sums.
PartitionSearchResult partition_oracle_search(const PartitionReduction& red);

/// Undirected graph on an even number of vertices with a cut bound t.
class GraphBisectionInstance {
 public:
  GraphBisectionInstance(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> edges, std::int64_t t);

  std::size_t vertices() const { return vertices_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  std::int64_t bound() const { return t_; }

 private:
  std::size_t vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;  // normalized: first < second, sorted, unique
  std::int64_t t_;
};

struct BisectionReduction {
  QapInstance instance;
  Rational threshold;  // n^2 (n + 1) + 2t
};

/// A = adjacency + (2i + 2j) (1-based i, j), B = multi-cut with two blocks of size n/2.
/// Each cut edge contributes two ordered pairs, so the optimum is n^2(n+1) + 2 * (min bisection cut).
BisectionReduction reduce_bisection(const GraphBisectionInstance& g);

}  // namespace qapblock
