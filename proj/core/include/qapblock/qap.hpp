#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qapblock/permutation.hpp"
#include "qapblock/rational.hpp"
#include "qapblock/sym_matrix.hpp"

namespace qapblock {

/// Koopmans-Beckmann QAP instance: minimize sum_ij a[pi(i)][pi(j)] * b[i][j].
class QapInstance {
 public:
  QapInstance(SymMatrix a, SymMatrix b);

  const SymMatrix& a() const { return a_; }
  const SymMatrix& b() const { return b_; }
  std::size_t size() const { return a_.size(); }

 private:
  SymMatrix a_;
  SymMatrix b_;
};

/// Exact objective value of `pi` on `inst`.
Rational evaluate(const QapInstance& inst, const Permutation& pi);
Rational evaluate(const SymMatrix& a, const SymMatrix& b, const Permutation& pi);

/// y_k = sum of alpha over the k-th consecutive interval of the given sizes.
std::vector<Rational> block_sums(std::span<const Rational> alpha, std::span<const std::size_t> sizes);

inline constexpr std::size_t kDefaultOracleCap = 10;

struct OracleOptions {
  std::size_t max_n = kDefaultOracleCap;
  /// Skip permutations that only reorder values among interchangeable positions of B.
  /// The reported optimum and lexicographically smallest argmin are unchanged.
  bool exploit_symmetry = true;
  /// 0 picks a thread count from the instance size.
  unsigned threads = 0;
};

struct OracleResult {
  Rational value;
  Permutation argmin;
};

/// Exhaustive minimum over all permutations. The argmin is the lexicographically
/// smallest optimal permutation. Throws SizeLimitError above the cap.
OracleResult brute_force_optimum(const QapInstance& inst, const OracleOptions& options);
OracleResult brute_force_optimum(const QapInstance& inst, std::size_t max_n = kDefaultOracleCap);

/// Positions i, j of b are interchangeable when swapping them leaves b unchanged.
/// Returns a class label per position; labels are numbered in order of first appearance.
std::vector<std::size_t> interchangeable_classes(const SymMatrix& b);

}  // namespace qapblock
