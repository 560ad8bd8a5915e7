#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "qapblock/matrix_classes.hpp"
#include "qapblock/permutation.hpp"
#include "qapblock/qap.hpp"

namespace qapblock {

/// Product matrix with non-decreasing factor alpha against a block matrix.
class ProductBlockInstance {
 public:
  ProductBlockInstance(ProductSpec alpha, BlockSpec blocks);

  const ProductSpec& alpha() const { return alpha_; }
  const BlockSpec& blocks() const { return blocks_; }
  std::size_t size() const { return alpha_.size(); }

 private:
  ProductSpec alpha_;
  BlockSpec blocks_;
};

/// Sorts an arbitrary factor. sorted_to_original[k] is the original index of the k-th smallest value.
struct SortedIngestion {
  ProductBlockInstance instance;
  Permutation sorted_to_original;
};

SortedIngestion ingest_product_block(const ProductSpec& alpha, const BlockSpec& blocks);

/// sum_ij p_ij y_i y_j.
Rational objective_from_block_sums(const SymMatrix& pattern, const std::vector<Rational>& block_sums);

enum class Certification {
  kTheoremOptimal,       // the pattern admits no bad ensemble (certified)
  kSeparableHeuristic,   // caller attestation; best among separable assignments only
};

std::string_view to_string(Certification c);

struct ProductBlockOptions {
  /// Run on patterns that are not certified easy; the result is then only separable-optimal.
  bool attest = false;
  std::size_t max_q = 8;
};

struct ProductBlockSolution {
  Rational value;
  /// Blocks listed from the smallest alpha values upward (0-based block indices).
  std::vector<std::size_t> block_order;
  Permutation permutation;
  Certification certification;
};

/// True when satisfies_condition14 holds, or q = 2 and classify_2x2 says polynomial.
bool pattern_certified_polynomial(const SymMatrix& pattern);

/// Enumerates the q! block orders; each order hands consecutive runs of the sorted alpha to
/// the blocks. Ties go to the lexicographically smallest order. Prefix sums make each
/// order O(q^2). Throws ClassificationError for uncertified patterns without attestation.
ProductBlockSolution solve_product_block(const ProductBlockInstance& inst, const ProductBlockOptions& options = {});

/// The QAP between the product matrix and the block matrix.
QapInstance expand_to_qap(const ProductBlockInstance& inst);

/// Permutation that gives block `order[0]` the first |I_order[0]| sorted indices, and so on.
Permutation permutation_for_block_order(const BlockSpec& blocks, const std::vector<std::size_t>& order);

}  // namespace qapblock
