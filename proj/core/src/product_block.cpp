#include "qapblock/product_block.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <variant>

#include "qapblock/error.hpp"
#include "qapblock/pattern_analysis.hpp"

namespace qapblock {

ProductBlockInstance::ProductBlockInstance(ProductSpec alpha, BlockSpec blocks)
    : alpha_(std::move(alpha)), blocks_(std::move(blocks)) {
  if (!alpha_.is_monotone()) throw InvalidInput("product-block instance needs a non-decreasing factor");
  if (blocks_.dimension() != alpha_.size()) {
    throw InvalidInput("block sizes sum to " + std::to_string(blocks_.dimension()) + " but the factor has " +
                       std::to_string(alpha_.size()) + " entries");
  }
}

SortedIngestion ingest_product_block(const ProductSpec& alpha, const BlockSpec& blocks) {
  std::vector<std::size_t> order(alpha.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return alpha.alpha()[i] < alpha.alpha()[j]; });
  std::vector<Rational> sorted;
  sorted.reserve(order.size());
  for (auto i : order) sorted.push_back(alpha.alpha()[i]);
  return SortedIngestion{ProductBlockInstance(ProductSpec(std::move(sorted)), blocks), Permutation(std::move(order))};
}

Rational objective_from_block_sums(const SymMatrix& pattern, const std::vector<Rational>& y) {
  if (y.size() != pattern.size()) {
    throw InvalidInput("objective_from_block_sums: " + std::to_string(y.size()) + " block sums for a " +
                       std::to_string(pattern.size()) + "x" + std::to_string(pattern.size()) + " pattern");
  }
  Rational total;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i].sign() == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) total += pattern(i, j) * y[i] * y[j];
  }
  return total;
}

std::string_view to_string(Certification c) {
  return c == Certification::kTheoremOptimal ? "theorem-optimal" : "separable-heuristic";
}

bool pattern_certified_polynomial(const SymMatrix& pattern) {
  if (std::holds_alternative<PolynomialByCondition14>(classify_pattern(pattern))) return true;
  return pattern.size() == 2 && classify_2x2(pattern) == TwoByTwoVerdict::kPolynomial;
}

Permutation permutation_for_block_order(const BlockSpec& blocks, const std::vector<std::size_t>& order) {
  const auto& sizes = blocks.sizes();
  std::vector<std::size_t> first_position(sizes.size());
  std::size_t pos = 0;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    first_position[k] = pos;
    pos += sizes[k];
  }
  std::vector<std::size_t> image(pos);
  std::size_t next_alpha = 0;
  for (auto k : order) {
    for (std::size_t i = 0; i < sizes[k]; ++i) image[first_position[k] + i] = next_alpha++;
  }
  return Permutation(std::move(image));
}

ProductBlockSolution solve_product_block(const ProductBlockInstance& inst, const ProductBlockOptions& options) {
  const SymMatrix& pattern = inst.blocks().pattern();
  const auto& sizes = inst.blocks().sizes();
  const std::size_t q = sizes.size();
  if (q > options.max_q) {
    throw SizeLimitError("product-block enumeration refused: q = " + std::to_string(q) + " exceeds cap " +
                         std::to_string(options.max_q));
  }
  Certification certification = Certification::kTheoremOptimal;
  if (!pattern_certified_polynomial(pattern)) {
    if (!options.attest) {
      throw ClassificationError(
          "block pattern is not certified free of bad ensembles; the best separable assignment would not be "
          "guaranteed optimal (pass attestation to accept a separable-heuristic result)");
    }
    certification = Certification::kSeparableHeuristic;
  }

  const auto& alpha = inst.alpha().alpha();
  std::vector<Rational> prefix(alpha.size() + 1);
  for (std::size_t i = 0; i < alpha.size(); ++i) prefix[i + 1] = prefix[i] + alpha[i];

  std::vector<std::size_t> order(q);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<Rational> y(q);
  bool have_best = false;
  Rational best;
  std::vector<std::size_t> best_order;
  do {
    std::size_t start = 0;
    for (auto k : order) {
      y[k] = prefix[start + sizes[k]] - prefix[start];
      start += sizes[k];
    }
    Rational value = objective_from_block_sums(pattern, y);
    if (!have_best || value < best) {
      have_best = true;
      best = std::move(value);
      best_order = order;
    }
  } while (std::next_permutation(order.begin(), order.end()));

  Permutation pi = permutation_for_block_order(inst.blocks(), best_order);
  return ProductBlockSolution{std::move(best), std::move(best_order), std::move(pi), certification};
}

QapInstance expand_to_qap(const ProductBlockInstance& inst) {
  return QapInstance(expand(inst.alpha()), expand(inst.blocks()));
}

}  // namespace qapblock
