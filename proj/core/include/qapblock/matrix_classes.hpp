#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "qapblock/rational.hpp"
#include "qapblock/sym_matrix.hpp"

namespace qapblock {

/// Product matrix a_ij = alpha_i * alpha_j with alpha_i >= 0.
class ProductSpec {
 public:
  explicit ProductSpec(std::vector<Rational> alpha);

  const std::vector<Rational>& alpha() const { return alpha_; }
  std::size_t size() const { return alpha_.size(); }
  /// alpha is non-decreasing, i.e. the expanded matrix is monotone.
  bool is_monotone() const;

  friend bool operator==(const ProductSpec&, const ProductSpec&) = default;

 private:
  std::vector<Rational> alpha_;
};

/// Sum matrix a_ij = alpha_i + alpha_j (entries of alpha may be negative).
class SumSpec {
 public:
  explicit SumSpec(std::vector<Rational> alpha);

  const std::vector<Rational>& alpha() const { return alpha_; }
  std::size_t size() const { return alpha_.size(); }

  friend bool operator==(const SumSpec&, const SumSpec&) = default;

 private:
  std::vector<Rational> alpha_;
};

/// Block matrix: consecutive (possibly empty) intervals of the given sizes, constant
/// pattern(k, l) on interval k x interval l.
class BlockSpec {
 public:
  BlockSpec(SymMatrix pattern, std::vector<std::size_t> sizes);

  const SymMatrix& pattern() const { return pattern_; }
  const std::vector<std::size_t>& sizes() const { return sizes_; }
  std::size_t block_count() const { return sizes_.size(); }
  /// Dimension of the expanded matrix.
  std::size_t dimension() const;
  /// block_of()[i] is the block containing index i of the expanded matrix.
  std::vector<std::size_t> block_of() const;

  friend bool operator==(const BlockSpec&, const BlockSpec&) = default;

 private:
  SymMatrix pattern_;
  std::vector<std::size_t> sizes_;
};

/// Multi-cut matrix: 0 on diagonal blocks, 1 elsewhere. Sizes are positive.
class MultiCutSpec {
 public:
  explicit MultiCutSpec(std::vector<std::size_t> sizes);

  const std::vector<std::size_t>& sizes() const { return sizes_; }
  std::size_t dimension() const;
  /// Block sizes are non-decreasing.
  bool normal_form() const;
  BlockSpec as_block_spec() const;

  friend bool operator==(const MultiCutSpec&, const MultiCutSpec&) = default;

 private:
  std::vector<std::size_t> sizes_;
};

/// Three-block matrix with pattern P(lambda) = [[0,0,0],[0,0,1],[0,1,lambda]] and sizes r, s, t.
class OneLambdaOneSpec {
 public:
  OneLambdaOneSpec(Rational lambda, std::size_t r, std::size_t s, std::size_t t);

  const Rational& lambda() const { return lambda_; }
  std::size_t r() const { return r_; }
  std::size_t s() const { return s_; }
  std::size_t t() const { return t_; }
  std::size_t dimension() const { return r_ + s_ + t_; }
  BlockSpec as_block_spec() const;

  friend bool operator==(const OneLambdaOneSpec&, const OneLambdaOneSpec&) = default;

 private:
  Rational lambda_;
  std::size_t r_, s_, t_;
};

SymMatrix one_lambda_one_pattern(const Rational& lambda);

SymMatrix expand(const ProductSpec& spec);
SymMatrix expand(const SumSpec& spec);
SymMatrix expand(const BlockSpec& spec);
SymMatrix expand(const MultiCutSpec& spec);
SymMatrix expand(const OneLambdaOneSpec& spec);

/// Rows and columns are non-decreasing.
bool is_monotone(const SymMatrix& a);

/// Non-negative entries and a_ij + a_{i+1,j+1} >= a_{i,j+1} + a_{i+1,j} for adjacent pairs;
/// the adjacent inequalities imply all (i < r, j < s) quadruples by telescoping.
bool is_anti_monge(const SymMatrix& a);

struct AntiMongeSplit {
  SymMatrix monotone_part;
  SumSpec sum_part;
};

/// Writes an anti-Monge matrix as (monotone anti-Monge) + (sum matrix).
/// alpha_1 = 0 and alpha_{i+1} - alpha_i = min(0, a_{i+1,1} - a_{i,1}); the monotone part then
/// has m_11 = a_11 as its smallest entry. Throws ClassificationError on non-anti-Monge input.
AntiMongeSplit split_anti_monge(const SymMatrix& a);

/// If `a` is a product matrix, returns beta proportional to its factor alpha, scaled so that
/// beta_{i0} = a_{i0,i0} at the first index with positive diagonal; a_ij * a_{i0,i0} = beta_i * beta_j.
/// Square roots are avoided, so beta = sqrt(a_{i0,i0}) * alpha.
std::optional<std::vector<Rational>> recognize_product(const SymMatrix& a);

std::optional<SumSpec> recognize_sum(const SymMatrix& a);

/// Coarsest consecutive-interval partition on which `b` is blockwise constant.
BlockSpec recognize_block_structure(const SymMatrix& b);

struct MultiCutRecognition {
  MultiCutSpec spec;
  bool normal_form;
};

std::optional<MultiCutRecognition> recognize_multicut(const SymMatrix& b);

/// Recognizes expand(OneLambdaOneSpec(lambda, r, s, t)) for some r, s, t.
std::optional<OneLambdaOneSpec> recognize_one_lambda_one(const SymMatrix& a, const Rational& lambda);

/// Key (r, s, t) of a 1-lambda-1 generator.
using BlockTriple = std::array<std::size_t, 3>;
using GmamCoefficients = std::map<BlockTriple, Rational>;

/// Non-negative coefficients c with a = sum c_rst * expand(OneLambdaOneSpec(lambda, r, s, t)),
/// or nullopt if `a` lies outside the lambda-GMAM cone. Only positive coefficients are listed.
/// Decided by exact linear feasibility; intended for n <= 30.
std::optional<GmamCoefficients> gmam_decompose(const SymMatrix& a, const Rational& lambda);

/// Sum of c_rst * generator; the inverse of gmam_decompose.
SymMatrix gmam_compose(std::size_t n, const Rational& lambda, const GmamCoefficients& coefficients);

}  // namespace qapblock
