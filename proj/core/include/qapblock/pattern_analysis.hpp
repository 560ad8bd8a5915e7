#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "qapblock/rational.hpp"
#include "qapblock/sym_matrix.hpp"

namespace qapblock {

/// Exact minimum of a2 x^2 + a1 x + a0 over [lo, hi].
struct IntervalMinimum {
  Rational argmin;
  Rational min;
  bool interior = false;  // strictly convex with the vertex strictly inside (lo, hi)
  bool unique = false;
};

IntervalMinimum quadratic_on_interval(const Rational& a2, const Rational& a1, const Rational& a0,
                                      const Rational& lo, const Rational& hi);

/// Input of the equality-constrained program QP-1 over a q x q pattern:
/// sum x = 1, x_r + x_s = gamma, x_i = fixed[i] for i not in {r, s}.
class Ensemble {
 public:
  /// `fixed` has length q; its entries at r and s are ignored and stored as 0.
  Ensemble(std::size_t q, std::size_t r, std::size_t s, Rational gamma, std::vector<Rational> fixed);

  std::size_t q() const { return fixed_.size(); }
  std::size_t r() const { return r_; }
  std::size_t s() const { return s_; }
  const Rational& gamma() const { return gamma_; }
  const std::vector<Rational>& fixed() const { return fixed_; }

 private:
  std::size_t r_, s_;
  Rational gamma_;
  std::vector<Rational> fixed_;
};

/// Bounds lower_i <= x_i < upper_i of QP-2 together with the free pair (r, s).
class VeryBadEnsemble {
 public:
  VeryBadEnsemble(std::size_t r, std::size_t s, std::vector<Rational> lower, std::vector<Rational> upper);

  std::size_t r() const { return r_; }
  std::size_t s() const { return s_; }
  const std::vector<Rational>& lower() const { return lower_; }
  const std::vector<Rational>& upper() const { return upper_; }

  friend bool operator==(const VeryBadEnsemble&, const VeryBadEnsemble&) = default;

 private:
  std::size_t r_, s_;
  std::vector<Rational> lower_, upper_;
};

struct QpSolution {
  std::vector<Rational> x;
  Rational value;  // sum_ij p_ij x_i x_j
  bool unique = false;
  bool interior_r_s = false;  // 0 < x_r < gamma and 0 < x_s < gamma (QP-1) / inside the bounds (QP-2)
};

/// sum_ij p_ij x_i x_j.
Rational quadratic_form(const SymMatrix& p, const std::vector<Rational>& x);

QpSolution qp1_minimize(const SymMatrix& pattern, const Ensemble& ensemble);

/// A bad ensemble has a unique QP-1 minimizer strictly inside in both free coordinates.
bool is_bad(const SymMatrix& pattern, const Ensemble& ensemble);

/// Minimizer of QP-2 on the 2x2 subpattern {r, s} with bounds 0 <= x < 1:
///   x_r = (p_ss - p_rs) / (p_rr + p_ss - 2 p_rs),  x_s = (p_rr - p_rs) / (p_rr + p_ss - 2 p_rs).
/// The returned vector has length q with zeros outside {r, s}.
/// Throws ClassificationError unless p_rr > p_rs and p_ss > p_rs.
QpSolution qp2_minimize_2x2(const SymMatrix& pattern, std::size_t r, std::size_t s);

/// p_ii + p_jj <= 2 p_ij for all i, j.
bool satisfies_condition14(const SymMatrix& pattern);
/// p_rr > p_rs and p_ss > p_rs.
bool satisfies_condition16(const SymMatrix& pattern, std::size_t r, std::size_t s);

struct PolynomialByCondition14 {};
struct NPHardByCondition16 {
  VeryBadEnsemble witness;
  QpSolution minimizer;
};
struct UnknownComplexity {};

using PatternVerdict = std::variant<PolynomialByCondition14, NPHardByCondition16, UnknownComplexity>;

/// Certificate-based classification. Only the two sufficient conditions are decided;
/// anything else is reported as unknown. The hardness witness is the lexicographically
/// smallest pair (r, s) passing satisfies_condition16.
PatternVerdict classify_pattern(const SymMatrix& pattern);

enum class TwoByTwoVerdict { kPolynomial, kNPHard };

/// Exact dichotomy for 2x2 patterns: NP-hard iff p11 > p12 and p22 > p12.
TwoByTwoVerdict classify_2x2(const SymMatrix& pattern);

}  // namespace qapblock
