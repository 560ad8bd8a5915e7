#pragma once

#include <cstddef>

#include "qapblock/matrix_classes.hpp"
#include "qapblock/permutation.hpp"
#include "qapblock/qap.hpp"

namespace qapblock {

/// Block sizes r, s, t of a 1-2-1 matrix A and u <= v of a two-block cut matrix B.
class TwoBlockShape {
 public:
  TwoBlockShape(std::size_t r, std::size_t s, std::size_t t, std::size_t u, std::size_t v);

  std::size_t r() const { return r_; }
  std::size_t s() const { return s_; }
  std::size_t t() const { return t_; }
  std::size_t u() const { return u_; }
  std::size_t v() const { return v_; }
  std::size_t n() const { return r_ + s_ + t_; }

 private:
  std::size_t r_, s_, t_, u_, v_;
};

/// Numbers of A rows from blocks r, s, t placed into the first (size u) block of B.
struct CountAssignment {
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t z = 0;
  friend bool operator==(const CountAssignment&, const CountAssignment&) = default;
};

/// f(y, z) = 2y(t - z) + 2z(s - y) + 4z(t - z). Also evaluates the expanded form
/// -4z^2 - 4yz + 2ty + (2s + 4t)z and throws std::logic_error if they ever disagree.
Rational objective_counts(const TwoBlockShape& shape, std::size_t y, std::size_t z);

struct TwoBlockSolution {
  Rational value;
  CountAssignment witness;  // counts induced by the identity permutation
};

/// Optimal value of the 1-2-1 x two-block cut QAP:
///   0                     if v >= s + t
///   2t(s + t - v)         if t <= v <= s + t
///   2v(s + 2t - 2v)       if v < t
/// Requires s + t <= 2v.
TwoBlockSolution closed_form_two_block(const TwoBlockShape& shape);

/// The QAP instance (1-2-1 matrix with sizes r, s, t; cut matrix with sizes u, v).
QapInstance expand_two_block(const TwoBlockShape& shape);

struct CutSolution {
  Permutation permutation;
  Rational value;
};

/// Identity is optimal when A is monotone anti-Monge and B is a normal-form multi-cut.
/// Hypotheses are checked unless `force` is set; with `force` the identity is merely evaluated.
CutSolution solve_multicut_monotone_antimonge(const SymMatrix& a, const MultiCutSpec& b, bool force = false);

/// Identity is optimal when A is anti-Monge (not necessarily monotone) and all blocks have equal size.
CutSolution solve_equal_blocks_antimonge(const SymMatrix& a, const MultiCutSpec& b, bool force = false);

/// Reassigns the A indices sitting in blocks k and k+1 of B so that the smaller
/// ones fill block k (in increasing order) and the rest fill block k+1.
Permutation separate_adjacent_blocks(const Permutation& pi, const MultiCutSpec& b, std::size_t k);

}  // namespace qapblock
