#include "qapblock/cut_solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qapblock/error.hpp"

namespace qapblock {

TwoBlockShape::TwoBlockShape(std::size_t r, std::size_t s, std::size_t t, std::size_t u, std::size_t v)
    : r_(r), s_(s), t_(t), u_(u), v_(v) {
  if (r + s + t != u + v) {
    throw InvalidInput("two-block shape: r + s + t = " + std::to_string(r + s + t) + " but u + v = " +
                       std::to_string(u + v));
  }
  if (u > v) throw InvalidInput("two-block shape: cut matrix not in normal form (u > v)");
  if (r + s + t == 0) throw InvalidInput("two-block shape: empty instance");
}

Rational objective_counts(const TwoBlockShape& shape, std::size_t y, std::size_t z) {
  if (y > shape.s() || z > shape.t()) {
    throw InvalidInput("objective_counts: need 0 <= y <= s and 0 <= z <= t");
  }
  const Rational s(shape.s()), t(shape.t()), yy(y), zz(z);
  const Rational factored = 2 * yy * (t - zz) + 2 * zz * (s - yy) + 4 * zz * (t - zz);
  const Rational expanded = -4 * zz * zz - 4 * yy * zz + 2 * t * yy + (2 * s + 4 * t) * zz;
  if (factored != expanded) throw std::logic_error("objective_counts: factored and expanded forms disagree");
  return factored;
}

TwoBlockSolution closed_form_two_block(const TwoBlockShape& shape) {
  const std::size_t r = shape.r(), s = shape.s(), t = shape.t(), u = shape.u(), v = shape.v();
  if (s + t > 2 * v) throw InvalidInput("closed_form_two_block requires s + t <= 2v");

  Rational value;
  if (v > s + t) {
    value = 0;
  } else if (t <= v) {
    // Covers v = s + t (gamma_1 = 0) and v = t (gamma_1 = gamma_2).
    value = Rational(2 * t) * Rational(s + t - v);
  } else {
    value = Rational(2 * v) * (Rational(s + 2 * t) - Rational(2 * v));
  }

  // The identity places the first u indices of A into the first block of B.
  CountAssignment witness;
  witness.x = std::min(r, u);
  witness.y = u > r ? std::min(s, u - r) : 0;
  witness.z = u > r + s ? u - r - s : 0;
  if (objective_counts(shape, witness.y, witness.z) != value) {
    throw std::logic_error("closed_form_two_block: identity witness does not attain the closed form");
  }
  return TwoBlockSolution{std::move(value), witness};
}

QapInstance expand_two_block(const TwoBlockShape& shape) {
  const SymMatrix cut({{0, 1}, {1, 0}});
  return QapInstance(expand(OneLambdaOneSpec(2, shape.r(), shape.s(), shape.t())),
                     expand(BlockSpec(cut, {shape.u(), shape.v()})));
}

namespace {

void require_dimension(const SymMatrix& a, const MultiCutSpec& b) {
  if (a.size() != b.dimension()) {
    throw InvalidInput("matrix A is " + std::to_string(a.size()) + "x" + std::to_string(a.size()) +
                       " but the multi-cut has dimension " + std::to_string(b.dimension()));
  }
}

CutSolution identity_solution(const SymMatrix& a, const MultiCutSpec& b) {
  auto pi = Permutation::identity(a.size());
  Rational value = evaluate(a, expand(b), pi);
  return CutSolution{std::move(pi), std::move(value)};
}

}  // namespace

CutSolution solve_multicut_monotone_antimonge(const SymMatrix& a, const MultiCutSpec& b, bool force) {
  require_dimension(a, b);
  if (!force) {
    if (!is_monotone(a)) throw ClassificationError("matrix A is not monotone");
    if (!is_anti_monge(a)) throw ClassificationError("matrix A is not anti-Monge");
    if (!b.normal_form()) throw ClassificationError("multi-cut matrix B is not in normal form");
  }
  return identity_solution(a, b);
}

CutSolution solve_equal_blocks_antimonge(const SymMatrix& a, const MultiCutSpec& b, bool force) {
  require_dimension(a, b);
  if (!force) {
    if (!is_anti_monge(a)) throw ClassificationError("matrix A is not anti-Monge");
    const auto& sizes = b.sizes();
    if (std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>()) != sizes.end()) {
      throw ClassificationError("multi-cut blocks are not all of equal size");
    }
  }
  return identity_solution(a, b);
}

Permutation separate_adjacent_blocks(const Permutation& pi, const MultiCutSpec& b, std::size_t k) {
  const auto& sizes = b.sizes();
  if (pi.size() != b.dimension()) throw InvalidInput("permutation size does not match the multi-cut");
  if (k + 1 >= sizes.size()) throw InvalidInput("separate_adjacent_blocks: block index out of range");
  std::size_t begin = 0;
  for (std::size_t i = 0; i < k; ++i) begin += sizes[i];
  const std::size_t end = begin + sizes[k] + sizes[k + 1];
  std::vector<std::size_t> image = pi.image();
  std::sort(image.begin() + static_cast<std::ptrdiff_t>(begin), image.begin() + static_cast<std::ptrdiff_t>(end));
  return Permutation(std::move(image));
}

}  // namespace qapblock
