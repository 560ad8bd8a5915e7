#pragma once

// Direct enumerations used to cross-check the library. None of these call the
// structured solvers; they only rely on Rational and SymMatrix.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "qapblock/rational.hpp"
#include "qapblock/sym_matrix.hpp"

namespace qapblock::verify {

/// a_ij >= 0 and a_ij + a_rs >= a_is + a_rj for every i < r, j < s.
bool anti_monge_exhaustive(const SymMatrix& a);

/// Every subset (as a sorted index list) whose values sum to exactly 1.
std::vector<std::vector<std::size_t>> subsets_summing_to_one(const std::vector<Rational>& values);

using Edge = std::pair<std::size_t, std::size_t>;

/// Fewest edges crossing a split of {0..n-1} into two halves of size n/2.
std::size_t min_bisection_cut(std::size_t n, const std::vector<Edge>& edges);

/// min f(y, z) = 2y(t-z) + 2z(s-y) + 4z(t-z) over integer x + y + z = u, 0 <= x <= r, 0 <= y <= s, 0 <= z <= t.
std::int64_t two_block_grid_minimum(std::int64_t r, std::int64_t s, std::int64_t t, std::int64_t u);

/// sum_ij a[p(i)][p(j)] b[i][j] for every permutation p in lexicographic order.
std::vector<Rational> all_permutation_values(const SymMatrix& a, const SymMatrix& b);

}  // namespace qapblock::verify
