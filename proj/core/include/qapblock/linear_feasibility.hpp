#pragma once

#include <optional>
#include <vector>

#include "qapblock/rational.hpp"

namespace qapblock {

/// Decides exactly whether columns * c = rhs has a solution with c >= 0.
///
/// `columns[j]` is the j-th column (all of equal length = rhs.size()).
/// Phase-one simplex over the rationals with Bland's rule, so it always terminates.
/// Returns one non-negative solution (a basic one) or nullopt.
std::optional<std::vector<Rational>> solve_nonnegative_system(const std::vector<std::vector<Rational>>& columns,
                                                              const std::vector<Rational>& rhs);

}  // namespace qapblock
