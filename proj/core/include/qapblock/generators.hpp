#pragma once

#include <cstddef>
#include <cstdint>

#include "qapblock/matrix_classes.hpp"

namespace qapblock {

// All generators are deterministic functions of their arguments.

/// Sum of k random positive multiples of random 1-2-1 block matrices.
SymMatrix gen_monotone_anti_monge(std::size_t n, std::size_t k, std::uint64_t seed);

/// gen_monotone_anti_monge plus a random sum matrix, shifted by a constant so all entries are >= 0.
SymMatrix gen_anti_monge(std::size_t n, std::size_t k, std::uint64_t seed);

/// Random non-negative, non-decreasing factor.
ProductSpec gen_product(std::size_t n, std::uint64_t seed);

/// Random normal-form multi-cut with q non-empty blocks summing to n.
MultiCutSpec gen_multicut(std::size_t n, std::size_t q, std::uint64_t seed);

enum class PatternFamily {
  kCondition14,  // p_ii + p_jj <= 2 p_ij for all i, j
  kCondition16,  // some r < s with p_rr > p_rs and p_ss > p_rs
  kAny,
};

SymMatrix gen_pattern(std::size_t q, PatternFamily family, std::uint64_t seed);

}  // namespace qapblock
