#include "verify/oracles.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace qapblock::verify {

bool anti_monge_exhaustive(const SymMatrix& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j).sign() < 0) return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = i + 1; r < n; ++r) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t s = j + 1; s < n; ++s) {
          if (a(i, j) + a(r, s) < a(i, s) + a(r, j)) return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::vector<std::size_t>> subsets_summing_to_one(const std::vector<Rational>& values) {
  const std::size_t m = values.size();
  if (m >= 63) throw std::length_error("subsets_summing_to_one: too many values");
  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Rational sum;
    std::vector<std::size_t> members;
    for (std::size_t k = 0; k < m; ++k) {
      if (mask >> k & 1U) {
        sum += values[k];
        members.push_back(k);
      }
    }
    if (sum == 1) out.push_back(std::move(members));
  }
  return out;
}

std::size_t min_bisection_cut(std::size_t n, const std::vector<Edge>& edges) {
  if (n % 2 != 0 || n >= 63) throw std::invalid_argument("min_bisection_cut: bad vertex count");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::uint64_t side = 0; side < (std::uint64_t{1} << n); ++side) {
    if (static_cast<std::size_t>(__builtin_popcountll(side)) != n / 2) continue;
    std::size_t cut = 0;
    for (auto [u, v] : edges) cut += ((side >> u) & 1U) != ((side >> v) & 1U);
    best = std::min(best, cut);
  }
  return best;
}

std::int64_t two_block_grid_minimum(std::int64_t r, std::int64_t s, std::int64_t t, std::int64_t u) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::int64_t x = 0; x <= r; ++x) {
    for (std::int64_t y = 0; y <= s; ++y) {
      const std::int64_t z = u - x - y;
      if (z < 0 || z > t) continue;
      best = std::min(best, 2 * y * (t - z) + 2 * z * (s - y) + 4 * z * (t - z));
    }
  }
  if (best == std::numeric_limits<std::int64_t>::max()) throw std::invalid_argument("two_block_grid_minimum: empty grid");
  return best;
}

std::vector<Rational> all_permutation_values(const SymMatrix& a, const SymMatrix& b) {
  const std::size_t n = a.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<Rational> out;
  do {
    Rational total;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) total += a(p[i], p[j]) * b(i, j);
    }
    out.push_back(std::move(total));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace qapblock::verify
