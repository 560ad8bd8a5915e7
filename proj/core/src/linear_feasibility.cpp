#include "qapblock/linear_feasibility.hpp"

#include <cstddef>

#include "qapblock/error.hpp"

namespace qapblock {

std::optional<std::vector<Rational>> solve_nonnegative_system(const std::vector<std::vector<Rational>>& columns,
                                                              const std::vector<Rational>& rhs) {
  const std::size_t rows = rhs.size();
  const std::size_t structural = columns.size();
  for (const auto& col : columns) {
    if (col.size() != rows) throw InvalidInput("column length does not match right-hand side");
  }
  if (rows == 0) return std::vector<Rational>(structural);

  // Tableau [A | I | b] with rows negated where b < 0; artificials start basic.
  const std::size_t width = structural + rows;
  std::vector<std::vector<mpq_class>> tab(rows, std::vector<mpq_class>(width + 1));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const bool flip = rhs[i].sign() < 0;
    for (std::size_t j = 0; j < structural; ++j) tab[i][j] = flip ? mpq_class(-columns[j][i].get()) : columns[j][i].get();
    tab[i][structural + i] = 1;
    tab[i][width] = flip ? mpq_class(-rhs[i].get()) : rhs[i].get();
    basis[i] = structural + i;
  }

  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<mpq_class> cost(width + 1);
  for (std::size_t j = 0; j <= width; ++j) {
    if (j >= structural && j < width) continue;
    for (std::size_t i = 0; i < rows; ++i) cost[j] -= tab[i][j];
  }

  for (;;) {
    std::size_t entering = width;
    for (std::size_t j = 0; j < width; ++j) {
      if (sgn(cost[j]) < 0) {
        entering = j;
        break;
      }
    }
    if (entering == width) break;

    std::size_t leaving = rows;
    mpq_class best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (sgn(tab[i][entering]) <= 0) continue;
      mpq_class ratio = tab[i][width] / tab[i][entering];
      if (leaving == rows || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    // Phase one is bounded below by zero, so an entering column always has a positive entry.
    if (leaving == rows) throw std::logic_error("phase-one simplex reported an unbounded direction");

    const mpq_class pivot = tab[leaving][entering];
    for (auto& x : tab[leaving]) x /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leaving || sgn(tab[i][entering]) == 0) continue;
      const mpq_class factor = tab[i][entering];
      for (std::size_t j = 0; j <= width; ++j) {
        if (sgn(tab[leaving][j]) != 0) tab[i][j] -= factor * tab[leaving][j];
      }
    }
    if (sgn(cost[entering]) != 0) {
      const mpq_class factor = cost[entering];
      for (std::size_t j = 0; j <= width; ++j) {
        if (sgn(tab[leaving][j]) != 0) cost[j] -= factor * tab[leaving][j];
      }
    }
    basis[leaving] = entering;
  }

  // cost[width] holds minus the phase-one objective.
  if (sgn(cost[width]) != 0) return std::nullopt;

  std::vector<Rational> solution(structural);
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] < structural) solution[basis[i]] = Rational(tab[i][width]);
  }
  return solution;
}

}  // namespace qapblock
