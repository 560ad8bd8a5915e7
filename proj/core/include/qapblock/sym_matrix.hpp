#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qapblock/rational.hpp"

namespace qapblock {

/// Dense symmetric n x n matrix of exact rationals. Immutable after construction.
class SymMatrix {
 public:
  /// Validates squareness, n >= 1 and symmetry.
  explicit SymMatrix(const std::vector<std::vector<Rational>>& rows);

  static SymMatrix zero(std::size_t n);
  static SymMatrix constant(std::size_t n, const Rational& value);

  /// Builds a matrix from entry(i, j), evaluated on the upper triangle only.
  template <class EntryFn>
  static SymMatrix generate(std::size_t n, EntryFn&& entry) {
    std::vector<Rational> data(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        data[i * n + j] = entry(i, j);
        data[j * n + i] = data[i * n + j];
      }
    }
    return SymMatrix(n, std::move(data));
  }

  std::size_t size() const { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::vector<std::vector<Rational>> rows() const;

  SymMatrix operator+(const SymMatrix& rhs) const;
  SymMatrix operator-(const SymMatrix& rhs) const;
  SymMatrix scaled(const Rational& factor) const;

  /// Principal submatrix on the given (sorted or not) index list.
  SymMatrix principal(const std::vector<std::size_t>& indices) const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  SymMatrix(std::size_t n, std::vector<Rational> data);

  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

std::string to_string(const SymMatrix& m);

}  // namespace qapblock
