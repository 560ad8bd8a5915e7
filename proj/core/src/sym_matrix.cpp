#include "qapblock/sym_matrix.hpp"

#include <sstream>

#include "qapblock/error.hpp"

namespace qapblock {

SymMatrix::SymMatrix(std::size_t n, std::vector<Rational> data) : n_(n), data_(std::move(data)) {
  if (n_ == 0) throw InvalidInput("matrix dimension must be at least 1");
}

SymMatrix::SymMatrix(const std::vector<std::vector<Rational>>& rows) : n_(rows.size()) {
  if (n_ == 0) throw InvalidInput("matrix dimension must be at least 1");
  data_.reserve(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) {
      throw InvalidInput("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                         " entries, expected " + std::to_string(n_));
    }
    data_.insert(data_.end(), rows[i].begin(), rows[i].end());
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (data_[i * n_ + j] != data_[j * n_ + i]) {
        throw InvalidInput("matrix is not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                           ")");
      }
    }
  }
}

SymMatrix SymMatrix::zero(std::size_t n) { return SymMatrix(n, std::vector<Rational>(n * n)); }

SymMatrix SymMatrix::constant(std::size_t n, const Rational& value) {
  return SymMatrix(n, std::vector<Rational>(n * n, value));
}

std::vector<std::vector<Rational>> SymMatrix::rows() const {
  std::vector<std::vector<Rational>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i].assign(data_.begin() + i * n_, data_.begin() + (i + 1) * n_);
  return out;
}

SymMatrix SymMatrix::operator+(const SymMatrix& rhs) const {
  if (rhs.n_ != n_) throw InvalidInput("matrix sum with mismatched dimensions");
  std::vector<Rational> out(data_);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += rhs.data_[k];
  return SymMatrix(n_, std::move(out));
}

SymMatrix SymMatrix::operator-(const SymMatrix& rhs) const {
  if (rhs.n_ != n_) throw InvalidInput("matrix difference with mismatched dimensions");
  std::vector<Rational> out(data_);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= rhs.data_[k];
  return SymMatrix(n_, std::move(out));
}

SymMatrix SymMatrix::scaled(const Rational& factor) const {
  std::vector<Rational> out(data_);
  for (auto& x : out) x *= factor;
  return SymMatrix(n_, std::move(out));
}

SymMatrix SymMatrix::principal(const std::vector<std::size_t>& indices) const {
  for (auto i : indices) {
    if (i >= n_) throw InvalidInput("principal submatrix index out of range");
  }
  return generate(indices.size(), [&](std::size_t i, std::size_t j) { return (*this)(indices[i], indices[j]); });
}

std::string to_string(const SymMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.size(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace qapblock
