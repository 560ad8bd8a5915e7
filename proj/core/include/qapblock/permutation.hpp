#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace qapblock {

/// Bijection on {0, ..., n-1}. Position i is mapped to image[i].
///
/// Indices are 0-based here; `from_one_based` / `one_based` convert at I/O boundaries.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> image);

  static Permutation identity(std::size_t n);
  static Permutation from_one_based(const std::vector<std::size_t>& image);

  std::size_t size() const { return image_.size(); }
  std::size_t operator[](std::size_t i) const { return image_[i]; }
  const std::vector<std::size_t>& image() const { return image_; }
  std::vector<std::size_t> one_based() const;

  Permutation inverse() const;
  /// (this o other)(i) = this[other[i]].
  Permutation compose(const Permutation& other) const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Lexicographic on the image sequence.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

std::string to_string(const Permutation& p);

}  // namespace qapblock
