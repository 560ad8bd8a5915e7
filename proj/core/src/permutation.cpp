#include "qapblock/permutation.hpp"

#include <numeric>

#include "qapblock/error.hpp"

namespace qapblock {

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (auto v : image_) {
    if (v >= image_.size() || seen[v]) throw InvalidInput("sequence is not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), std::size_t{0});
  return Permutation(std::move(image));
}

Permutation Permutation::from_one_based(const std::vector<std::size_t>& image) {
  std::vector<std::size_t> zero_based;
  zero_based.reserve(image.size());
  for (auto v : image) {
    if (v == 0) throw InvalidInput("one-based permutation contains 0");
    zero_based.push_back(v - 1);
  }
  return Permutation(std::move(zero_based));
}

std::vector<std::size_t> Permutation::one_based() const {
  std::vector<std::size_t> out(image_);
  for (auto& v : out) ++v;
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw InvalidInput("composing permutations of different sizes");
  std::vector<std::size_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = image_[other.image_[i]];
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

std::string to_string(const Permutation& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p[i] + 1);
  }
  return out + ")";
}

}  // namespace qapblock
