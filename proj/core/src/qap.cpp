#include "qapblock/qap.hpp"

#include <numeric>
#include <string>

#include "qapblock/error.hpp"

namespace qapblock {

QapInstance::QapInstance(SymMatrix a, SymMatrix b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.size() != b_.size()) {
    throw InvalidInput("QAP matrices differ in dimension: " + std::to_string(a_.size()) + " vs " +
                       std::to_string(b_.size()));
  }
}

Rational evaluate(const SymMatrix& a, const SymMatrix& b, const Permutation& pi) {
  const std::size_t n = a.size();
  if (b.size() != n || pi.size() != n) {
    throw InvalidInput("permutation of size " + std::to_string(pi.size()) + " does not match instance of size " +
                       std::to_string(n));
  }
  mpq_class total;
  for (std::size_t i = 0; i < n; ++i) {
    total += a(pi[i], pi[i]).get() * b(i, i).get();
    for (std::size_t j = i + 1; j < n; ++j) {
      if (b(i, j).sign() == 0) continue;
      total += 2 * a(pi[i], pi[j]).get() * b(i, j).get();
    }
  }
  return Rational(std::move(total));
}

Rational evaluate(const QapInstance& inst, const Permutation& pi) { return evaluate(inst.a(), inst.b(), pi); }

std::vector<Rational> block_sums(std::span<const Rational> alpha, std::span<const std::size_t> sizes) {
  const std::size_t total = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  if (total != alpha.size()) {
    throw InvalidInput("block sizes sum to " + std::to_string(total) + " but " + std::to_string(alpha.size()) +
                       " values were given");
  }
  std::vector<Rational> out;
  out.reserve(sizes.size());
  std::size_t pos = 0;
  for (auto size : sizes) {
    Rational sum;
    for (std::size_t k = 0; k < size; ++k) sum += alpha[pos++];
    out.push_back(std::move(sum));
  }
  return out;
}

}  // namespace qapblock
