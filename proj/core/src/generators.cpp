#include "qapblock/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "qapblock/error.hpp"

namespace qapblock {

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
  }
  Rational fraction(long lo, long hi, long max_den) { return Rational(integer(lo, hi), integer(1, max_den)); }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

void require_dimension(std::size_t n, const char* what) {
  if (n == 0) throw InvalidInput(std::string(what) + ": dimension must be at least 1");
}

}  // namespace

SymMatrix gen_monotone_anti_monge(std::size_t n, std::size_t k, std::uint64_t seed) {
  require_dimension(n, "gen_monotone_anti_monge");
  if (k == 0) throw InvalidInput("gen_monotone_anti_monge: need at least one generator");
  Draw draw(seed);
  SymMatrix total = SymMatrix::zero(n);
  for (std::size_t term = 0; term < k; ++term) {
    const std::size_t r = draw.index(0, n - 1);
    const std::size_t s = draw.index(0, n - 1 - r);
    const std::size_t t = n - r - s;
    total = total + expand(OneLambdaOneSpec(2, r, s, t)).scaled(draw.fraction(1, 9, 3));
  }
  return total;
}

SymMatrix gen_anti_monge(std::size_t n, std::size_t k, std::uint64_t seed) {
  const SymMatrix base = gen_monotone_anti_monge(n, k, seed);
  Draw draw(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Rational> alpha(n);
  for (auto& x : alpha) x = draw.fraction(-8, 8, 2);
  SymMatrix shifted = base + expand(SumSpec(alpha));
  Rational lowest = shifted(0, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) lowest = std::min(lowest, shifted(i, j));
  }
  if (lowest.sign() < 0) shifted = shifted + SymMatrix::constant(n, -lowest);
  return shifted;
}

ProductSpec gen_product(std::size_t n, std::uint64_t seed) {
  require_dimension(n, "gen_product");
  Draw draw(seed);
  std::vector<Rational> alpha(n);
  for (auto& x : alpha) x = draw.fraction(0, 12, 3);
  std::sort(alpha.begin(), alpha.end());
  return ProductSpec(std::move(alpha));
}

MultiCutSpec gen_multicut(std::size_t n, std::size_t q, std::uint64_t seed) {
  require_dimension(n, "gen_multicut");
  if (q == 0 || q > n) {
    throw InvalidInput("gen_multicut: need 1 <= q <= n, got q = " + std::to_string(q) + ", n = " + std::to_string(n));
  }
  Draw draw(seed);
  std::vector<std::size_t> cuts(n - 1);
  std::iota(cuts.begin(), cuts.end(), std::size_t{1});
  std::shuffle(cuts.begin(), cuts.end(), draw.engine());
  cuts.resize(q - 1);
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::size_t> sizes;
  std::size_t prev = 0;
  for (auto c : cuts) {
    sizes.push_back(c - prev);
    prev = c;
  }
  sizes.push_back(n - prev);
  std::sort(sizes.begin(), sizes.end());
  return MultiCutSpec(std::move(sizes));
}

SymMatrix gen_pattern(std::size_t q, PatternFamily family, std::uint64_t seed) {
  require_dimension(q, "gen_pattern");
  Draw draw(seed);
  std::vector<std::vector<Rational>> p(q, std::vector<Rational>(q));
  switch (family) {
    case PatternFamily::kCondition14: {
      for (std::size_t i = 0; i < q; ++i) p[i][i] = draw.integer(-3, 6);
      for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = i + 1; j < q; ++j) {
          p[i][j] = p[j][i] = (p[i][i] + p[j][j]) / 2 + draw.fraction(0, 4, 2);
        }
      }
      break;
    }
    case PatternFamily::kCondition16: {
      if (q < 2) throw InvalidInput("gen_pattern: condition16 needs q >= 2");
      for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = i; j < q; ++j) p[i][j] = p[j][i] = draw.integer(-2, 6);
      }
      const std::size_t r = draw.index(0, q - 2);
      const std::size_t s = draw.index(r + 1, q - 1);
      const Rational cross = std::min(p[r][r], p[s][s]) - draw.fraction(1, 4, 2);
      p[r][s] = p[s][r] = cross;
      break;
    }
    case PatternFamily::kAny: {
      for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = i; j < q; ++j) p[i][j] = p[j][i] = draw.integer(-2, 6);
      }
      break;
    }
  }
  return SymMatrix(p);
}

}  // namespace qapblock
