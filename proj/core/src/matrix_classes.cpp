#include "qapblock/matrix_classes.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qapblock/error.hpp"
#include "qapblock/linear_feasibility.hpp"

namespace qapblock {

ProductSpec::ProductSpec(std::vector<Rational> alpha) : alpha_(std::move(alpha)) {
  if (alpha_.empty()) throw InvalidInput("product factor must be non-empty");
  for (std::size_t i = 0; i < alpha_.size(); ++i) {
    if (alpha_[i].sign() < 0) {
      throw InvalidInput("product factor alpha_" + std::to_string(i + 1) + " = " + alpha_[i].str() + " is negative");
    }
  }
}

bool ProductSpec::is_monotone() const { return std::is_sorted(alpha_.begin(), alpha_.end()); }

SumSpec::SumSpec(std::vector<Rational> alpha) : alpha_(std::move(alpha)) {
  if (alpha_.empty()) throw InvalidInput("sum vector must be non-empty");
}

BlockSpec::BlockSpec(SymMatrix pattern, std::vector<std::size_t> sizes)
    : pattern_(std::move(pattern)), sizes_(std::move(sizes)) {
  if (sizes_.size() != pattern_.size()) {
    throw InvalidInput("block pattern is " + std::to_string(pattern_.size()) + "x" + std::to_string(pattern_.size()) +
                       " but " + std::to_string(sizes_.size()) + " block sizes were given");
  }
  if (dimension() == 0) throw InvalidInput("block sizes sum to zero");
}

std::size_t BlockSpec::dimension() const { return std::accumulate(sizes_.begin(), sizes_.end(), std::size_t{0}); }

std::vector<std::size_t> BlockSpec::block_of() const {
  std::vector<std::size_t> out;
  out.reserve(dimension());
  for (std::size_t k = 0; k < sizes_.size(); ++k) out.insert(out.end(), sizes_[k], k);
  return out;
}

MultiCutSpec::MultiCutSpec(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw InvalidInput("multi-cut needs at least one block");
  for (std::size_t k = 0; k < sizes_.size(); ++k) {
    if (sizes_[k] == 0) throw InvalidInput("multi-cut block " + std::to_string(k + 1) + " is empty");
  }
}

std::size_t MultiCutSpec::dimension() const { return std::accumulate(sizes_.begin(), sizes_.end(), std::size_t{0}); }

bool MultiCutSpec::normal_form() const { return std::is_sorted(sizes_.begin(), sizes_.end()); }

BlockSpec MultiCutSpec::as_block_spec() const {
  const auto pattern = SymMatrix::generate(sizes_.size(), [](std::size_t k, std::size_t l) {
    return Rational(k == l ? 0 : 1);
  });
  return BlockSpec(pattern, sizes_);
}

OneLambdaOneSpec::OneLambdaOneSpec(Rational lambda, std::size_t r, std::size_t s, std::size_t t)
    : lambda_(std::move(lambda)), r_(r), s_(s), t_(t) {
  if (lambda_.sign() <= 0) throw InvalidInput("lambda must be positive, got " + lambda_.str());
  if (r_ + s_ + t_ == 0) throw InvalidInput("1-lambda-1 block sizes sum to zero");
}

BlockSpec OneLambdaOneSpec::as_block_spec() const { return BlockSpec(one_lambda_one_pattern(lambda_), {r_, s_, t_}); }

SymMatrix one_lambda_one_pattern(const Rational& lambda) {
  return SymMatrix({{0, 0, 0}, {0, 0, 1}, {0, 1, lambda}});
}

SymMatrix expand(const ProductSpec& spec) {
  const auto& a = spec.alpha();
  return SymMatrix::generate(a.size(), [&](std::size_t i, std::size_t j) { return a[i] * a[j]; });
}

SymMatrix expand(const SumSpec& spec) {
  const auto& a = spec.alpha();
  return SymMatrix::generate(a.size(), [&](std::size_t i, std::size_t j) { return a[i] + a[j]; });
}

SymMatrix expand(const BlockSpec& spec) {
  const auto owner = spec.block_of();
  return SymMatrix::generate(owner.size(),
                             [&](std::size_t i, std::size_t j) { return spec.pattern()(owner[i], owner[j]); });
}

SymMatrix expand(const MultiCutSpec& spec) { return expand(spec.as_block_spec()); }

SymMatrix expand(const OneLambdaOneSpec& spec) { return expand(spec.as_block_spec()); }

bool is_monotone(const SymMatrix& a) {
  const std::size_t n = a.size();
  // Symmetry makes the column condition equivalent to the row condition.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) {
      if (a(i, j) > a(i, j + 1)) return false;
    }
  }
  return true;
}

bool is_anti_monge(const SymMatrix& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j).sign() < 0) return false;
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) {
      if (a(i, j) + a(i + 1, j + 1) < a(i, j + 1) + a(i + 1, j)) return false;
    }
  }
  return true;
}

AntiMongeSplit split_anti_monge(const SymMatrix& a) {
  if (!is_anti_monge(a)) throw ClassificationError("split_anti_monge: matrix is not anti-Monge");
  const std::size_t n = a.size();
  // Anti-Monge rows have differences a_{i+1,j} - a_{i,j} non-decreasing in j, so column 1 binds.
  std::vector<Rational> alpha(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    alpha[i + 1] = alpha[i] + std::min(Rational(0), a(i + 1, 0) - a(i, 0));
  }
  SumSpec sum(std::move(alpha));
  SymMatrix monotone = a - expand(sum);
  return AntiMongeSplit{std::move(monotone), std::move(sum)};
}

std::optional<std::vector<Rational>> recognize_product(const SymMatrix& a) {
  const std::size_t n = a.size();
  std::size_t pivot = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i).sign() > 0) {
      pivot = i;
      break;
    }
  }
  if (pivot == n) {
    // alpha_i^2 = 0 for all i forces the zero matrix.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (a(i, j).sign() != 0) return std::nullopt;
      }
    }
    return std::vector<Rational>(n);
  }
  std::vector<Rational> beta(n);
  for (std::size_t i = 0; i < n; ++i) {
    beta[i] = a(i, pivot);
    if (beta[i].sign() < 0) return std::nullopt;
  }
  const Rational& scale = a(pivot, pivot);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (a(i, j) * scale != beta[i] * beta[j]) return std::nullopt;
    }
  }
  return beta;
}

std::optional<SumSpec> recognize_sum(const SymMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Rational> alpha(n);
  for (std::size_t i = 0; i < n; ++i) alpha[i] = a(i, i) / 2;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a(i, j) != alpha[i] + alpha[j]) return std::nullopt;
    }
  }
  return SumSpec(std::move(alpha));
}

BlockSpec recognize_block_structure(const SymMatrix& b) {
  const std::size_t n = b.size();
  auto same_row = [&](std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < n; ++j) {
      if (b(i, j) != b(k, j)) return false;
    }
    return true;
  };
  // Consecutive indices share a block exactly when their rows coincide.
  std::vector<std::size_t> starts{0};
  for (std::size_t i = 1; i < n; ++i) {
    if (!same_row(i - 1, i)) starts.push_back(i);
  }
  std::vector<std::size_t> sizes;
  for (std::size_t k = 0; k < starts.size(); ++k) {
    const std::size_t end = k + 1 < starts.size() ? starts[k + 1] : n;
    sizes.push_back(end - starts[k]);
  }
  auto pattern = SymMatrix::generate(starts.size(), [&](std::size_t k, std::size_t l) { return b(starts[k], starts[l]); });
  return BlockSpec(std::move(pattern), std::move(sizes));
}

std::optional<MultiCutRecognition> recognize_multicut(const SymMatrix& b) {
  const BlockSpec blocks = recognize_block_structure(b);
  const auto& p = blocks.pattern();
  for (std::size_t k = 0; k < p.size(); ++k) {
    for (std::size_t l = 0; l < p.size(); ++l) {
      if (p(k, l) != Rational(k == l ? 0 : 1)) return std::nullopt;
    }
  }
  MultiCutSpec spec(blocks.sizes());
  const bool normal = spec.normal_form();
  return MultiCutRecognition{std::move(spec), normal};
}

std::optional<OneLambdaOneSpec> recognize_one_lambda_one(const SymMatrix& a, const Rational& lambda) {
  if (lambda.sign() <= 0) throw InvalidInput("lambda must be positive");
  const std::size_t n = a.size();
  std::size_t t = 0;
  while (t < n && a(n - 1 - t, n - 1 - t) == lambda) ++t;
  std::size_t s = 0;
  if (t > 0) {
    while (s + t < n && a(n - 1 - t - s, n - 1).sign() != 0) ++s;
  }
  OneLambdaOneSpec spec(lambda, n - s - t, s, t);
  if (expand(spec) != a) return std::nullopt;
  return spec;
}

SymMatrix gmam_compose(std::size_t n, const Rational& lambda, const GmamCoefficients& coefficients) {
  SymMatrix total = SymMatrix::zero(n);
  for (const auto& [triple, c] : coefficients) {
    if (triple[0] + triple[1] + triple[2] != n) throw InvalidInput("generator sizes do not sum to n");
    total = total + expand(OneLambdaOneSpec(lambda, triple[0], triple[1], triple[2])).scaled(c);
  }
  return total;
}

std::optional<GmamCoefficients> gmam_decompose(const SymMatrix& a, const Rational& lambda) {
  if (lambda.sign() <= 0) throw InvalidInput("lambda must be positive, got " + lambda.str());
  const std::size_t n = a.size();

  // Generators with t = 0 are the zero matrix and never contribute.
  std::vector<BlockTriple> triples;
  std::vector<std::vector<Rational>> columns;
  for (std::size_t t = 1; t <= n; ++t) {
    for (std::size_t s = 0; s + t <= n; ++s) {
      const BlockTriple triple{n - s - t, s, t};
      const SymMatrix g = expand(OneLambdaOneSpec(lambda, triple[0], triple[1], triple[2]));
      std::vector<Rational> column;
      column.reserve(n * (n + 1) / 2);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) column.push_back(g(i, j));
      }
      triples.push_back(triple);
      columns.push_back(std::move(column));
    }
  }
  std::vector<Rational> rhs;
  rhs.reserve(n * (n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) rhs.push_back(a(i, j));
  }

  const auto solution = solve_nonnegative_system(columns, rhs);
  if (!solution) return std::nullopt;
  GmamCoefficients out;
  for (std::size_t k = 0; k < triples.size(); ++k) {
    if ((*solution)[k].sign() > 0) out.emplace(triples[k], (*solution)[k]);
  }
  if (gmam_compose(n, lambda, out) != a) throw std::logic_error("gmam_decompose: recomposition mismatch");
  return out;
}

}  // namespace qapblock
