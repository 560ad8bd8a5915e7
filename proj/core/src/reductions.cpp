#include "qapblock/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "qapblock/error.hpp"

namespace qapblock {

PartitionInstance::PartitionInstance(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw InvalidInput("partition instance is empty");
  Rational total;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (values_[k].sign() <= 0) {
      throw InvalidInput("partition value v_" + std::to_string(k + 1) + " = " + values_[k].str() + " is not positive");
    }
    total += values_[k];
  }
  if (total != 2) throw InvalidInput("partition values sum to " + total.str() + ", expected 2");
}

QapInstance PartitionReduction::instance() const { return QapInstance(expand(ProductSpec(alpha)), expand(blocks)); }

namespace {

mpz_class lcm_of_denominators(const std::vector<Rational>& xs) {
  mpz_class out = 1;
  for (const auto& x : xs) {
    mpz_class d = x.denominator();
    mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), d.get_mpz_t());
  }
  return out;
}

std::size_t to_size(const Rational& x, const char* what) {
  if (!x.is_integer() || x.sign() < 0) throw std::logic_error(std::string("reduce_partition: ") + what + " is not a count");
  return static_cast<std::size_t>(x.floor_int64());
}

}  // namespace

PartitionReduction reduce_partition(const SymMatrix& pattern, const PartitionInstance& partition) {
  const PatternVerdict verdict = classify_pattern(pattern);
  const auto* hard = std::get_if<NPHardByCondition16>(&verdict);
  if (!hard) {
    throw ClassificationError("reduce_partition: pattern has no pair r < s with p_rr > p_rs and p_ss > p_rs");
  }
  const std::size_t q = pattern.size();
  const VeryBadEnsemble& ens = hard->witness;
  const auto& x = hard->minimizer.x;
  const std::size_t r = ens.r(), s = ens.s();

  // Coordinates with x*_i = 0 are dropped (their blocks stay empty).
  std::vector<std::size_t> support;
  std::vector<Rational> support_values;
  for (std::size_t i = 0; i < q; ++i) {
    if (x[i].sign() > 0) {
      support.push_back(i);
      support_values.push_back(x[i]);
    }
  }

  Rational bound = 0;
  for (auto i : support) {
    bound = std::max(bound, Rational(2) / (ens.upper()[i] - x[i]));
    bound = std::max(bound, Rational(1) / x[i]);
  }
  for (auto j : {r, s}) bound = std::max(bound, Rational(1) / (x[j] - ens.lower()[j]));

  // Smallest multiple of the common denominator strictly above every bound.
  const mpz_class lcd = lcm_of_denominators(support_values);
  const Rational step{mpq_class(lcd)};
  const Rational k = step * Rational((bound / step).floor_int64() + 1);

  const std::size_t m = partition.size();
  const Rational l = Rational(static_cast<long>(m)) * k;
  const std::size_t n = to_size(l - 2, "n");

  std::vector<std::size_t> sizes(q, 0);
  for (auto i : support) {
    Rational size = x[i] * l;
    if (i == r || i == s) size -= 1;
    sizes[i] = to_size(size, "block size");
  }

  std::vector<Rational> alpha;
  alpha.reserve(n);
  for (const auto& v : partition.values()) alpha.push_back((1 + v) / l);
  if (n < m) throw std::logic_error("reduce_partition: fewer positions than partition-values");
  alpha.insert(alpha.end(), n - m, Rational(1) / l);

  PartitionReduction red{pattern,
                         partition,
                         r,
                         s,
                         k.floor_int64(),
                         l.floor_int64(),
                         n,
                         std::move(alpha),
                         BlockSpec(pattern, sizes),
                         quadratic_form(pattern, x),
                         ens,
                         hard->minimizer};

  // Construction invariants.
  const Rational alpha_total = std::accumulate(red.alpha.begin(), red.alpha.end(), Rational(0));
  if (alpha_total != 1) throw std::logic_error("reduce_partition: alpha values do not sum to 1");
  if (red.blocks.dimension() != n) throw std::logic_error("reduce_partition: block sizes do not sum to n");
  for (auto i : support) {
    if (!(x[i] * l > Rational(static_cast<long>(m)))) throw std::logic_error("reduce_partition: x*_i L <= m");
  }
  return red;
}

CertificatePermutation yes_certificate_to_permutation(const PartitionReduction& red,
                                                      const std::set<std::size_t>& subset) {
  const std::size_t m = red.partition.size();
  Rational subset_sum;
  for (auto k : subset) {
    if (k >= m) throw InvalidInput("certificate index " + std::to_string(k + 1) + " out of range");
    subset_sum += red.partition.values()[k];
  }
  if (subset_sum != 1) throw InvalidInput("certificate subset sums to " + subset_sum.str() + ", expected 1");

  const auto& sizes = red.blocks.sizes();
  std::vector<std::vector<std::size_t>> members(sizes.size());
  for (std::size_t k = 0; k < m; ++k) members[subset.count(k) ? red.r : red.s].push_back(k);

  std::size_t next_dummy = m;
  std::vector<std::size_t> image;
  image.reserve(red.n);
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    if (members[b].size() > sizes[b]) throw std::logic_error("certificate: block overfilled by partition-values");
    for (auto k : members[b]) image.push_back(k);
    for (std::size_t d = members[b].size(); d < sizes[b]; ++d) image.push_back(next_dummy++);
  }
  if (next_dummy != red.n) throw std::logic_error("certificate: dummy count mismatch");

  Permutation pi(std::move(image));
  Rational value = evaluate(red.instance(), pi);
  return CertificatePermutation{std::move(pi), std::move(value)};
}

PartitionSearchResult partition_oracle_search(const PartitionReduction& red) {
  const std::size_t m = red.partition.size();
  const auto& sizes = red.blocks.sizes();
  const std::size_t q = sizes.size();
  if (m > kPartitionSearchMaxValues || q > kPartitionSearchMaxBlocks) {
    throw SizeLimitError("partition_oracle_search refused: m = " + std::to_string(m) + ", q = " + std::to_string(q) +
                         " (caps " + std::to_string(kPartitionSearchMaxValues) + ", " +
                         std::to_string(kPartitionSearchMaxBlocks) + ")");
  }
  const Rational dummy = Rational(1) / Rational(red.l);

  std::vector<std::size_t> place(m, 0);
  std::optional<Rational> best;
  for (;;) {
    std::vector<std::size_t> count(q, 0);
    std::vector<Rational> y(q);
    for (std::size_t k = 0; k < m; ++k) {
      ++count[place[k]];
      y[place[k]] += red.alpha[k];
    }
    bool fits = true;
    for (std::size_t b = 0; b < q && fits; ++b) {
      if (count[b] > sizes[b]) {
        fits = false;
      } else {
        y[b] += dummy * Rational(sizes[b] - count[b]);
      }
    }
    if (fits) {
      Rational value = quadratic_form(red.pattern, y);
      if (!best || value < *best) best = std::move(value);
    }
    // Next placement in base-q counting order.
    std::size_t digit = 0;
    while (digit < m && ++place[digit] == q) place[digit++] = 0;
    if (digit == m) break;
  }
  if (!best) throw std::logic_error("partition_oracle_search: no placement fits the blocks");
  const bool below = *best <= red.threshold;
  return PartitionSearchResult{std::move(*best), below};
}

GraphBisectionInstance::GraphBisectionInstance(std::size_t vertices,
                                               std::vector<std::pair<std::size_t, std::size_t>> edges,
                                               std::int64_t t)
    : vertices_(vertices), t_(t) {
  if (vertices_ == 0 || vertices_ % 2 != 0) {
    throw InvalidInput("graph bisection needs a positive even number of vertices, got " + std::to_string(vertices));
  }
  if (t_ < 0) throw InvalidInput("graph bisection bound t must be non-negative");
  for (auto [u, v] : edges) {
    if (u >= vertices_ || v >= vertices_) throw InvalidInput("edge endpoint out of range");
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u + 1));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

BisectionReduction reduce_bisection(const GraphBisectionInstance& g) {
  const std::size_t n = g.vertices();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(2 * (i + 1) + 2 * (j + 1));
  }
  for (auto [u, v] : g.edges()) {
    a[u][v] += 1;
    a[v][u] += 1;
  }
  SymMatrix am(a);
  if (!is_monotone(am)) throw std::logic_error("reduce_bisection: constructed matrix is not monotone");
  const Rational nn(static_cast<long>(n));
  Rational threshold = nn * nn * (nn + 1) + 2 * Rational(g.bound());
  return BisectionReduction{QapInstance(std::move(am), expand(MultiCutSpec({n / 2, n / 2}))), std::move(threshold)};
}

}  // namespace qapblock
