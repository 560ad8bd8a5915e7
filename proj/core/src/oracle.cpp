#include <algorithm>
#include <atomic>
#include <optional>
#include <string>
#include <thread>

#include "qapblock/error.hpp"
#include "qapblock/qap.hpp"

namespace qapblock {

std::vector<std::size_t> interchangeable_classes(const SymMatrix& b) {
  const std::size_t n = b.size();
  auto swappable = [&](std::size_t i, std::size_t j) {
    if (b(i, i) != b(j, j)) return false;
    for (std::size_t k = 0; k < n; ++k) {
      if (k != i && k != j && b(i, k) != b(j, k)) return false;
    }
    return true;
  };
  // Swappability is an equivalence relation (transpositions fixing b generate a group),
  // so a greedy sweep yields the classes.
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(n, kUnset);
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (label[i] != kUnset) continue;
    label[i] = next;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (label[j] == kUnset && swappable(i, j)) label[j] = next;
    }
    ++next;
  }
  return label;
}

namespace {

// Depth-first enumeration in lexicographic order with incremental cost.
// Within one class of interchangeable B positions the assigned A indices must
// increase, which keeps exactly the lexicographically smallest member of each
// equivalence class.
class Enumerator {
 public:
  Enumerator(const SymMatrix& a, const SymMatrix& b, const std::vector<std::size_t>& classes)
      : a_(a), b_(b), n_(a.size()), classes_(classes), perm_(n_), used_(n_, false), cost_(n_ + 1) {
    const std::size_t class_count = *std::max_element(classes_.begin(), classes_.end()) + 1;
    last_.assign(class_count, -1);
    remaining_.assign(class_count, 0);
    for (auto c : classes_) ++remaining_[c];
  }

  // Explores every completion with position 0 fixed to `first`.
  void run_branch(std::size_t first) {
    if (!admissible(0, first)) return;
    push(0, first);
    descend(1);
    pop(0, first);
  }

  bool has_result() const { return best_.has_value(); }
  const mpq_class& best_value() const { return *best_; }
  const std::vector<std::size_t>& best_perm() const { return best_perm_; }

 private:
  bool admissible(std::size_t pos, std::size_t v) const {
    if (used_[v]) return false;
    const std::size_t c = classes_[pos];
    if (last_[c] >= 0 && static_cast<long>(v) <= last_[c]) return false;
    if (remaining_[c] <= 1) return true;
    std::size_t larger_free = 0;
    for (std::size_t w = v + 1; w < n_; ++w) larger_free += used_[w] ? 0 : 1;
    return larger_free + 1 >= remaining_[c];
  }

  void push(std::size_t pos, std::size_t v) {
    mpq_class delta = a_(v, v).get() * b_(pos, pos).get();
    mpq_class off;
    for (std::size_t j = 0; j < pos; ++j) {
      const auto& bij = b_(pos, j);
      if (bij.sign() != 0) off += a_(v, perm_[j]).get() * bij.get();
    }
    cost_[pos + 1] = cost_[pos] + delta + 2 * off;
    perm_[pos] = v;
    used_[v] = true;
    saved_last_.push_back(last_[classes_[pos]]);
    last_[classes_[pos]] = static_cast<long>(v);
    --remaining_[classes_[pos]];
  }

  void pop(std::size_t pos, std::size_t v) {
    used_[v] = false;
    last_[classes_[pos]] = saved_last_.back();
    saved_last_.pop_back();
    ++remaining_[classes_[pos]];
  }

  void descend(std::size_t pos) {
    if (pos == n_) {
      if (!best_ || cost_[n_] < *best_) {
        best_ = cost_[n_];
        best_perm_ = perm_;
      }
      return;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (!admissible(pos, v)) continue;
      push(pos, v);
      descend(pos + 1);
      pop(pos, v);
    }
  }

  const SymMatrix& a_;
  const SymMatrix& b_;
  std::size_t n_;
  const std::vector<std::size_t>& classes_;
  std::vector<std::size_t> perm_;
  std::vector<bool> used_;
  std::vector<long> last_;
  std::vector<long> saved_last_;
  std::vector<std::size_t> remaining_;
  std::vector<mpq_class> cost_;
  std::optional<mpq_class> best_;
  std::vector<std::size_t> best_perm_;
};

}  // namespace

OracleResult brute_force_optimum(const QapInstance& inst, const OracleOptions& options) {
  const std::size_t n = inst.size();
  if (n > options.max_n) {
    throw SizeLimitError("brute-force oracle refused: n = " + std::to_string(n) + " exceeds cap " +
                         std::to_string(options.max_n));
  }
  std::vector<std::size_t> classes(n);
  if (options.exploit_symmetry) {
    classes = interchangeable_classes(inst.b());
  } else {
    for (std::size_t i = 0; i < n; ++i) classes[i] = i;
  }

  unsigned threads = options.threads;
  if (threads == 0) threads = n >= 9 ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
  threads = std::min<unsigned>(threads, static_cast<unsigned>(n));

  std::vector<Enumerator> workers;
  workers.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) workers.emplace_back(inst.a(), inst.b(), classes);

  if (threads == 1) {
    for (std::size_t v = 0; v < n; ++v) workers[0].run_branch(v);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t v = next++; v < n; v = next++) workers[w].run_branch(v);
      });
    }
  }

  // Deterministic merge: minimum by (value, lexicographic permutation).
  const Enumerator* winner = nullptr;
  for (const auto& w : workers) {
    if (!w.has_result()) continue;
    if (!winner || w.best_value() < winner->best_value() ||
        (w.best_value() == winner->best_value() && w.best_perm() < winner->best_perm())) {
      winner = &w;
    }
  }
  return OracleResult{Rational(winner->best_value()), Permutation(winner->best_perm())};
}

OracleResult brute_force_optimum(const QapInstance& inst, std::size_t max_n) {
  OracleOptions options;
  options.max_n = max_n;
  return brute_force_optimum(inst, options);
}

}  // namespace qapblock
