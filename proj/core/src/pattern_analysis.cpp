#include "qapblock/pattern_analysis.hpp"

#include <stdexcept>
#include <string>

#include "qapblock/error.hpp"

namespace qapblock {

IntervalMinimum quadratic_on_interval(const Rational& a2, const Rational& a1, const Rational& a0, const Rational& lo,
                                      const Rational& hi) {
  if (lo > hi) throw InvalidInput("quadratic_on_interval: empty interval [" + lo.str() + ", " + hi.str() + "]");
  auto f = [&](const Rational& x) { return (a2 * x + a1) * x + a0; };

  if (lo == hi) return IntervalMinimum{lo, f(lo), false, true};

  if (a2.sign() > 0) {
    const Rational vertex = -a1 / (2 * a2);
    if (lo < vertex && vertex < hi) return IntervalMinimum{vertex, f(vertex), true, true};
    const Rational& at = vertex <= lo ? lo : hi;
    return IntervalMinimum{at, f(at), false, true};
  }

  // Concave or linear: the minimum sits at an endpoint.
  const Rational f_lo = f(lo);
  const Rational f_hi = f(hi);
  if (f_lo < f_hi) return IntervalMinimum{lo, f_lo, false, true};
  if (f_hi < f_lo) return IntervalMinimum{hi, f_hi, false, true};
  return IntervalMinimum{lo, f_lo, false, false};
}

Ensemble::Ensemble(std::size_t q, std::size_t r, std::size_t s, Rational gamma, std::vector<Rational> fixed)
    : r_(r), s_(s), gamma_(std::move(gamma)), fixed_(std::move(fixed)) {
  if (fixed_.size() != q) throw InvalidInput("ensemble: expected " + std::to_string(q) + " fixed values");
  if (!(r < s && s < q)) throw InvalidInput("ensemble: need 1 <= r < s <= q");
  if (gamma_.sign() < 0 || gamma_ > 1) throw InvalidInput("ensemble: gamma must lie in [0, 1]");
  fixed_[r_] = 0;
  fixed_[s_] = 0;
  Rational total = gamma_;
  for (std::size_t i = 0; i < q; ++i) {
    if (fixed_[i].sign() < 0 || fixed_[i] > 1) {
      throw InvalidInput("ensemble: fixed value " + std::to_string(i + 1) + " outside [0, 1]");
    }
    total += fixed_[i];
  }
  if (total != 1) throw InvalidInput("ensemble infeasible: fixed values plus gamma sum to " + total.str());
}

VeryBadEnsemble::VeryBadEnsemble(std::size_t r, std::size_t s, std::vector<Rational> lower,
                                 std::vector<Rational> upper)
    : r_(r), s_(s), lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.size() != upper_.size()) throw InvalidInput("very bad ensemble: bound vectors differ in length");
  if (!(r < s && s < lower_.size())) throw InvalidInput("very bad ensemble: need 1 <= r < s <= q");
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (lower_[i].sign() < 0 || !(lower_[i] < upper_[i]) || upper_[i] > 1) {
      throw InvalidInput("very bad ensemble: need 0 <= l_i < u_i <= 1 at index " + std::to_string(i + 1));
    }
  }
}

Rational quadratic_form(const SymMatrix& p, const std::vector<Rational>& x) {
  if (x.size() != p.size()) throw InvalidInput("quadratic_form: vector length does not match the pattern");
  Rational total;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) total += p(i, j) * x[i] * x[j];
  }
  return total;
}

QpSolution qp1_minimize(const SymMatrix& pattern, const Ensemble& e) {
  const std::size_t q = pattern.size();
  if (e.q() != q) throw InvalidInput("qp1_minimize: ensemble and pattern differ in size");
  const std::size_t r = e.r(), s = e.s();
  const Rational& gamma = e.gamma();
  const auto& fixed = e.fixed();

  // With x_s = gamma - x_r and the remaining coordinates frozen:
  //   g(x_r) = (p_rr + p_ss - 2 p_rs) x_r^2 + c1 x_r + c0.
  Rational row_r, row_s, frozen;
  for (std::size_t k = 0; k < q; ++k) {
    if (k == r || k == s) continue;
    row_r += pattern(r, k) * fixed[k];
    row_s += pattern(s, k) * fixed[k];
    for (std::size_t l = 0; l < q; ++l) {
      if (l != r && l != s) frozen += pattern(k, l) * fixed[k] * fixed[l];
    }
  }
  const Rational a2 = pattern(r, r) + pattern(s, s) - 2 * pattern(r, s);
  const Rational c1 = 2 * gamma * (pattern(r, s) - pattern(s, s)) + 2 * row_r - 2 * row_s;
  const Rational c0 = pattern(s, s) * gamma * gamma + 2 * gamma * row_s + frozen;

  const IntervalMinimum best = quadratic_on_interval(a2, c1, c0, Rational(0), gamma);
  QpSolution out;
  out.x = fixed;
  out.x[r] = best.argmin;
  out.x[s] = gamma - best.argmin;
  out.value = best.min;
  out.unique = best.unique;
  out.interior_r_s = out.x[r].sign() > 0 && out.x[r] < gamma && out.x[s].sign() > 0 && out.x[s] < gamma;
  if (quadratic_form(pattern, out.x) != out.value) throw std::logic_error("qp1_minimize: objective mismatch");
  return out;
}

bool is_bad(const SymMatrix& pattern, const Ensemble& ensemble) {
  const QpSolution sol = qp1_minimize(pattern, ensemble);
  return sol.unique && sol.interior_r_s;
}

bool satisfies_condition16(const SymMatrix& pattern, std::size_t r, std::size_t s) {
  return pattern(r, r) > pattern(r, s) && pattern(s, s) > pattern(r, s);
}

bool satisfies_condition14(const SymMatrix& pattern) {
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    for (std::size_t j = i + 1; j < pattern.size(); ++j) {
      if (pattern(i, i) + pattern(j, j) > 2 * pattern(i, j)) return false;
    }
  }
  return true;
}

QpSolution qp2_minimize_2x2(const SymMatrix& pattern, std::size_t r, std::size_t s) {
  const std::size_t q = pattern.size();
  if (!(r < s && s < q)) throw InvalidInput("qp2_minimize_2x2: need 1 <= r < s <= q");
  if (!satisfies_condition16(pattern, r, s)) {
    throw ClassificationError("qp2_minimize_2x2: need p_rr > p_rs and p_ss > p_rs at (" + std::to_string(r + 1) +
                              "," + std::to_string(s + 1) + ")");
  }
  const Rational denom = pattern(r, r) + pattern(s, s) - 2 * pattern(r, s);
  QpSolution out;
  out.x.assign(q, Rational(0));
  out.x[r] = (pattern(s, s) - pattern(r, s)) / denom;
  out.x[s] = (pattern(r, r) - pattern(r, s)) / denom;
  out.value = quadratic_form(pattern, out.x);
  out.unique = true;
  out.interior_r_s = out.x[r].sign() > 0 && out.x[r] < 1 && out.x[s].sign() > 0 && out.x[s] < 1;
  if (!out.interior_r_s || out.x[r] + out.x[s] != 1) {
    throw std::logic_error("qp2_minimize_2x2: minimizer is not strictly inside the unit bounds");
  }
  return out;
}

PatternVerdict classify_pattern(const SymMatrix& pattern) {
  const std::size_t q = pattern.size();
  const bool easy = satisfies_condition14(pattern);
  for (std::size_t r = 0; r < q; ++r) {
    for (std::size_t s = r + 1; s < q; ++s) {
      if (!satisfies_condition16(pattern, r, s)) continue;
      if (easy) throw std::logic_error("classify_pattern: condition14 and condition16 both hold");
      // The certificate lives on the 2x2 subpattern {r, s}; the other blocks are left empty.
      VeryBadEnsemble witness(r, s, std::vector<Rational>(q, Rational(0)), std::vector<Rational>(q, Rational(1)));
      return NPHardByCondition16{std::move(witness), qp2_minimize_2x2(pattern, r, s)};
    }
  }
  if (easy) return PolynomialByCondition14{};
  return UnknownComplexity{};
}

TwoByTwoVerdict classify_2x2(const SymMatrix& pattern) {
  if (pattern.size() != 2) throw InvalidInput("classify_2x2 needs a 2x2 pattern");
  return satisfies_condition16(pattern, 0, 1) ? TwoByTwoVerdict::kNPHard : TwoByTwoVerdict::kPolynomial;
}

}  // namespace qapblock
