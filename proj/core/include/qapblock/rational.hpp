#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace qapblock {

/// Exact rational scalar in canonical form (positive denominator, reduced).
///
/// Thin value wrapper over GMP's mpq_class. Every arithmetic result is
/// canonical, so equality is structural.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  /// Parses "p/q", "p", "-p/q". Rejects zero denominators and stray characters.
  static Rational parse(std::string_view text);

  std::string str() const;
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Largest integer not above this value; throws if it does not fit in int64.
  std::int64_t floor_int64() const;

  const mpq_class& get() const { return value_; }

  Rational& operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Rational& operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  Rational& operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

Rational abs(const Rational& x);
std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace qapblock
