#include "qapblock/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "qapblock/error.hpp"

namespace qapblock {

namespace {

bool is_integer_literal(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) : value_(numerator, denominator) {
  if (denominator == 0) throw InvalidInput("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw InvalidInput("malformed rational '" + std::string(text) + "'");
  }
  const std::string num_str(num.front() == '+' ? num.substr(1) : num);
  mpz_class n(num_str, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InvalidInput("rational '" + std::string(text) + "' has zero denominator");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const { return value_.get_str(10); }

std::int64_t Rational::floor_int64() const {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  if (!f.fits_slong_p()) throw InvalidInput("value " + str() + " does not fit in a 64-bit integer");
  return f.get_si();
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.value_ == 0) throw InvalidInput("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace qapblock
