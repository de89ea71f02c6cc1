#ifndef AMVORTEX_EXACT_BIGRAT_HPP
#define AMVORTEX_EXACT_BIGRAT_HPP

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace amvortex::exact {

/**
 * Arbitrary-precision rational number, always stored in lowest terms with a
 * positive denominator (zero is 0/1).
 *
 * Backed by GMP's mpq_class; every constructor canonicalizes so equality is
 * plain representation equality.
 */
class BigRat {
 public:
  BigRat() = default;
  BigRat(long value) : value_(value) {}  // NOLINT: implicit on purpose
  BigRat(long num, long den);
  explicit BigRat(mpq_class value);
  explicit BigRat(const mpz_class& integer) : value_(integer) {}

  /// Parses "num/den" or an integer literal. Throws InputError.
  static BigRat parse(std::string_view text);

  /// "num/den", or just "num" when the denominator is 1.
  std::string str() const { return value_.get_str(); }

  const mpq_class& value() const { return value_; }
  mpz_class num() const { return value_.get_num(); }
  mpz_class den() const { return value_.get_den(); }

  double to_double() const { return value_.get_d(); }
  long double to_long_double() const;
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  BigRat operator-() const { return BigRat(mpq_class(-value_)); }
  BigRat& operator+=(const BigRat& rhs);
  BigRat& operator-=(const BigRat& rhs);
  BigRat& operator*=(const BigRat& rhs);
  /// Throws std::domain_error on division by zero.
  BigRat& operator/=(const BigRat& rhs);

  friend BigRat operator+(BigRat lhs, const BigRat& rhs) { return lhs += rhs; }
  friend BigRat operator-(BigRat lhs, const BigRat& rhs) { return lhs -= rhs; }
  friend BigRat operator*(BigRat lhs, const BigRat& rhs) { return lhs *= rhs; }
  friend BigRat operator/(BigRat lhs, const BigRat& rhs) { return lhs /= rhs; }

  friend bool operator==(const BigRat& lhs, const BigRat& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const BigRat& lhs, const BigRat& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

BigRat abs(const BigRat& r);
/// r^k for k >= 0.
BigRat pow(const BigRat& r, unsigned k);
BigRat factorial(unsigned n);

std::ostream& operator<<(std::ostream& os, const BigRat& r);

}  // namespace amvortex::exact

#endif  // AMVORTEX_EXACT_BIGRAT_HPP
