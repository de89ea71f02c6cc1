#include "amvortex/exact/bigrat.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "amvortex/error.hpp"

namespace amvortex::exact {

BigRat::BigRat(long num, long den) : value_(num, den) {
  if (den == 0) throw std::domain_error("BigRat: zero denominator");
  value_.canonicalize();
}

BigRat::BigRat(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw std::domain_error("BigRat: zero denominator");
  value_.canonicalize();
}

BigRat BigRat::parse(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw InputError("empty rational literal");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw InputError("malformed rational literal: '" + s + "'");
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw InputError("zero denominator in rational literal: '" + s + "'");
  return BigRat(mpq_class(n, d));
}

long double BigRat::to_long_double() const {
  if (is_zero()) return 0.0L;
  mpz_class num = abs(value_.get_num());
  mpz_class den = value_.get_den();
  // Scale so the integer quotient lands in [2^62, 2^64): exact top 64 bits.
  const long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
                 static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  const long shift = 63 - e;
  mpz_class q;
  if (shift >= 0) {
    mpz_class scaled;
    mpz_mul_2exp(scaled.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    mpz_tdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  } else {
    mpz_class scaled;
    mpz_mul_2exp(scaled.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
    mpz_tdiv_q(q.get_mpz_t(), num.get_mpz_t(), scaled.get_mpz_t());
  }
  const long double mag =
      std::ldexp(static_cast<long double>(mpz_get_ui(q.get_mpz_t())), static_cast<int>(-shift));
  return sign() < 0 ? -mag : mag;
}

BigRat& BigRat::operator+=(const BigRat& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRat& BigRat::operator-=(const BigRat& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRat& BigRat::operator*=(const BigRat& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRat& BigRat::operator/=(const BigRat& rhs) {
  if (rhs.is_zero()) throw std::domain_error("BigRat: division by zero");
  value_ /= rhs.value_;
  return *this;
}

BigRat abs(const BigRat& r) { return r.sign() < 0 ? -r : r; }

BigRat pow(const BigRat& r, unsigned k) {
  BigRat out(1);
  for (unsigned i = 0; i < k; ++i) out *= r;
  return out;
}

BigRat factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return BigRat(f);
}

std::ostream& operator<<(std::ostream& os, const BigRat& r) { return os << r.str(); }

}  // namespace amvortex::exact
