#ifndef AMVORTEX_EXACT_EXPRAT_HPP
#define AMVORTEX_EXACT_EXPRAT_HPP

#include <string>

#include "amvortex/exact/ratfunc.hpp"

namespace amvortex::exact {

/**
 * A single exponential term r(x) e^{kx} with r rational and k any integer.
 *
 * This is the shape of every function in the Darboux step: ODE coefficients
 * carry e^{-x}, solutions carry e^{kx} with k >= 0, and all of them are
 * closed under multiplication and differentiation. Addition is only defined
 * between terms sharing an exponent (or when one side is zero); mixing
 * exponents throws InconsistencyError.
 */
class ExpRat {
 public:
  ExpRat() = default;
  ExpRat(RatFunc coeff, int exponent = 0);  // NOLINT: implicit from RatFunc
  ExpRat(const Poly& num, const Poly& den, int exponent)
      : ExpRat(RatFunc(num, den), exponent) {}

  const RatFunc& coeff() const { return coeff_; }
  int exponent() const { return exponent_; }
  bool is_zero() const { return coeff_.is_zero(); }

  ExpRat derivative() const;
  /// (ln f)' = r'/r + k, a plain rational function. Throws for f = 0.
  RatFunc log_derivative() const;

  ExpRat operator-() const { return ExpRat(-coeff_, exponent_); }
  friend ExpRat operator+(const ExpRat& f, const ExpRat& g);
  friend ExpRat operator-(const ExpRat& f, const ExpRat& g) { return f + (-g); }
  friend ExpRat operator*(const ExpRat& f, const ExpRat& g);
  /// Throws std::domain_error when g is zero.
  friend ExpRat operator/(const ExpRat& f, const ExpRat& g);
  friend bool operator==(const ExpRat&, const ExpRat&) = default;

  std::string str() const;

 private:
  RatFunc coeff_;
  int exponent_ = 0;
};

}  // namespace amvortex::exact

#endif  // AMVORTEX_EXACT_EXPRAT_HPP
