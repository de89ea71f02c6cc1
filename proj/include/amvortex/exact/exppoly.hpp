#ifndef AMVORTEX_EXACT_EXPPOLY_HPP
#define AMVORTEX_EXACT_EXPPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "amvortex/exact/poly.hpp"

namespace amvortex::exact {

/**
 * Exponential polynomial sum_k p_k(x) e^{kx} with integer k >= 0.
 *
 * Equivalently a polynomial in y = e^x with coefficients in Q[x]; that view
 * is what makes exact division (and hence fraction-free elimination) work.
 * Keys never map to the zero polynomial.
 */
class ExpPoly {
 public:
  using Terms = std::map<int, Poly>;

  ExpPoly() = default;
  ExpPoly(const Poly& p, int exponent = 0);  // NOLINT: implicit from Poly
  explicit ExpPoly(Terms terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of e^{kx} (zero polynomial when absent).
  Poly coeff(int exponent) const;
  /// (exponent, polynomial) when exactly one key is present.
  std::optional<std::pair<int, Poly>> single_term() const;
  int min_exponent() const;
  int max_exponent() const;

  ExpPoly derivative() const;
  /// Multiplies by e^{kx}; the result must keep nonnegative exponents.
  ExpPoly times_exp(int k) const;

  ExpPoly operator-() const;
  ExpPoly& operator+=(const ExpPoly& rhs);
  ExpPoly& operator-=(const ExpPoly& rhs);
  friend ExpPoly operator+(ExpPoly lhs, const ExpPoly& rhs) { return lhs += rhs; }
  friend ExpPoly operator-(ExpPoly lhs, const ExpPoly& rhs) { return lhs -= rhs; }
  friend ExpPoly operator*(const ExpPoly& lhs, const ExpPoly& rhs);
  friend ExpPoly operator*(ExpPoly lhs, const BigRat& c);
  friend bool operator==(const ExpPoly&, const ExpPoly&) = default;

  std::string str() const;

 private:
  void add_term(int exponent, const Poly& p);
  Terms terms_;
};

ExpPoly exp_poly_derive(const ExpPoly& e);

/// Exact quotient in Q[x][e^x]; throws InconsistencyError when the divisor
/// does not divide the dividend.
ExpPoly divide_exact(const ExpPoly& dividend, const ExpPoly& divisor);

}  // namespace amvortex::exact

#endif  // AMVORTEX_EXACT_EXPPOLY_HPP
