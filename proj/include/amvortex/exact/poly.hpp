#ifndef AMVORTEX_EXACT_POLY_HPP
#define AMVORTEX_EXACT_POLY_HPP

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "amvortex/exact/bigrat.hpp"

namespace amvortex::exact {

/**
 * Dense univariate polynomial over the rationals.
 *
 * Coefficients are stored in ascending degree. Trailing zeros are stripped
 * on every construction, so the zero polynomial has an empty coefficient
 * list and degree -1.
 */
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigRat> coeffs);
  Poly(std::initializer_list<BigRat> coeffs);

  static Poly x() { return Poly({0, 1}); }
  static Poly constant(const BigRat& c) { return Poly({c}); }
  static Poly monomial(const BigRat& c, int degree);
  /// Monic polynomial with the given roots: prod (x - r).
  static Poly from_roots(const std::vector<BigRat>& roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !is_zero() && coeffs_.back() == BigRat(1); }

  const std::vector<BigRat>& coeffs() const { return coeffs_; }
  /// Coefficient of x^k (zero outside the stored range).
  BigRat coeff(int k) const;
  BigRat leading() const;

  Poly derivative() const;
  /// p(x + c).
  Poly shifted(const BigRat& c) const;
  /// Divides by the leading coefficient. Throws std::domain_error for zero.
  Poly monic() const;
  BigRat operator()(const BigRat& at) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const BigRat& scalar);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly lhs, const BigRat& rhs) { return lhs *= rhs; }
  friend Poly operator*(const BigRat& lhs, Poly rhs) { return rhs *= lhs; }
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Human-readable form, e.g. "x^2 - 2*x + 2".
  std::string str() const;

 private:
  void trim();
  std::vector<BigRat> coeffs_;
};

enum class PolyOp { add, sub, mul };

Poly poly_arith(const Poly& p, const Poly& q, PolyOp op);

/// Quotient and remainder of Euclidean division. Throws std::domain_error
/// when the divisor is zero.
std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor);

/// Exact quotient; throws InconsistencyError if the remainder is nonzero.
Poly divide_exact(const Poly& dividend, const Poly& divisor);

/// Monic gcd over Q. Throws InputError when both inputs are zero.
Poly gcd(const Poly& p, const Poly& q);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace amvortex::exact

#endif  // AMVORTEX_EXACT_POLY_HPP
