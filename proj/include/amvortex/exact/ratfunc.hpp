#ifndef AMVORTEX_EXACT_RATFUNC_HPP
#define AMVORTEX_EXACT_RATFUNC_HPP

#include <iosfwd>
#include <string>

#include "amvortex/exact/poly.hpp"

namespace amvortex::exact {

/// Reduced rational function num/den: gcd(num, den) is constant and den is
/// monic. Zero is 0/1.
class RatFunc {
 public:
  RatFunc() : den_(Poly::constant(1)) {}
  RatFunc(const Poly& p) : num_(p), den_(Poly::constant(1)) {}  // NOLINT: implicit
  RatFunc(const BigRat& c) : RatFunc(Poly::constant(c)) {}      // NOLINT: implicit
  /// Throws std::domain_error when den is zero.
  RatFunc(const Poly& num, const Poly& den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc derivative() const;

  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend RatFunc operator+(const RatFunc& f, const RatFunc& g);
  friend RatFunc operator-(const RatFunc& f, const RatFunc& g);
  friend RatFunc operator*(const RatFunc& f, const RatFunc& g);
  /// Throws std::domain_error when g is the zero function.
  friend RatFunc operator/(const RatFunc& f, const RatFunc& g);
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  std::string str() const;

 private:
  Poly num_;
  Poly den_;
};

enum class RatOp { add, sub, mul, div };

RatFunc ratfunc_arith(const RatFunc& f, const RatFunc& g, RatOp op);

/// p'/p. Throws std::domain_error for p = 0.
RatFunc log_derivative(const Poly& p);

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

}  // namespace amvortex::exact

#endif  // AMVORTEX_EXACT_RATFUNC_HPP
