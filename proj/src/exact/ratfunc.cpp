#include "amvortex/exact/ratfunc.hpp"

#include <ostream>
#include <stdexcept>

namespace amvortex::exact {

RatFunc::RatFunc(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  if (num.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  const Poly g = gcd(num, den);
  num_ = divide_exact(num, g);
  den_ = divide_exact(den, g);
  const BigRat lead = den_.leading();
  if (lead != BigRat(1)) {
    const BigRat inv = BigRat(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc RatFunc::derivative() const {
  // (n/d)' = (n' d - n d') / d^2
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc operator+(const RatFunc& f, const RatFunc& g) {
  if (f.den_ == g.den_) return RatFunc(f.num_ + g.num_, f.den_);
  return RatFunc(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
}

RatFunc operator-(const RatFunc& f, const RatFunc& g) { return f + (-g); }

RatFunc operator*(const RatFunc& f, const RatFunc& g) {
  return RatFunc(f.num_ * g.num_, f.den_ * g.den_);
}

RatFunc operator/(const RatFunc& f, const RatFunc& g) {
  if (g.is_zero()) throw std::domain_error("RatFunc: division by the zero function");
  return RatFunc(f.num_ * g.den_, f.den_ * g.num_);
}

std::string RatFunc::str() const {
  if (den_ == Poly::constant(1)) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc ratfunc_arith(const RatFunc& f, const RatFunc& g, RatOp op) {
  switch (op) {
    case RatOp::add: return f + g;
    case RatOp::sub: return f - g;
    case RatOp::mul: return f * g;
    case RatOp::div: return f / g;
  }
  throw std::logic_error("ratfunc_arith: unknown op");
}

RatFunc log_derivative(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("log_derivative of the zero polynomial");
  return RatFunc(p.derivative(), p);
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

}  // namespace amvortex::exact
