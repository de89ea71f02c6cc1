#include "amvortex/exact/exprat.hpp"

#include <stdexcept>

#include "amvortex/error.hpp"

namespace amvortex::exact {

ExpRat::ExpRat(RatFunc coeff, int exponent) : coeff_(std::move(coeff)), exponent_(exponent) {
  if (coeff_.is_zero()) exponent_ = 0;
}

ExpRat ExpRat::derivative() const {
  return ExpRat(coeff_.derivative() + coeff_ * RatFunc(BigRat(exponent_)), exponent_);
}

RatFunc ExpRat::log_derivative() const {
  if (is_zero()) throw std::domain_error("ExpRat::log_derivative of zero");
  return coeff_.derivative() / coeff_ + RatFunc(BigRat(exponent_));
}

ExpRat operator+(const ExpRat& f, const ExpRat& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.exponent_ != g.exponent_)
    throw InconsistencyError("ExpRat: adding terms with exponents " +
                             std::to_string(f.exponent_) + " and " + std::to_string(g.exponent_));
  return ExpRat(f.coeff_ + g.coeff_, f.exponent_);
}

ExpRat operator*(const ExpRat& f, const ExpRat& g) {
  return ExpRat(f.coeff_ * g.coeff_, f.exponent_ + g.exponent_);
}

ExpRat operator/(const ExpRat& f, const ExpRat& g) {
  if (g.is_zero()) throw std::domain_error("ExpRat: division by zero");
  return ExpRat(f.coeff_ / g.coeff_, f.exponent_ - g.exponent_);
}

std::string ExpRat::str() const {
  if (exponent_ == 0) return coeff_.str();
  return "[" + coeff_.str() + "]*e^(" + std::to_string(exponent_) + "x)";
}

}  // namespace amvortex::exact
