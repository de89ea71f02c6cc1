#include "amvortex/exact/exppoly.hpp"

#include <sstream>
#include <stdexcept>

#include "amvortex/error.hpp"

namespace amvortex::exact {

ExpPoly::ExpPoly(const Poly& p, int exponent) {
  if (exponent < 0) throw InputError("ExpPoly: negative exponent");
  add_term(exponent, p);
}

ExpPoly::ExpPoly(Terms terms) {
  for (auto& [k, p] : terms) {
    if (k < 0) throw InputError("ExpPoly: negative exponent");
    add_term(k, p);
  }
}

void ExpPoly::add_term(int exponent, const Poly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly ExpPoly::coeff(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Poly() : it->second;
}

std::optional<std::pair<int, Poly>> ExpPoly::single_term() const {
  if (terms_.size() != 1) return std::nullopt;
  return *terms_.begin();
}

int ExpPoly::min_exponent() const {
  if (is_zero()) throw std::domain_error("ExpPoly::min_exponent of zero");
  return terms_.begin()->first;
}

int ExpPoly::max_exponent() const {
  if (is_zero()) throw std::domain_error("ExpPoly::max_exponent of zero");
  return terms_.rbegin()->first;
}

ExpPoly ExpPoly::derivative() const {
  // (p e^{kx})' = (p' + k p) e^{kx}
  ExpPoly out;
  for (const auto& [k, p] : terms_) out.add_term(k, p.derivative() + p * BigRat(k));
  return out;
}

ExpPoly ExpPoly::times_exp(int k) const {
  ExpPoly out;
  for (const auto& [e, p] : terms_) {
    if (e + k < 0) throw InputError("ExpPoly::times_exp: exponent would go negative");
    out.terms_.emplace(e + k, p);
  }
  return out;
}

ExpPoly ExpPoly::operator-() const {
  ExpPoly out;
  for (const auto& [k, p] : terms_) out.terms_.emplace(k, -p);
  return out;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& rhs) {
  for (const auto& [k, p] : rhs.terms_) add_term(k, p);
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& rhs) {
  for (const auto& [k, p] : rhs.terms_) add_term(k, -p);
  return *this;
}

ExpPoly operator*(const ExpPoly& lhs, const ExpPoly& rhs) {
  ExpPoly out;
  for (const auto& [i, p] : lhs.terms_)
    for (const auto& [j, q] : rhs.terms_) out.add_term(i + j, p * q);
  return out;
}

ExpPoly operator*(ExpPoly lhs, const BigRat& c) {
  if (c.is_zero()) return ExpPoly();
  for (auto& [k, p] : lhs.terms_) p *= c;
  return lhs;
}

std::string ExpPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, p] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << p.str() << ")";
    if (k == 1) os << "*e^x";
    if (k > 1) os << "*e^(" << k << "x)";
  }
  return os.str();
}

ExpPoly exp_poly_derive(const ExpPoly& e) { return e.derivative(); }

ExpPoly divide_exact(const ExpPoly& dividend, const ExpPoly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("ExpPoly divide_exact: zero divisor");
  // Long division in y = e^x; each step's Q[x] division is exact when the
  // divisor truly divides.
  ExpPoly rem = dividend;
  ExpPoly quo;
  const int top_div = divisor.max_exponent();
  const Poly& lead_div = divisor.terms().rbegin()->second;
  while (!rem.is_zero()) {
    const int top = rem.max_exponent();
    if (top < top_div)
      throw InconsistencyError("ExpPoly divide_exact: divisor does not divide dividend");
    const Poly coeff = divide_exact(rem.terms().rbegin()->second, lead_div);
    const ExpPoly term(coeff, top - top_div);
    quo += term;
    rem -= term * divisor;
  }
  return quo;
}

}  // namespace amvortex::exact
