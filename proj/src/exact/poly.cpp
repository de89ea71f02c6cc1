#include "amvortex/exact/poly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "amvortex/error.hpp"

namespace amvortex::exact {

Poly::Poly(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<BigRat> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::monomial(const BigRat& c, int degree) {
  if (degree < 0) throw InputError("Poly::monomial: negative degree");
  std::vector<BigRat> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return Poly(std::move(coeffs));
}

Poly Poly::from_roots(const std::vector<BigRat>& roots) {
  Poly out = constant(1);
  for (const auto& r : roots) out *= Poly({-r, 1});
  return out;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigRat Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return BigRat(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

BigRat Poly::leading() const { return is_zero() ? BigRat(0) : coeffs_.back(); }

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<BigRat> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    out[k - 1] = coeffs_[k] * BigRat(static_cast<long>(k));
  return Poly(std::move(out));
}

Poly Poly::shifted(const BigRat& c) const {
  if (c.is_zero()) return *this;
  // Horner in the ring: p(x + c) = (...(a_d (x+c) + a_{d-1})(x+c) + ...).
  const Poly step({c, 1});
  Poly out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    out *= step;
    out += Poly::constant(*it);
  }
  return out;
}

Poly Poly::monic() const {
  if (is_zero()) throw std::domain_error("Poly::monic: zero polynomial");
  Poly out = *this;
  out *= BigRat(1) / leading();
  return out;
}

BigRat Poly::operator()(const BigRat& at) const {
  BigRat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Poly();
  std::vector<BigRat> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const BigRat& scalar) {
  if (scalar.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigRat& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const BigRat mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == BigRat(1);
    if (k == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << "*";
    os << "x";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

Poly poly_arith(const Poly& p, const Poly& q, PolyOp op) {
  switch (op) {
    case PolyOp::add: return p + q;
    case PolyOp::sub: return p - q;
    case PolyOp::mul: return p * q;
  }
  throw std::logic_error("poly_arith: unknown op");
}

std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
  if (dividend.degree() < divisor.degree()) return {Poly(), dividend};
  std::vector<BigRat> rem = dividend.coeffs();
  std::vector<BigRat> quo(static_cast<std::size_t>(dividend.degree() - divisor.degree() + 1));
  const BigRat lead_inv = BigRat(1) / divisor.leading();
  const int dd = divisor.degree();
  for (int k = dividend.degree(); k >= dd; --k) {
    const BigRat& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    const BigRat factor = top * lead_inv;
    quo[static_cast<std::size_t>(k - dd)] = factor;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k - dd + j)] -= factor * divisor.coeffs()[static_cast<std::size_t>(j)];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly divide_exact(const Poly& dividend, const Poly& divisor) {
  auto [q, r] = divmod(dividend, divisor);
  if (!r.is_zero())
    throw InconsistencyError("divide_exact: nonzero remainder " + r.str());
  return q;
}

Poly gcd(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero()) throw InputError("gcd: both polynomials are zero");
  Poly a = p.is_zero() ? q.monic() : p.monic();
  Poly b = q.is_zero() ? Poly() : q.monic();
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? Poly() : r.monic();
  }
  return a;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace amvortex::exact
