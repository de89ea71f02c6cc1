#include "amvortex/gen/identities.hpp"

#include <vector>

#include "amvortex/error.hpp"
#include "amvortex/exact/exprat.hpp"
#include "amvortex/exact/wronskian.hpp"
#include "amvortex/gen/darboux.hpp"
#include "amvortex/gen/sequence.hpp"

namespace amvortex::gen {

using exact::BigRat;
using exact::ExpRat;
using exact::RatFunc;

Poly verify_pq(const Poly& p, const Poly& q, int m, int n) {
  const Poly dp = p.derivative();
  const Poly dq = q.derivative();
  return dp.derivative() * q - BigRat(2) * (dp * dq) + p * dq.derivative() + BigRat(n) * (dp * q) -
         BigRat(m) * (p * dq);
}

Poly three_term_residual(const Poly& pn, const Poly& pn1, const Poly& pn2, int n) {
  const BigRat np1(n + 1);
  return pn.derivative() * pn2 - pn * pn2.derivative() - np1 * (pn * pn2) + np1 * (pn1 * pn1);
}

namespace {

std::vector<ExpPoly> omegas(int k) {
  std::vector<ExpPoly> out;
  for (int j = 1; j <= k; ++j) out.push_back(omega(j));
  return out;
}

}  // namespace

ExpPoly omega_wronskian(int k) {
  if (k < 0) throw InputError("omega_wronskian: negative size");
  if (k == 0) return ExpPoly(Poly::constant(1));
  return exact::wronskian(omegas(k));
}

ExpPoly omega_wronskian_with(int k, const ExpPoly& xi) {
  if (k < 0) throw InputError("omega_wronskian_with: negative size");
  auto fs = omegas(k);
  fs.push_back(xi);
  return exact::wronskian(fs);
}

bool verify_refi(int n) {
  if (n < 1) throw InputError("verify_refi: n must be >= 1");
  const ExpPoly wn = omega_wronskian(n);
  const ExpPoly wn1 = omega_wronskian(n + 1);
  const ExpPoly wn2 = omega_wronskian(n + 2);
  const ExpPoly lhs = wn.derivative() * wn2 - wn * wn2.derivative() + wn * wn2 * BigRat(n) +
                      (wn1 * wn1).times_exp(1) * BigRat((n + 1) * (n + 1));
  return lhs.is_zero();
}

bool verify_jacobi(int k, const ExpPoly& xi) {
  if (k < 0) throw InputError("verify_jacobi: negative size");
  const ExpPoly wk_xi = omega_wronskian_with(k, xi);
  const ExpPoly wk1_xi = omega_wronskian_with(k + 1, xi);
  const ExpPoly wk = omega_wronskian(k);
  const ExpPoly wk1 = omega_wronskian(k + 1);
  return (wk_xi.derivative() * wk1 - wk_xi * wk1.derivative() - wk1_xi * wk).is_zero();
}

bool verify_wk_one(int k) {
  if (k < 1) throw InputError("verify_wk_one: k must be >= 1");
  const ExpPoly lhs = omega_wronskian_with(k, ExpPoly(Poly::constant(1)));
  const BigRat f = exact::factorial(static_cast<unsigned>(k - 1));
  const BigRat coeff = (k % 2 == 0 ? BigRat(1) : BigRat(-1)) * f * f;
  const ExpPoly rhs = omega_wronskian(k - 1).times_exp(k - 1) * coeff;
  return lhs == rhs;
}

bool verify_ode_solution(const Poly& p, int n, const Poly& a, int k) {
  if (p.is_zero()) throw InputError("verify_ode_solution: P must be nonzero");
  const ExpRat phi(a, p, k);
  return ode_apply(e3_ode(p, n, 0), phi).is_zero();
}

}  // namespace amvortex::gen
