#ifndef AMVORTEX_GEN_IDENTITIES_HPP
#define AMVORTEX_GEN_IDENTITIES_HPP

#include "amvortex/exact/exppoly.hpp"
#include "amvortex/exact/poly.hpp"

namespace amvortex::gen {

using exact::ExpPoly;
using exact::Poly;

/// P''Q - 2P'Q' + PQ'' + nP'Q - mPQ'. Zero iff (P, Q) solves the bilinear
/// equation for the degree pair (m, n).
Poly verify_pq(const Poly& p, const Poly& q, int m, int n);

/// P_n' P_{n+2} - P_n P_{n+2}' - (n+1) P_n P_{n+2} + (n+1) P_{n+1}^2.
Poly three_term_residual(const Poly& pn, const Poly& pn1, const Poly& pn2, int n);

inline bool verify_three_term(const Poly& pn, const Poly& pn1, const Poly& pn2, int n) {
  return three_term_residual(pn, pn1, pn2, n).is_zero();
}

/// W_k = W(omega_1, ..., omega_k); W_0 = 1.
ExpPoly omega_wronskian(int k);

/// W_k(xi) = W(omega_1, ..., omega_k, xi).
ExpPoly omega_wronskian_with(int k, const ExpPoly& xi);

/// W_n' W_{n+2} - W_n W_{n+2}' + n W_n W_{n+2} + (n+1)^2 e^x W_{n+1}^2 == 0.
bool verify_refi(int n);

/// (W_k(xi))' W_{k+1} - W_k(xi) W_{k+1}' - W_{k+1}(xi) W_k == 0.
bool verify_jacobi(int k, const ExpPoly& xi);

/// W_k(1) == (-1)^k ((k-1)!)^2 e^{(k-1)x} W_{k-1}, for k >= 1.
bool verify_wk_one(int k);

/// Substitutes phi = (A/P) e^{kx} into
///   phi'' + (2 (ln P)'' - (ln P)') phi - (n+1) phi'
/// and reports whether the result vanishes identically. Throws InputError
/// for P = 0.
bool verify_ode_solution(const Poly& p, int n, const Poly& a, int k);

}  // namespace amvortex::gen

#endif  // AMVORTEX_GEN_IDENTITIES_HPP
