#ifndef AMVORTEX_GEN_DARBOUX_HPP
#define AMVORTEX_GEN_DARBOUX_HPP

#include "amvortex/exact/exprat.hpp"

namespace amvortex::gen {

using exact::ExpRat;
using exact::Poly;

/// Second-order linear ODE u2 phi'' + u1 phi' + u0 phi = 0.
struct Ode2 {
  ExpRat u2;
  ExpRat u1;
  ExpRat u0;
};

/// u2 phi'' + u1 phi' + u0 phi.
ExpRat ode_apply(const Ode2& ode, const ExpRat& phi);

/// phi'' + (2 (ln P)'' - (ln P)') phi - (n+1) phi' = 0, with every
/// coefficient multiplied by e^{weight x}. weight = -1 gives the form the
/// generalized Darboux step acts on.
Ode2 e3_ode(const Poly& p, int n, int weight);

struct DarbouxResult {
  Ode2 ode;     // (u2, u1 + u2', u0 + u1' + 2 u2 (ln phi1)'' + u2' (ln phi1)')
  ExpRat phi;   // phi2' - phi1' phi2 / phi1
};

/// Generalized Darboux transformation built from two solutions phi1, phi2
/// of `ode`.
///
/// Throws PreconditionError if either input does not solve `ode`, and
/// InconsistencyError if the transformed function fails the transformed
/// equation (which cannot happen with correct arithmetic).
DarbouxResult darboux_transform(const Ode2& ode, const ExpRat& phi1, const ExpRat& phi2);

}  // namespace amvortex::gen

#endif  // AMVORTEX_GEN_DARBOUX_HPP
