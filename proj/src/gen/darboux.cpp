#include "amvortex/gen/darboux.hpp"

#include "amvortex/error.hpp"

namespace amvortex::gen {

using exact::BigRat;
using exact::RatFunc;

ExpRat ode_apply(const Ode2& ode, const ExpRat& phi) {
  const ExpRat d1 = phi.derivative();
  const ExpRat d2 = d1.derivative();
  return ode.u2 * d2 + ode.u1 * d1 + ode.u0 * phi;
}

Ode2 e3_ode(const Poly& p, int n, int weight) {
  const RatFunc dlog = exact::log_derivative(p);
  const RatFunc potential = RatFunc(BigRat(2)) * dlog.derivative() - dlog;
  return Ode2{ExpRat(RatFunc(BigRat(1)), weight), ExpRat(RatFunc(BigRat(-(n + 1))), weight),
              ExpRat(potential, weight)};
}

DarbouxResult darboux_transform(const Ode2& ode, const ExpRat& phi1, const ExpRat& phi2) {
  if (phi1.is_zero() || !ode_apply(ode, phi1).is_zero())
    throw PreconditionError("darboux_transform: phi1 does not solve the equation");
  if (!ode_apply(ode, phi2).is_zero())
    throw PreconditionError("darboux_transform: phi2 does not solve the equation");

  const ExpRat dlog1(phi1.log_derivative());
  const ExpRat du2 = ode.u2.derivative();
  DarbouxResult out;
  out.ode.u2 = ode.u2;
  out.ode.u1 = ode.u1 + du2;
  out.ode.u0 = ode.u0 + ode.u1.derivative() + ExpRat(RatFunc(BigRat(2))) * ode.u2 * dlog1.derivative() +
               du2 * dlog1;
  out.phi = phi2.derivative() - phi1.derivative() * phi2 / phi1;
  if (!ode_apply(out.ode, out.phi).is_zero())
    throw InconsistencyError("darboux_transform: transformed function fails the new equation");
  return out;
}

}  // namespace amvortex::gen
