#ifndef AMVORTEX_RINGPOT_ELLIPTIC_HPP
#define AMVORTEX_RINGPOT_ELLIPTIC_HPP

namespace amvortex::ringpot {

// Complete elliptic integrals in parameter form:
//   K(s) = int_0^{pi/2} (1 - s sin^2 t)^{-1/2} dt
//   E(s) = int_0^{pi/2} (1 - s sin^2 t)^{ 1/2} dt
// evaluated by the arithmetic-geometric mean.

/// Throws InputError unless 0 <= s < 1.
double ellipK(double s);

/// Throws InputError unless 0 <= s <= 1.
double ellipE(double s);

struct EllipticPair {
  double k;
  double e;
};

/// K and E from the complementary parameter sc = 1 - s, which avoids the
/// cancellation in 1 - s when s is close to 1. Requires 0 < sc <= 1.
EllipticPair ellip_from_complement(double sc);

/// (2 - s) K(s) - 2 E(s) from s and sc = 1 - s, both supplied so neither is
/// formed by subtraction. Evaluated as a sum of positive terms, so it keeps
/// full relative accuracy as s -> 0 where the value is O(s^2).
double ring_combination(double s, double sc);

}  // namespace amvortex::ringpot

#endif  // AMVORTEX_RINGPOT_ELLIPTIC_HPP
