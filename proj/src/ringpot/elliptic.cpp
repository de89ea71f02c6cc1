#include "amvortex/ringpot/elliptic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "amvortex/error.hpp"
#include "amvortex/format.hpp"

namespace amvortex::ringpot {

namespace {

// AGM with c_0^2 = s and c_{n+1} = c_n^2 / (4 a_{n+1}), which keeps every
// term positive. Returns K and tail = sum_{n>=1} 2^{n-1} c_n^2, so that
// E = K (1 - s/2 - tail).
struct AgmResult {
  double k;
  double tail;
};

AgmResult agm(double s, double sc) {
  double a = 1.0;
  double b = std::sqrt(sc);
  double c2 = s;  // c_n^2
  double weight = 0.5;
  double tail = 0.0;
  for (int i = 0; i < 64; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
    const double c = c2 / (4.0 * a);
    c2 = c * c;
    weight *= 2.0;
    const double term = weight * c2;
    tail += term;
    if (term <= 1e-18 * tail || c2 == 0.0) break;
  }
  return {std::numbers::pi / (2.0 * a), tail};
}

}  // namespace

EllipticPair ellip_from_complement(double sc) {
  if (!(sc > 0.0 && sc <= 1.0)) throw InputError("elliptic: complementary parameter outside (0, 1]");
  const double s = 1.0 - sc;
  const auto [k, tail] = agm(s, sc);
  return {k, k * (1.0 - 0.5 * s - tail)};
}

double ring_combination(double s, double sc) {
  if (!(sc > 0.0 && sc <= 1.0) || !(s >= 0.0 && s < 1.0))
    throw InputError("ring_combination: parameters outside the unit interval");
  const auto [k, tail] = agm(s, sc);
  return 2.0 * k * tail;
}

double ellipK(double s) {
  if (!(s >= 0.0 && s < 1.0)) throw InputError("ellipK: parameter " + fmt17(s) + " outside [0, 1)");
  return ellip_from_complement(1.0 - s).k;
}

double ellipE(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw InputError("ellipE: parameter " + fmt17(s) + " outside [0, 1]");
  if (s == 1.0) return 1.0;
  return ellip_from_complement(1.0 - s).e;
}

}  // namespace amvortex::ringpot
