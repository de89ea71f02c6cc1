#ifndef AMVORTEX_RINGPOT_POTENTIAL_HPP
#define AMVORTEX_RINGPOT_POTENTIAL_HPP

#include <ostream>
#include <vector>

#include <json.hpp>

namespace amvortex::ringpot {

/// Point of the meridian half plane: x1 > 0 is the distance to the symmetry
/// axis, x2 the axial coordinate.
struct HalfPlanePoint {
  double x1 = 1.0;
  double x2 = 0.0;
};

/// 4 a1 x1 / ((x1 + a1)^2 + (x2 - a2)^2).
double kappa_sq(const HalfPlanePoint& a, const HalfPlanePoint& x);

/**
 * Ring potential A_a(x) = sqrt(a1/x1) / kappa * [(2 - kappa^2) K(kappa^2) - 2 E(kappa^2)].
 *
 * Invariant under A_{la}(lx) = A_a(x). Diverges logarithmically at x = a.
 * Throws InputError when x = a or either first coordinate is not positive.
 */
double potential_A(const HalfPlanePoint& a, const HalfPlanePoint& x);

/// Gradient of A_a at x by central differences with step h.
std::pair<double, double> grad_A(const HalfPlanePoint& a, const HalfPlanePoint& x, double h);

struct NearFieldRow {
  double r = 0;
  double a_value = 0;
  double asymptote = 0;  // ln(a1/r) + 3 ln 2 - 2
  double error = 0;      // |A - asymptote|
  double ratio = 0;      // error / ((r/a1) |ln(r/a1)|)
  double radial_derivative = 0;   // central difference in r
  double derivative_error = 0;    // |dA/dr + 1/r|
};

/// Samples A at x = a + r (cos angle, sin angle) for every r (each r < a1).
/// Throws InputError otherwise.
std::vector<NearFieldRow> near_field_report(const HalfPlanePoint& a, const std::vector<double>& radii,
                                            double angle = 0.0);

nlohmann::json to_json(const std::vector<NearFieldRow>& rows);

struct GridSpec {
  double x1_min = 0.5, x1_max = 1.5;
  int x1_steps = 11;
  double x2_min = -0.5, x2_max = 0.5;
  int x2_steps = 11;
};

/// Writes "x1,x2,A" with a header; the singular point x = a is written with
/// an empty A field. Throws InputError when the grid reaches x1 <= 0.
void write_grid_csv(std::ostream& os, const HalfPlanePoint& a, const GridSpec& grid);

}  // namespace amvortex::ringpot

#endif  // AMVORTEX_RINGPOT_POTENTIAL_HPP
