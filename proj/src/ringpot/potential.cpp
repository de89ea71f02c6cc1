#include "amvortex/ringpot/potential.hpp"

#include <cmath>

#include "amvortex/error.hpp"
#include "amvortex/format.hpp"
#include "amvortex/ringpot/elliptic.hpp"

namespace amvortex::ringpot {

namespace {

void check_half_plane(const HalfPlanePoint& p, const char* what) {
  if (!(p.x1 > 0.0) || !std::isfinite(p.x1) || !std::isfinite(p.x2))
    throw InputError(std::string(what) + ": first coordinate must be positive and finite");
}

}  // namespace

double kappa_sq(const HalfPlanePoint& a, const HalfPlanePoint& x) {
  const double dx2 = x.x2 - a.x2;
  return 4.0 * a.x1 * x.x1 / ((x.x1 + a.x1) * (x.x1 + a.x1) + dx2 * dx2);
}

double potential_A(const HalfPlanePoint& a, const HalfPlanePoint& x) {
  check_half_plane(a, "potential_A: ring center");
  check_half_plane(x, "potential_A: evaluation point");
  const double d1 = x.x1 - a.x1;
  const double d2 = x.x2 - a.x2;
  if (d1 == 0.0 && d2 == 0.0) throw InputError("potential_A: evaluation point equals the ring center");
  const double denom = (x.x1 + a.x1) * (x.x1 + a.x1) + d2 * d2;
  const double k2 = 4.0 * a.x1 * x.x1 / denom;
  const double sc = (d1 * d1 + d2 * d2) / denom;  // 1 - kappa^2 without cancellation
  return std::sqrt(a.x1 / x.x1) / std::sqrt(k2) * ring_combination(k2, sc);
}

std::pair<double, double> grad_A(const HalfPlanePoint& a, const HalfPlanePoint& x, double h) {
  const double d1 = (potential_A(a, {x.x1 + h, x.x2}) - potential_A(a, {x.x1 - h, x.x2})) / (2 * h);
  const double d2 = (potential_A(a, {x.x1, x.x2 + h}) - potential_A(a, {x.x1, x.x2 - h})) / (2 * h);
  return {d1, d2};
}

std::vector<NearFieldRow> near_field_report(const HalfPlanePoint& a, const std::vector<double>& radii,
                                            double angle) {
  check_half_plane(a, "near_field_report");
  const double c = std::cos(angle), s = std::sin(angle);
  std::vector<NearFieldRow> rows;
  for (double r : radii) {
    if (!(r > 0.0 && r < a.x1)) throw InputError("near_field_report: radius must lie in (0, a1)");
    auto at = [&](double rr) { return potential_A(a, {a.x1 + rr * c, a.x2 + rr * s}); };
    NearFieldRow row;
    row.r = r;
    row.a_value = at(r);
    row.asymptote = std::log(a.x1 / r) + 3.0 * std::log(2.0) - 2.0;
    row.error = std::abs(row.a_value - row.asymptote);
    const double rho = r / a.x1;
    row.ratio = row.error / (rho * std::abs(std::log(rho)));
    const double h = 1e-4 * r;
    row.radial_derivative = (at(r + h) - at(r - h)) / (2 * h);
    row.derivative_error = std::abs(row.radial_derivative + 1.0 / r);
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json to_json(const std::vector<NearFieldRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows)
    out.push_back({{"r", r.r},
                   {"A", r.a_value},
                   {"asymptote", r.asymptote},
                   {"error", r.error},
                   {"ratio", r.ratio},
                   {"dAdr", r.radial_derivative},
                   {"dAdrError", r.derivative_error}});
  return out;
}

void write_grid_csv(std::ostream& os, const HalfPlanePoint& a, const GridSpec& grid) {
  check_half_plane(a, "potential grid: ring center");
  if (grid.x1_steps < 1 || grid.x2_steps < 1) throw InputError("potential grid: steps must be >= 1");
  if (!(grid.x1_min > 0.0) || !(grid.x1_max > 0.0))
    throw InputError("potential grid: x1 range must stay in x1 > 0");
  auto node = [](double lo, double hi, int steps, int i) {
    return steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
  };
  os << "x1,x2,A\n";
  for (int i = 0; i < grid.x1_steps; ++i) {
    const double x1 = node(grid.x1_min, grid.x1_max, grid.x1_steps, i);
    for (int j = 0; j < grid.x2_steps; ++j) {
      const double x2 = node(grid.x2_min, grid.x2_max, grid.x2_steps, j);
      os << fmt17(x1) << ',' << fmt17(x2) << ',';
      if (!(x1 == a.x1 && x2 == a.x2)) os << fmt17(potential_A(a, {x1, x2}));
      os << '\n';
    }
  }
}

}  // namespace amvortex::ringpot
