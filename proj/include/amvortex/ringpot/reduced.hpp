#ifndef AMVORTEX_RINGPOT_REDUCED_HPP
#define AMVORTEX_RINGPOT_REDUCED_HPP

#include <vector>

#include <json.hpp>

#include "amvortex/balance/config.hpp"
#include "amvortex/exact/bigrat.hpp"

namespace amvortex::ringpot {

/// 2(m + n)/(m - n). Throws InputError when m == n or either is negative.
exact::BigRat alpha0(int m, int n);

struct ReducedInstance {
  balance::VortexConfig cfg;  // any preset; rescaled to reduced-leading first
  double eps = 1e-5;
  double c1 = 0.0;
};

struct ReducedResidual {
  double row_norm1 = 0;  // max_j |row1_j| / |ln eps|
  double row_norm2 = 0;  // max_j |row2_j|
  double alpha0 = 0;
  double min_x1 = 0;     // smallest embedded first coordinate
};

/// Embedded ring positions p_j = (alpha0 + Re z_j / L, Im z_j / L), L = |ln eps|,
/// in points() order, after rescaling the configuration to reduced-leading.
/// Throws InputError when eps is not in (0, 1) or some p_{j,1} <= 0.
std::vector<balance::Complex> embed(const ReducedInstance& inst);

/// Leading-log residual of the ring system with point-vortex interactions.
ReducedResidual reduced_residual(const ReducedInstance& inst);

/// Same rows with the exact ring potential A and its central-difference
/// gradient (step 1e-6 times the pair distance), the -2 ln p/p self term and
/// the -2 c1/p term.
ReducedResidual reduced_residual_elliptic(const ReducedInstance& inst);

/// {"<eps>": {"rowNorm1", "rowNorm2", "ellipticRowNorm1", "ellipticRowNorm2"}, ...}
/// keyed by the 17-digit form of each eps.
nlohmann::json reduced_report(const balance::VortexConfig& cfg, const std::vector<double>& eps_list,
                              double c1);

}  // namespace amvortex::ringpot

#endif  // AMVORTEX_RINGPOT_REDUCED_HPP
