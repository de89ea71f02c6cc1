#ifndef AMVORTEX_BALANCE_CONFIG_HPP
#define AMVORTEX_BALANCE_CONFIG_HPP

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace amvortex::balance {

using Complex = std::complex<double>;

/**
 * Right-hand sides of the balance equations: every a-equation equals rhs_a,
 * every b-equation equals rhs_b.
 *
 * Built-ins for degrees (m, n):
 *   paper-balance    (-n, -m)
 *   pq-roots         (-n/2, -m/2)        roots of a bilinear-equation pair
 *   alpha0-form      (n/(m+n), m/(m+n))  1/2 -+ 1/alpha0
 *   reduced-leading  (-n/(m+n), -m/(m+n)) the scaling that cancels the
 *                    |ln eps| order of the ring reduced problem
 *
 * The sets differ only by a real factor, so configurations move between
 * them with `rescale`.
 */
struct RhsPreset {
  std::string name;
  Complex rhs_a;
  Complex rhs_b;
};

/// Throws InputError on an unknown name.
RhsPreset make_preset(std::string_view name, int m, int n);

const std::vector<std::string>& preset_names();

/// m positively oriented points a_k and n negatively oriented points b_k.
struct VortexConfig {
  std::vector<Complex> a;
  std::vector<Complex> b;
  RhsPreset preset;

  int m() const { return static_cast<int>(a.size()); }
  int n() const { return static_cast<int>(b.size()); }
  int size() const { return m() + n(); }
  /// a_1..a_m, b_1..b_n.
  std::vector<Complex> points() const;
  /// +1 for a-points, -1 for b-points, in `points()` order.
  std::vector<double> orientations() const;
};

/// Builds a configuration from a flat point list (a's first).
VortexConfig from_points(const std::vector<Complex>& points, int m, const RhsPreset& preset);

/// Smallest pairwise distance (infinity for fewer than two points).
double min_separation(const VortexConfig& cfg);

/// Left-hand sides F_k = sum_{j != k} tau_j / (z_k - z_j), a-equations first.
/// Throws InputError if two points coincide.
std::vector<Complex> balance_lhs(const VortexConfig& cfg);

/// F_k - rhs_k.
std::vector<Complex> residual(const VortexConfig& cfg);

double max_norm(const std::vector<Complex>& v);

/// Factor lambda with F(lambda X) = rhs_to when F(X) = rhs_from.
/// Throws InputError when the two presets are not proportional.
Complex rescale_factor(const RhsPreset& from, const RhsPreset& to, int m, int n);

/// Multiplies every point by rescale_factor(cfg.preset, to) and relabels.
VortexConfig rescale(const VortexConfig& cfg, const RhsPreset& to);

/// cfg + c (1, ..., 1).
VortexConfig translated(const VortexConfig& cfg, Complex c);

/// Translated so the centroid of all points is the origin.
VortexConfig centered(const VortexConfig& cfg);

/// Same (m, n) and, after centering, every a (b) point of one config has a
/// distinct partner among the other's a (b) points within tol.
bool same_up_to_translation(const VortexConfig& x, const VortexConfig& y, double tol);

nlohmann::json to_json(const VortexConfig& cfg);
/// Throws InputError on malformed documents.
VortexConfig config_from_json(const nlohmann::json& j);

}  // namespace amvortex::balance

#endif  // AMVORTEX_BALANCE_CONFIG_HPP
