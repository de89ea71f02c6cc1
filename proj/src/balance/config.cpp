#include "amvortex/balance/config.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "amvortex/error.hpp"

namespace amvortex::balance {

RhsPreset make_preset(std::string_view name, int m, int n) {
  const double dm = m, dn = n;
  if (name == "paper-balance") return {"paper-balance", -dn, -dm};
  if (name == "pq-roots") return {"pq-roots", -dn / 2, -dm / 2};
  if (m + n == 0 && (name == "alpha0-form" || name == "reduced-leading"))
    throw InputError("preset '" + std::string(name) + "' needs m + n > 0");
  if (name == "alpha0-form") return {"alpha0-form", dn / (dm + dn), dm / (dm + dn)};
  if (name == "reduced-leading") return {"reduced-leading", -dn / (dm + dn), -dm / (dm + dn)};
  throw InputError("unknown preset '" + std::string(name) + "'");
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"paper-balance", "pq-roots", "alpha0-form",
                                              "reduced-leading"};
  return names;
}

std::vector<Complex> VortexConfig::points() const {
  std::vector<Complex> out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<double> VortexConfig::orientations() const {
  std::vector<double> out(a.size(), 1.0);
  out.insert(out.end(), b.size(), -1.0);
  return out;
}

VortexConfig from_points(const std::vector<Complex>& points, int m, const RhsPreset& preset) {
  if (m < 0 || m > static_cast<int>(points.size())) throw InputError("from_points: bad split");
  VortexConfig cfg;
  cfg.a.assign(points.begin(), points.begin() + m);
  cfg.b.assign(points.begin() + m, points.end());
  cfg.preset = preset;
  return cfg;
}

double min_separation(const VortexConfig& cfg) {
  const auto z = cfg.points();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) best = std::min(best, std::abs(z[i] - z[j]));
  return best;
}

std::vector<Complex> balance_lhs(const VortexConfig& cfg) {
  const auto z = cfg.points();
  const auto tau = cfg.orientations();
  std::vector<Complex> f(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) {
    Complex sum = 0;
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (j == k) continue;
      const Complex d = z[k] - z[j];
      if (d == Complex(0)) throw InputError("balance: coincident points");
      sum += tau[j] / d;
    }
    f[k] = sum;
  }
  return f;
}

std::vector<Complex> residual(const VortexConfig& cfg) {
  auto f = balance_lhs(cfg);
  for (std::size_t k = 0; k < f.size(); ++k)
    f[k] -= static_cast<int>(k) < cfg.m() ? cfg.preset.rhs_a : cfg.preset.rhs_b;
  return f;
}

double max_norm(const std::vector<Complex>& v) {
  double out = 0;
  for (const auto& x : v) out = std::max(out, std::abs(x));
  return out;
}

Complex rescale_factor(const RhsPreset& from, const RhsPreset& to, int m, int n) {
  std::vector<std::pair<Complex, Complex>> sides;
  if (m > 0) sides.emplace_back(from.rhs_a, to.rhs_a);
  if (n > 0) sides.emplace_back(from.rhs_b, to.rhs_b);
  bool have = false;
  Complex lambda = 1;
  for (const auto& [f, t] : sides) {
    if (f == Complex(0) && t == Complex(0)) continue;
    if (f == Complex(0) || t == Complex(0))
      throw InputError("rescale: presets '" + from.name + "' and '" + to.name +
                       "' are not proportional");
    const Complex l = f / t;
    if (have && std::abs(l - lambda) > 1e-12 * std::abs(lambda))
      throw InputError("rescale: presets '" + from.name + "' and '" + to.name +
                       "' are not proportional");
    lambda = l;
    have = true;
  }
  return lambda;
}

VortexConfig rescale(const VortexConfig& cfg, const RhsPreset& to) {
  const Complex lambda = rescale_factor(cfg.preset, to, cfg.m(), cfg.n());
  VortexConfig out = cfg;
  for (auto& z : out.a) z *= lambda;
  for (auto& z : out.b) z *= lambda;
  out.preset = to;
  return out;
}

VortexConfig translated(const VortexConfig& cfg, Complex c) {
  VortexConfig out = cfg;
  for (auto& z : out.a) z += c;
  for (auto& z : out.b) z += c;
  return out;
}

VortexConfig centered(const VortexConfig& cfg) {
  if (cfg.size() == 0) return cfg;
  Complex sum = 0;
  for (const auto& z : cfg.points()) sum += z;
  return translated(cfg, -sum / static_cast<double>(cfg.size()));
}

namespace {

bool multiset_match(const std::vector<Complex>& x, const std::vector<Complex>& y, double tol) {
  if (x.size() != y.size()) return false;
  std::vector<bool> used(y.size(), false);
  for (const auto& p : x) {
    std::size_t best = y.size();
    double best_dist = tol;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (used[j]) continue;
      const double dist = std::abs(p - y[j]);
      if (dist <= best_dist) {
        best = j;
        best_dist = dist;
      }
    }
    if (best == y.size()) return false;
    used[best] = true;
  }
  return true;
}

std::vector<Complex> complex_list(const nlohmann::json& j, const char* key) {
  std::vector<Complex> out;
  if (!j.contains(key)) return out;
  const auto& arr = j.at(key);
  if (!arr.is_array()) throw InputError(std::string("config: '") + key + "' must be an array");
  for (const auto& z : arr) {
    if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
      throw InputError(std::string("config: '") + key + "' entries must be [re, im]");
    out.emplace_back(z[0].get<double>(), z[1].get<double>());
  }
  return out;
}

nlohmann::json complex_json(const std::vector<Complex>& zs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& z : zs) out.push_back({z.real(), z.imag()});
  return out;
}

}  // namespace

bool same_up_to_translation(const VortexConfig& x, const VortexConfig& y, double tol) {
  if (x.m() != y.m() || x.n() != y.n()) return false;
  const auto cx = centered(x);
  const auto cy = centered(y);
  return multiset_match(cx.a, cy.a, tol) && multiset_match(cx.b, cy.b, tol);
}

nlohmann::json to_json(const VortexConfig& cfg) {
  return {{"m", cfg.m()},
          {"n", cfg.n()},
          {"preset", cfg.preset.name},
          {"a", complex_json(cfg.a)},
          {"b", complex_json(cfg.b)}};
}

VortexConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("config document must be a JSON object");
  VortexConfig cfg;
  cfg.a = complex_list(j, "a");
  cfg.b = complex_list(j, "b");
  if (j.contains("m") && j.at("m").get<int>() != cfg.m())
    throw InputError("config: 'm' does not match the number of a-points");
  if (j.contains("n") && j.at("n").get<int>() != cfg.n())
    throw InputError("config: 'n' does not match the number of b-points");
  const std::string preset = j.value("preset", std::string("pq-roots"));
  cfg.preset = make_preset(preset, cfg.m(), cfg.n());
  return cfg;
}

}  // namespace amvortex::balance
