#include "amvortex/ringpot/reduced.hpp"

#include <algorithm>
#include <cmath>

#include "amvortex/error.hpp"
#include "amvortex/format.hpp"
#include "amvortex/ringpot/potential.hpp"

namespace amvortex::ringpot {

using balance::Complex;

exact::BigRat alpha0(int m, int n) {
  if (m < 0 || n < 0) throw InputError("alpha0: degrees must be nonnegative");
  if (m == n) throw InputError("alpha0: undefined for m == n");
  return exact::BigRat(2L * (m + n), static_cast<long>(m) - n);
}

std::vector<Complex> embed(const ReducedInstance& inst) {
  if (!(inst.eps > 0.0 && inst.eps < 1.0)) throw InputError("reduced: eps must lie in (0, 1)");
  const int m = inst.cfg.m(), n = inst.cfg.n();
  const auto target = balance::make_preset("reduced-leading", m, n);
  const auto cfg = balance::rescale(inst.cfg, target);
  const double a0 = alpha0(m, n).to_double();
  const double big_l = -std::log(inst.eps);
  std::vector<Complex> out;
  for (const Complex z : cfg.points()) {
    const Complex p(a0 + z.real() / big_l, z.imag() / big_l);
    if (!(p.real() > 0.0))
      throw InputError("reduced: configuration leaves the half plane at eps = " + fmt17(inst.eps));
    out.push_back(p);
  }
  return out;
}

namespace {

ReducedResidual finish(const std::vector<double>& row1, const std::vector<double>& row2, double big_l,
                       double a0, const std::vector<Complex>& p) {
  ReducedResidual r;
  r.alpha0 = a0;
  r.min_x1 = p.empty() ? 0.0 : p[0].real();
  for (std::size_t j = 0; j < p.size(); ++j) {
    r.row_norm1 = std::max(r.row_norm1, std::abs(row1[j]) / big_l);
    r.row_norm2 = std::max(r.row_norm2, std::abs(row2[j]));
    r.min_x1 = std::min(r.min_x1, p[j].real());
  }
  return r;
}

}  // namespace

ReducedResidual reduced_residual(const ReducedInstance& inst) {
  const auto p = embed(inst);
  const auto tau = inst.cfg.orientations();
  const double big_l = -std::log(inst.eps);
  const double ln_eps = std::log(inst.eps);
  std::vector<double> row1(p.size()), row2(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    double s1 = 0, s2 = 0;
    for (std::size_t l = 0; l < p.size(); ++l) {
      if (l == j) continue;
      const Complex d = p[j] - p[l];
      const double r2 = std::norm(d);
      if (r2 == 0.0) throw InputError("reduced: coincident embedded points");
      s1 += tau[j] * tau[l] * d.real() / r2;
      s2 += tau[j] * tau[l] * d.imag() / r2;
    }
    row1[j] = tau[j] * big_l + 2 * ln_eps / p[j].real() + 2 * s1;
    row2[j] = 2 * s2;
  }
  return finish(row1, row2, big_l, alpha0(inst.cfg.m(), inst.cfg.n()).to_double(), p);
}

ReducedResidual reduced_residual_elliptic(const ReducedInstance& inst) {
  const auto p = embed(inst);
  const auto tau = inst.cfg.orientations();
  const double big_l = -std::log(inst.eps);
  const double ln_eps = std::log(inst.eps);
  std::vector<double> row1(p.size()), row2(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double x1 = p[j].real();
    double sa = 0, sd1 = 0, sd2 = 0;
    for (std::size_t l = 0; l < p.size(); ++l) {
      if (l == j) continue;
      const HalfPlanePoint ring{p[l].real(), p[l].imag()};
      const HalfPlanePoint at{p[j].real(), p[j].imag()};
      const double h = 1e-6 * std::abs(p[j] - p[l]);
      if (h == 0.0) throw InputError("reduced: coincident embedded points");
      const double w = tau[j] * tau[l];
      const auto [g1, g2] = grad_A(ring, at, h);
      sa += w * potential_A(ring, at);
      sd1 += w * g1;
      sd2 += w * g2;
    }
    row1[j] = tau[j] * big_l + 2 * ln_eps / x1 - 2 * std::log(x1) / x1 - 2 * inst.c1 / x1 - 2 * sa / x1 -
              2 * sd1;
    row2[j] = 2 * sd2;
  }
  return finish(row1, row2, big_l, alpha0(inst.cfg.m(), inst.cfg.n()).to_double(), p);
}

nlohmann::json reduced_report(const balance::VortexConfig& cfg, const std::vector<double>& eps_list,
                              double c1) {
  nlohmann::json out = nlohmann::json::object();
  for (double eps : eps_list) {
    const ReducedInstance inst{cfg, eps, c1};
    const auto lead = reduced_residual(inst);
    const auto ell = reduced_residual_elliptic(inst);
    out[fmt17(eps)] = {{"rowNorm1", lead.row_norm1},
                       {"rowNorm2", lead.row_norm2},
                       {"ellipticRowNorm1", ell.row_norm1},
                       {"ellipticRowNorm2", ell.row_norm2},
                       {"minX1", lead.min_x1}};
  }
  return out;
}

}  // namespace amvortex::ringpot
