#include "amvortex/roots/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "amvortex/error.hpp"
#include "amvortex/format.hpp"

namespace amvortex::roots {

namespace {

using LComplex = std::complex<long double>;

constexpr int kMaxIterations = 1000;
constexpr int kPolishSteps = 3;

struct Monic {
  std::vector<long double> c;  // ascending, c.back() == 1
  int degree() const { return static_cast<int>(c.size()) - 1; }
};

Monic to_monic(const Poly& p) {
  const exact::Poly m = p.monic();
  Monic out;
  for (const auto& c : m.coeffs()) out.c.push_back(c.to_long_double());
  return out;
}

/// p(z) and p'(z) by Horner.
std::pair<LComplex, LComplex> eval_with_derivative(const Monic& p, LComplex z) {
  LComplex v = 0, d = 0;
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
    d = d * z + v;
    v = v * z + *it;
  }
  return {v, d};
}

long double scaled(const Monic& p, LComplex z) {
  const long double r = std::max(1.0L, std::abs(z));
  return std::abs(eval_with_derivative(p, z).first) / std::pow(r, p.degree());
}

void pair_conjugates(std::vector<LComplex>& z, long double snap_tol) {
  std::vector<bool> done(z.size(), false);
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (done[i]) continue;
    if (std::abs(z[i].imag()) < snap_tol * (1 + std::abs(z[i]))) {
      z[i] = {z[i].real(), 0.0L};
      done[i] = true;
      continue;
    }
    std::size_t best = z.size();
    long double best_dist = 0;
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (j == i || done[j] || (z[j].imag() > 0) == (z[i].imag() > 0)) continue;
      const long double dist = std::abs(z[j] - std::conj(z[i]));
      if (best == z.size() || dist < best_dist) {
        best = j;
        best_dist = dist;
      }
    }
    if (best == z.size()) continue;  // unpaired: leave as is, conj check will flag it
    const LComplex mean = (z[i] + std::conj(z[best])) / 2.0L;
    z[i] = mean;
    z[best] = std::conj(mean);
    done[i] = done[best] = true;
  }
}

}  // namespace

bool is_square_free(const Poly& p) {
  if (p.is_zero()) throw InputError("is_square_free: zero polynomial");
  return exact::gcd(p, p.derivative()).is_constant();
}

bool common_root_free(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) throw InputError("common_root_free: zero polynomial");
  return exact::gcd(p, q).is_constant();
}

double scaled_residual(const Poly& p, Complex z) {
  return static_cast<double>(scaled(to_monic(p), LComplex(z.real(), z.imag())));
}

RootSet find_roots(const Poly& p, double tol) {
  if (p.degree() < 1) throw PreconditionError("find_roots: polynomial must have degree >= 1");
  if (!is_square_free(p)) throw PreconditionError("find_roots: polynomial is not square-free");

  const Monic mp = to_monic(p);
  const int d = mp.degree();
  long double cauchy = 0;
  for (int k = 0; k < d; ++k) cauchy = std::max(cauchy, std::abs(mp.c[static_cast<std::size_t>(k)]));
  cauchy += 1;

  std::vector<LComplex> z(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    // Offset angle breaks the symmetry that would stall real-coefficient cases.
    const long double theta = 2 * std::numbers::pi_v<long double> * k / d + 0.4L;
    z[static_cast<std::size_t>(k)] = std::polar(cauchy, theta);
  }

  RootSet out;
  out.square_free_certificate = true;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    long double max_step = 0;
    for (std::size_t k = 0; k < z.size(); ++k) {
      const auto [v, dv] = eval_with_derivative(mp, z[k]);
      if (v == LComplex(0)) continue;
      const LComplex w = v / dv;
      LComplex s = 0;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != k) s += 1.0L / (z[k] - z[j]);
      const LComplex step = w / (1.0L - w * s);
      z[k] -= step;
      max_step = std::max(max_step, std::abs(step) / (1 + std::abs(z[k])));
    }
    out.iterations = iter + 1;
    if (max_step < 1e-17L) break;
  }
  for (int s = 0; s < kPolishSteps; ++s)
    for (auto& zk : z) {
      const auto [v, dv] = eval_with_derivative(mp, zk);
      if (dv != LComplex(0)) zk -= v / dv;
    }
  pair_conjugates(z, static_cast<long double>(tol));

  std::sort(z.begin(), z.end(), [](const LComplex& a, const LComplex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  long double worst = 0;
  for (const auto& zk : z) {
    worst = std::max(worst, scaled(mp, zk));
    out.roots.emplace_back(static_cast<double>(zk.real()), static_cast<double>(zk.imag()));
  }
  out.residual_bound = static_cast<double>(worst);
  if (!(out.residual_bound <= tol))
    throw RootFindError("find_roots: scaled residual " + fmt17(out.residual_bound) +
                            " above tolerance after " + std::to_string(out.iterations) + " iterations",
                        out.residual_bound);
  return out;
}

bool conj_symmetric(std::span<const Complex> roots, double tol) {
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    if (std::abs(roots[i].imag()) <= tol) continue;
    bool found = false;
    for (std::size_t j = 0; j < roots.size() && !found; ++j) {
      if (used[j]) continue;
      if (std::abs(roots[j] - std::conj(roots[i])) <= tol) {
        used[j] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool match_within(std::span<const Complex> found, std::span<const Complex> expected, double tol) {
  if (found.size() < expected.size()) return false;
  std::vector<bool> used(found.size(), false);
  for (const auto& e : expected) {
    std::size_t best = found.size();
    double best_dist = tol;
    for (std::size_t j = 0; j < found.size(); ++j) {
      if (used[j]) continue;
      const double dist = std::abs(found[j] - e);
      if (dist <= best_dist) {
        best = j;
        best_dist = dist;
      }
    }
    if (best == found.size()) return false;
    used[best] = true;
  }
  return true;
}

nlohmann::json to_json(const RootSet& rs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& z : rs.roots) arr.push_back({z.real(), z.imag()});
  return {{"roots", arr},
          {"residualBound", rs.residual_bound},
          {"squareFree", rs.square_free_certificate},
          {"iterations", rs.iterations}};
}

void write_csv_rows(std::ostream& os, std::span<const Complex> roots, const std::string& label) {
  for (const auto& z : roots) os << fmt17(z.real()) << ',' << fmt17(z.imag()) << ',' << label << '\n';
}

}  // namespace amvortex::roots
