#include "amvortex/balance/newton.hpp"

#include <cmath>
#include <vector>

#include "amvortex/balance/jacobian.hpp"
#include "amvortex/error.hpp"

namespace amvortex::balance {

std::string to_string(NewtonStatus s) {
  switch (s) {
    case NewtonStatus::converged: return "converged";
    case NewtonStatus::max_iterations: return "max-iterations";
    case NewtonStatus::singular_jacobian: return "singular-jacobian";
    case NewtonStatus::merging: return "merging-configuration";
    case NewtonStatus::stalled: return "stalled";
    case NewtonStatus::incompatible_rhs: return "incompatible-rhs";
  }
  return "unknown";
}

namespace {

double l2(const std::vector<Complex>& v) {
  double s = 0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

}  // namespace

NewtonResult newton_solve(const VortexConfig& start, const NewtonOptions& options) {
  NewtonResult out;
  out.config = start;
  const int size = start.size();
  out.min_separation = min_separation(start);
  if (out.min_separation <= 0) throw InputError("newton_solve: start points are not distinct");

  const Complex compat =
      static_cast<double>(start.m()) * start.preset.rhs_a - static_cast<double>(start.n()) * start.preset.rhs_b;
  if (std::abs(compat) > 1e-12 * (1 + std::abs(start.preset.rhs_a) + std::abs(start.preset.rhs_b))) {
    out.status = NewtonStatus::incompatible_rhs;
    out.residual_norm = max_norm(residual(start));
    return out;
  }

  const int pinned = start.n() > 0 ? start.m() : 0;
  auto r = residual(out.config);
  out.residual_norm = max_norm(r);
  for (int iter = 0;; ++iter) {
    if (out.residual_norm < options.tol) {
      out.status = out.min_separation > kMergeSeparation ? NewtonStatus::converged : NewtonStatus::merging;
      return out;
    }
    if (iter >= options.max_iter) {
      out.status = NewtonStatus::max_iterations;
      return out;
    }
    if (size < 2) {
      // Nothing to move: a lone point either balances or never will.
      out.status = NewtonStatus::singular_jacobian;
      return out;
    }

    const ComplexMatrix j = jacobian(out.config);
    const Eigen::Index red = size - 1;
    ComplexMatrix jr(red, red);
    Eigen::VectorXcd rhs(red);
    for (Eigen::Index row = 0; row < red; ++row) {
      Eigen::Index c = 0;
      for (Eigen::Index col = 0; col < size; ++col) {
        if (col == pinned) continue;
        jr(row, c++) = j(row, col);
      }
      rhs(row) = -r[static_cast<std::size_t>(row)];
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(jr, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (sv(0) == 0 || sv(red - 1) < 1e-14 * sv(0)) {
      out.status = NewtonStatus::singular_jacobian;
      out.iterations = iter;
      return out;
    }
    const Eigen::VectorXcd step = svd.solve(rhs);

    const auto z0 = out.config.points();
    const double r0 = l2(r);
    double t = 1.0;
    bool accepted = false;
    for (int halving = 0; halving < 40; ++halving, t *= 0.5) {
      auto z = z0;
      Eigen::Index c = 0;
      for (int k = 0; k < size; ++k) {
        if (k == pinned) continue;
        z[static_cast<std::size_t>(k)] += t * step(c++);
      }
      VortexConfig trial = from_points(z, start.m(), start.preset);
      const double sep = min_separation(trial);
      if (sep <= 0) continue;
      const auto rt = residual(trial);
      if (l2(rt) < r0 || max_norm(rt) < options.tol) {
        out.config = std::move(trial);
        r = rt;
        out.min_separation = sep;
        accepted = true;
        break;
      }
    }
    out.iterations = iter + 1;
    out.residual_norm = max_norm(r);
    if (!accepted) {
      out.status = NewtonStatus::stalled;
      return out;
    }
    if (out.min_separation < kMergeSeparation) {
      out.status = NewtonStatus::merging;
      return out;
    }
  }
}

nlohmann::json to_json(const NewtonResult& r) {
  return {{"status", to_string(r.status)},
          {"iterations", r.iterations},
          {"residualNorm", r.residual_norm},
          {"minSeparation", r.min_separation},
          {"config", to_json(r.config)}};
}

}  // namespace amvortex::balance
