#include "amvortex/balance/jacobian.hpp"

#include "amvortex/error.hpp"

namespace amvortex::balance {

ComplexMatrix jacobian(const VortexConfig& cfg) {
  const auto z = cfg.points();
  const auto tau = cfg.orientations();
  const auto n = static_cast<Eigen::Index>(z.size());
  ComplexMatrix j = ComplexMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Complex diag = 0;
    for (Eigen::Index l = 0; l < n; ++l) {
      if (l == k) continue;
      const Complex d = z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(l)];
      if (d == Complex(0)) throw InputError("jacobian: coincident points");
      const Complex entry = tau[static_cast<std::size_t>(l)] / (d * d);
      j(k, l) = entry;
      diag -= entry;
    }
    j(k, k) = diag;
  }
  return j;
}

ComplexMatrix jacobian_fd(const VortexConfig& cfg, double h) {
  const auto z = cfg.points();
  const auto n = static_cast<Eigen::Index>(z.size());
  ComplexMatrix j(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    auto zp = z, zm = z;
    zp[static_cast<std::size_t>(col)] += h;
    zm[static_cast<std::size_t>(col)] -= h;
    const auto fp = balance_lhs(from_points(zp, cfg.m(), cfg.preset));
    const auto fm = balance_lhs(from_points(zm, cfg.m(), cfg.preset));
    for (Eigen::Index row = 0; row < n; ++row)
      j(row, col) = (fp[static_cast<std::size_t>(row)] - fm[static_cast<std::size_t>(row)]) / (2 * h);
  }
  return j;
}

NondegReport analyze_matrix(const ComplexMatrix& j, const std::vector<double>& tau, double tol,
                            double align_tol) {
  NondegReport r;
  const auto n = j.rows();
  if (n == 0) return r;
  Eigen::JacobiSVD<ComplexMatrix> svd(j);
  const Eigen::VectorXd sv = svd.singularValues();
  r.singular_values.assign(sv.data(), sv.data() + sv.size());
  const double smax = r.singular_values.front();
  for (double s : r.singular_values)
    if (s < tol * smax) ++r.kernel_dim;
  if (smax == 0) {
    r.translation_aligned = r.transpose_kernel_aligned = r.orientation_left_kernel = true;
    return r;
  }
  const Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(n);
  Eigen::VectorXcd t(n);
  for (Eigen::Index k = 0; k < n; ++k) t(k) = tau[static_cast<std::size_t>(k)];
  r.translation_residual = (j * ones).norm() / smax;
  r.transpose_residual = (j.transpose() * ones).norm() / smax;
  r.orientation_residual = (j.transpose() * t).norm() / smax;
  r.translation_aligned = r.translation_residual <= align_tol;
  r.transpose_kernel_aligned = r.transpose_residual <= align_tol;
  r.orientation_left_kernel = r.orientation_residual <= align_tol;
  return r;
}

NondegReport nondegeneracy(const VortexConfig& cfg, double tol, double align_tol) {
  return analyze_matrix(jacobian(cfg), cfg.orientations(), tol, align_tol);
}

nlohmann::json to_json(const NondegReport& r) {
  return {{"singularValues", r.singular_values},
          {"kernelDim", r.kernel_dim},
          {"translationAligned", r.translation_aligned},
          {"transposeKernelAligned", r.transpose_kernel_aligned},
          {"orientationLeftKernel", r.orientation_left_kernel},
          {"translationResidual", r.translation_residual},
          {"transposeResidual", r.transpose_residual},
          {"orientationResidual", r.orientation_residual}};
}

}  // namespace amvortex::balance
