#ifndef AMVORTEX_BALANCE_JACOBIAN_HPP
#define AMVORTEX_BALANCE_JACOBIAN_HPP

#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "amvortex/balance/config.hpp"

namespace amvortex::balance {

using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kKernelTol = 1e-8;
inline constexpr double kAlignTol = 1e-10;

/// dF_k/dz_j: tau_j/(z_k - z_j)^2 off the diagonal, minus the row's
/// off-diagonal sum on it. Throws InputError on coincident points.
ComplexMatrix jacobian(const VortexConfig& cfg);

/// Central differences of balance_lhs with complex step h along each
/// coordinate (F is holomorphic, so a real step suffices).
ComplexMatrix jacobian_fd(const VortexConfig& cfg, double h);

struct NondegReport {
  std::vector<double> singular_values;  // descending
  int kernel_dim = 0;
  /// ||J 1|| <= align_tol * ||J||: translations are in the kernel.
  bool translation_aligned = false;
  /// ||J^T 1|| <= align_tol * ||J||: (1,...,1) spans the left kernel.
  bool transpose_kernel_aligned = false;
  /// ||J^T tau|| <= align_tol * ||J||: the orientation vector
  /// (1,..,1,-1,..,-1) spans the left kernel.
  bool orientation_left_kernel = false;
  double translation_residual = 0;   // ||J 1|| / ||J||
  double transpose_residual = 0;     // ||J^T 1|| / ||J||
  double orientation_residual = 0;   // ||J^T tau|| / ||J||
};

/// kernel_dim counts singular values below tol * sigma_max.
NondegReport nondegeneracy(const VortexConfig& cfg, double tol = kKernelTol,
                           double align_tol = kAlignTol);

/// Same analysis for an arbitrary square matrix with the given orientation
/// vector (used for synthetic matrices).
NondegReport analyze_matrix(const ComplexMatrix& j, const std::vector<double>& tau,
                            double tol = kKernelTol, double align_tol = kAlignTol);

nlohmann::json to_json(const NondegReport& r);

}  // namespace amvortex::balance

#endif  // AMVORTEX_BALANCE_JACOBIAN_HPP
