#ifndef AMVORTEX_BALANCE_NEWTON_HPP
#define AMVORTEX_BALANCE_NEWTON_HPP

#include <string>

#include <json.hpp>

#include "amvortex/balance/config.hpp"

namespace amvortex::balance {

inline constexpr double kMergeSeparation = 1e-6;

enum class NewtonStatus {
  converged,
  max_iterations,
  singular_jacobian,
  merging,          // two points came within kMergeSeparation
  stalled,          // line search could not reduce the residual
  incompatible_rhs  // m rhs_a != n rhs_b: no configuration can balance
};

std::string to_string(NewtonStatus s);

struct NewtonResult {
  NewtonStatus status = NewtonStatus::max_iterations;
  VortexConfig config;
  int iterations = 0;
  double residual_norm = 0;  // max-norm of F - rhs over all equations
  double min_separation = 0;

  bool ok() const { return status == NewtonStatus::converged; }
};

struct NewtonOptions {
  int max_iter = 100;
  double tol = 1e-12;
};

/**
 * Damped Newton for F(X) = rhs.
 *
 * F is holomorphic in the points, so the complex Newton step equals the
 * step on the real-imaginary split. Translations are gauged out by pinning
 * the first b-point (the first a-point when n = 0), and the last equation
 * is dropped: the orientation-weighted sum of all equations is identically
 * m rhs_a - n rhs_b, so it carries no information once the rhs is
 * compatible. The reduced Jacobian is square and, at a nondegenerate
 * solution, invertible. Steps are halved until the residual decreases.
 */
NewtonResult newton_solve(const VortexConfig& start, const NewtonOptions& options = {});

nlohmann::json to_json(const NewtonResult& r);

}  // namespace amvortex::balance

#endif  // AMVORTEX_BALANCE_NEWTON_HPP
