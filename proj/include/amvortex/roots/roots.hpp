#ifndef AMVORTEX_ROOTS_ROOTS_HPP
#define AMVORTEX_ROOTS_ROOTS_HPP

#include <complex>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "amvortex/exact/poly.hpp"

namespace amvortex::roots {

using Complex = std::complex<double>;
using exact::Poly;

inline constexpr double kDefaultTol = 1e-12;

/// Roots of a square-free polynomial with their worst scaled residual
/// |p(z)| / (|lead| max(1,|z|)^deg).
struct RootSet {
  std::vector<Complex> roots;
  double residual_bound = 0.0;
  bool square_free_certificate = false;
  int iterations = 0;
};

/// Raised when simultaneous iteration stalls above the tolerance.
class RootFindError : public std::runtime_error {
 public:
  RootFindError(const std::string& what, double best_residual)
      : std::runtime_error(what), best_residual_(best_residual) {}
  double best_residual() const { return best_residual_; }

 private:
  double best_residual_;
};

/// gcd(p, p') is constant. Exact; throws InputError for p = 0.
bool is_square_free(const Poly& p);

/// gcd(p, q) is constant. Exact; throws InputError if either is zero.
bool common_root_free(const Poly& p, const Poly& q);

/**
 * All roots of p by Aberth-Ehrlich iteration in extended precision.
 *
 * Starts from a circle sized by the Cauchy bound, polishes each root with
 * Newton steps, then snaps near-real roots to the axis and averages the
 * remaining ones into exact conjugate pairs (p has rational, hence real,
 * coefficients). Roots come back sorted by (re, im).
 *
 * Throws PreconditionError when p is constant or not square-free, and
 * RootFindError when the scaled residual stays above tol.
 */
RootSet find_roots(const Poly& p, double tol = kDefaultTol);

/// Scaled residual |p(z)| / (|lead| max(1,|z|)^deg), evaluated in long double.
double scaled_residual(const Poly& p, Complex z);

/// Whether the multiset is closed under conjugation within tol (greedy).
bool conj_symmetric(std::span<const Complex> roots, double tol);

/// Greedy one-to-one matching: every expected value has a distinct found
/// value within tol.
bool match_within(std::span<const Complex> found, std::span<const Complex> expected, double tol);

nlohmann::json to_json(const RootSet& rs);

/// CSV rows "re,im,label" for each root; no header.
void write_csv_rows(std::ostream& os, std::span<const Complex> roots, const std::string& label);

}  // namespace amvortex::roots

#endif  // AMVORTEX_ROOTS_ROOTS_HPP
