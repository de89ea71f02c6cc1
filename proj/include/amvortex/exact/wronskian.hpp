#ifndef AMVORTEX_EXACT_WRONSKIAN_HPP
#define AMVORTEX_EXACT_WRONSKIAN_HPP

#include <span>

#include "amvortex/exact/exppoly.hpp"

namespace amvortex::exact {

/**
 * Wronskian det[f_j^{(i)}] of a nonempty list of exponential polynomials.
 *
 * Each column's smallest exponent is factored out first (differentiation
 * never creates new exponents), then the determinant is taken by
 * fraction-free Bareiss elimination in Q[x][e^x], where every division is
 * exact. Throws InputError on an empty list.
 */
ExpPoly wronskian(std::span<const ExpPoly> fs);

}  // namespace amvortex::exact

#endif  // AMVORTEX_EXACT_WRONSKIAN_HPP
