#ifndef AMVORTEX_EXACT_SERIALIZE_HPP
#define AMVORTEX_EXACT_SERIALIZE_HPP

#include <json.hpp>

#include "amvortex/exact/poly.hpp"

namespace amvortex::exact {

// Rationals travel as exact strings ("num/den", or "num" for integers);
// polynomials as ascending arrays of those strings.

inline nlohmann::json to_json(const BigRat& r) { return r.str(); }

nlohmann::json to_json(const Poly& p);

/// Throws InputError on anything but a string rational.
BigRat rational_from_json(const nlohmann::json& j);

/// Throws InputError on anything but an array of string rationals.
Poly poly_from_json(const nlohmann::json& j);

}  // namespace amvortex::exact

#endif  // AMVORTEX_EXACT_SERIALIZE_HPP
