#ifndef AMVORTEX_GEN_SEQUENCE_HPP
#define AMVORTEX_GEN_SEQUENCE_HPP

#include <string_view>
#include <vector>

#include <json.hpp>

#include "amvortex/exact/exppoly.hpp"
#include "amvortex/exact/poly.hpp"

namespace amvortex::gen {

using exact::BigRat;
using exact::ExpPoly;
using exact::Poly;

inline constexpr int kDefaultMaxIndex = 20;

/// a_1 = 0, a_{j+1} = a_j + 2/j.
BigRat shift_value(int j);

/// omega_j = (x - a_j) e^{(j-1)x}.
ExpPoly omega(int j);

/// c_n = [ (n-1)! * prod_{1<=i<j<=n-1} (j-i) ]^{-1}.
BigRat norm_const(int n);

/// P_n = c_n e^{-n(n-1)x/2} W(omega_1, ..., omega_n), monic of degree n.
///
/// Throws InconsistencyError if the Wronskian has any exponent other than
/// n(n-1)/2 or the result is not monic of degree n.
Poly gen_wronskian(int n);

/// Solves P_n' y - P_n y' - (n+1) P_n y + (n+1) P_{n+1}^2 = 0 for the
/// polynomial y of degree n+2 by exact elimination over Q.
///
/// Throws NoSolutionError when the linear system is rank deficient or
/// inconsistent, i.e. (pn, pn1) are not consecutive members of the sequence.
Poly gen_recurrence(const Poly& pn, const Poly& pn1, int n);

enum class Route { wronskian, recurrence };

Route parse_route(std::string_view name);

/// The polynomials P_1..P_N together with the shifts a_1..a_N.
struct AMSequence {
  std::vector<Poly> polys;     // polys[k] is P_{k+1}
  std::vector<BigRat> shifts;  // shifts[k] is a_{k+1}
  int max_index = 0;

  /// 1-based access. Throws InputError outside 1..max_index.
  const Poly& at(int n) const;
};

/// Builds P_1..P_N by the chosen route. The recurrence route starts from
/// P_1 = x, P_2 = x^2 - 2x + 2. Throws InputError unless 1 <= N <= cap.
AMSequence build_sequence(int max_index, Route route, int cap = kDefaultMaxIndex);

nlohmann::json to_json(const AMSequence& seq);
AMSequence sequence_from_json(const nlohmann::json& j);

}  // namespace amvortex::gen

#endif  // AMVORTEX_GEN_SEQUENCE_HPP
