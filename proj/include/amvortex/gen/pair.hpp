#ifndef AMVORTEX_GEN_PAIR_HPP
#define AMVORTEX_GEN_PAIR_HPP

#include <optional>

#include <json.hpp>

#include "amvortex/gen/sequence.hpp"

namespace amvortex::gen {

/// A solution pair of the bilinear equation with degrees (m, n), translated
/// so that Q has no x^{n-1} term.
struct NormalizedPair {
  Poly p;
  Poly q;
  int m = 0;
  int n = 0;
  BigRat shift_used;
};

/// P = P_{n+1}(x + c), Q = P_n(x + c) with c = -[x^{n-1}]P_n / n.
/// Throws InputError unless seq holds P_n and P_{n+1}.
NormalizedPair normalized_pair(int n, const AMSequence& seq);

/// The rational c with p(x + c) == q, if one exists.
std::optional<BigRat> find_translation(const Poly& p, const Poly& q);

nlohmann::json to_json(const NormalizedPair& pair);
/// Accepts {"m","n","P","Q"} with optional "shift". Throws InputError.
NormalizedPair pair_from_json(const nlohmann::json& j);

}  // namespace amvortex::gen

#endif  // AMVORTEX_GEN_PAIR_HPP
