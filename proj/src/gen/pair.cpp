#include "amvortex/gen/pair.hpp"

#include <string>

#include "amvortex/error.hpp"
#include "amvortex/exact/serialize.hpp"

namespace amvortex::gen {

NormalizedPair normalized_pair(int n, const AMSequence& seq) {
  if (n < 1 || n + 1 > seq.max_index)
    throw InputError("normalized_pair(" + std::to_string(n) + ") needs P_n and P_{n+1}; sequence has " +
                     std::to_string(seq.max_index) + " members");
  const Poly& qn = seq.at(n);
  const BigRat c = -qn.coeff(n - 1) / BigRat(n);
  NormalizedPair out;
  out.p = seq.at(n + 1).shifted(c);
  out.q = qn.shifted(c);
  out.m = n + 1;
  out.n = n;
  out.shift_used = c;
  return out;
}

std::optional<BigRat> find_translation(const Poly& p, const Poly& q) {
  if (p.degree() != q.degree() || p.is_zero()) return std::nullopt;
  if (p.degree() == 0) return p == q ? std::optional<BigRat>(BigRat(0)) : std::nullopt;
  const int d = p.degree();
  if (p.leading() != q.leading()) return std::nullopt;
  // [x^{d-1}] p(x + c) = p_{d-1} + d c p_d
  const BigRat c = (q.coeff(d - 1) - p.coeff(d - 1)) / (BigRat(d) * p.leading());
  if (p.shifted(c) != q) return std::nullopt;
  return c;
}

nlohmann::json to_json(const NormalizedPair& pair) {
  return {{"version", 1},
          {"m", pair.m},
          {"n", pair.n},
          {"P", exact::to_json(pair.p)},
          {"Q", exact::to_json(pair.q)},
          {"shift", exact::to_json(pair.shift_used)}};
}

NormalizedPair pair_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("pair document must be a JSON object");
  for (const char* key : {"m", "n", "P", "Q"})
    if (!j.contains(key)) throw InputError(std::string("pair document is missing '") + key + "'");
  NormalizedPair out;
  if (!j.at("m").is_number_integer() || !j.at("n").is_number_integer())
    throw InputError("pair document: 'm' and 'n' must be integers");
  out.m = j.at("m").get<int>();
  out.n = j.at("n").get<int>();
  out.p = exact::poly_from_json(j.at("P"));
  out.q = exact::poly_from_json(j.at("Q"));
  out.shift_used = j.contains("shift") ? exact::rational_from_json(j.at("shift")) : BigRat(0);
  if (out.p.degree() != out.m || out.q.degree() != out.n)
    throw InputError("pair document: degrees of P, Q do not match (m, n)");
  return out;
}

}  // namespace amvortex::gen
