#include "amvortex/exact/serialize.hpp"

#include "amvortex/error.hpp"

namespace amvortex::exact {

nlohmann::json to_json(const Poly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.str());
  return out;
}

BigRat rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return BigRat::parse(j.get<std::string>());
  if (j.is_number_integer()) return BigRat(j.get<long>());
  throw InputError("expected a rational string, got " + j.dump());
}

Poly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("expected a coefficient array, got " + j.dump());
  std::vector<BigRat> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return Poly(std::move(coeffs));
}

}  // namespace amvortex::exact
