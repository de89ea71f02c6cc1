#ifndef AMVORTEX_TESTS_SUPPORT_HPP
#define AMVORTEX_TESTS_SUPPORT_HPP

#include <vector>

#include "amvortex/balance/config.hpp"
#include "amvortex/roots/roots.hpp"
#include "fixtures.hpp"

namespace support {

// Roots of a reference pair as a pq-roots configuration.
inline amvortex::balance::VortexConfig table_config(const fixtures::TablePair& t) {
  amvortex::balance::VortexConfig cfg;
  cfg.a = amvortex::roots::find_roots(t.p).roots;
  cfg.b = amvortex::roots::find_roots(t.q).roots;
  cfg.preset = amvortex::balance::make_preset("pq-roots", t.m, t.n);
  return cfg;
}

inline std::vector<amvortex::balance::VortexConfig> table_configs() {
  std::vector<amvortex::balance::VortexConfig> out;
  for (const auto& t : fixtures::table_pairs()) out.push_back(table_config(t));
  return out;
}

}  // namespace support

#endif  // AMVORTEX_TESTS_SUPPORT_HPP
