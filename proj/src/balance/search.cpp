#include "amvortex/balance/search.hpp"

#include <cmath>
#include <numbers>

#include "amvortex/error.hpp"

namespace amvortex::balance {

std::mt19937_64 attempt_rng(std::uint64_t seed, int attempt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(attempt)};
  return std::mt19937_64(seq);
}

std::vector<Complex> conjugate_symmetric_points(int count, double radius, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto in_disk = [&] {
    const double r = radius * std::sqrt(unit(rng));
    const double theta = 2 * std::numbers::pi * unit(rng);
    return std::polar(r, theta);
  };
  std::vector<Complex> out;
  for (int k = 0; k < count / 2; ++k) {
    const Complex z = in_disk();
    out.push_back(z);
    out.push_back(std::conj(z));
  }
  if (count % 2 == 1) out.emplace_back((2 * unit(rng) - 1) * radius, 0.0);
  return out;
}

SearchResult random_search(int m, int n, const SearchOptions& options) {
  if (!(m > n && n >= 0)) throw InputError("random_search: need m > n >= 0");
  if (options.tries < 0) throw InputError("random_search: tries must be >= 0");
  const RhsPreset preset = make_preset(options.preset, m, n);
  SearchResult out;
  out.m = m;
  out.n = n;
  for (int attempt = 0; attempt < options.tries; ++attempt) {
    auto rng = attempt_rng(options.seed, attempt);
    VortexConfig start;
    start.a = conjugate_symmetric_points(m, options.start_radius, rng);
    start.b = conjugate_symmetric_points(n, options.start_radius, rng);
    start.preset = preset;
    if (min_separation(start) <= 0) {
      ++out.outcomes["degenerate-start"];
      continue;
    }
    const NewtonResult res = newton_solve(start, options.newton);
    ++out.outcomes[to_string(res.status)];
    if (!res.ok()) continue;
    bool known = false;
    for (auto& cls : out.classes) {
      if (same_up_to_translation(cls.config, res.config, options.dedup_tol)) {
        ++cls.hits;
        known = true;
        break;
      }
    }
    if (!known) {
      ConfigClass cls;
      cls.config = centered(res.config);
      cls.hits = 1;
      cls.residual_norm = max_norm(residual(cls.config));
      cls.nondeg = nondegeneracy(cls.config);
      out.classes.push_back(std::move(cls));
    }
  }
  return out;
}

nlohmann::json to_json(const SearchResult& r) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : r.classes)
    classes.push_back({{"config", to_json(c.config)},
                       {"hits", c.hits},
                       {"residualNorm", c.residual_norm},
                       {"nondegeneracy", to_json(c.nondeg)}});
  return {{"m", r.m}, {"n", r.n}, {"classes", classes}, {"outcomes", r.outcomes}};
}

}  // namespace amvortex::balance
