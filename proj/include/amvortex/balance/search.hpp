#ifndef AMVORTEX_BALANCE_SEARCH_HPP
#define AMVORTEX_BALANCE_SEARCH_HPP

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "amvortex/balance/jacobian.hpp"
#include "amvortex/balance/newton.hpp"

namespace amvortex::balance {

struct SearchOptions {
  int tries = 100;
  std::uint64_t seed = 0;
  std::string preset = "pq-roots";
  double start_radius = 3.0;
  double dedup_tol = 1e-6;
  NewtonOptions newton{200, 1e-12};
};

struct ConfigClass {
  VortexConfig config;  // centered representative
  int hits = 0;
  double residual_norm = 0;
  NondegReport nondeg;
};

struct SearchResult {
  int m = 0;
  int n = 0;
  std::vector<ConfigClass> classes;  // in order of first discovery
  std::map<std::string, int> outcomes;  // Newton status -> count
};

/// Generator for attempt `attempt`, derived only from (seed, attempt).
std::mt19937_64 attempt_rng(std::uint64_t seed, int attempt);

/// Uniform random points in the disk of the given radius, arranged as
/// conjugate pairs plus one real point when the count is odd.
std::vector<Complex> conjugate_symmetric_points(int count, double radius, std::mt19937_64& rng);

/// Newton from `tries` seeded conjugate-symmetric starts; converged results
/// are deduplicated up to translation. Throws InputError unless m > n >= 0.
SearchResult random_search(int m, int n, const SearchOptions& options);

nlohmann::json to_json(const SearchResult& r);

}  // namespace amvortex::balance

#endif  // AMVORTEX_BALANCE_SEARCH_HPP
