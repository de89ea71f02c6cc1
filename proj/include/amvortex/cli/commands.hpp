#ifndef AMVORTEX_CLI_COMMANDS_HPP
#define AMVORTEX_CLI_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace amvortex::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitCertificate = 2,
  kExitInput = 3,
  kExitInconsistency = 4,
};

enum class Format { json, csv };

/// Result of one command: the artifact text, plus a metadata document that
/// goes to "<out>.meta.json" for CSV artifacts written to a file.
struct CommandOutput {
  int exit_code = kExitOk;
  std::string body;
  nlohmann::json meta;
};

struct GenOptions {
  int n = 1;
  std::string route = "wronskian";  // wronskian | recurrence | both
  int cap = 20;
  Format format = Format::json;
};
CommandOutput cmd_gen(const GenOptions& o);

struct CertifyOptions {
  std::string pair_file;
  std::string preset = "pq-roots";
  double tol = 1e-10;       // balance residual, max norm
  double root_tol = 1e-12;  // scaled root residual
};
CommandOutput cmd_certify(const CertifyOptions& o);
/// Same checks on an already parsed pair document.
nlohmann::json certify_pair(const nlohmann::json& pair, const CertifyOptions& o);

struct SearchCommandOptions {
  int m = 2;
  int n = 1;
  int tries = 100;
  unsigned long long seed = 0;
  std::string preset = "pq-roots";
  double tol = 1e-12;
};
CommandOutput cmd_search(const SearchCommandOptions& o);

struct PotentialOptions {
  double a1 = 1.0;
  double a2 = 0.0;
  std::vector<double> x1 = {0.5, 1.5, 11};  // lo, hi, steps
  std::vector<double> x2 = {-0.5, 0.5, 11};
  std::vector<double> radii = {1e-2, 1e-3, 1e-4};
  double tol = 1e-12;  // scaling spot-check
  Format format = Format::csv;
};
CommandOutput cmd_potential(const PotentialOptions& o);

struct ReducedOptions {
  int m = 2;
  int n = 1;
  std::vector<double> eps = {1e-3, 1e-5, 1e-8};
  double c1 = 0.0;
  std::string config_file;  // optional VortexConfig JSON; else the generated pair
  double root_tol = 1e-12;
};
CommandOutput cmd_reduced(const ReducedOptions& o);

/// Parses argv and runs one subcommand. Artifacts go to --out when given,
/// otherwise to out; diagnostics go to err. Returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace amvortex::cli

#endif  // AMVORTEX_CLI_COMMANDS_HPP
