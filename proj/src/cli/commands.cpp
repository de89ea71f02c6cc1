#include "amvortex/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <CLI11.hpp>

#include "amvortex/balance/config.hpp"
#include "amvortex/balance/jacobian.hpp"
#include "amvortex/balance/newton.hpp"
#include "amvortex/balance/search.hpp"
#include "amvortex/cli/io.hpp"
#include "amvortex/error.hpp"
#include "amvortex/exact/serialize.hpp"
#include "amvortex/format.hpp"
#include "amvortex/gen/identities.hpp"
#include "amvortex/gen/pair.hpp"
#include "amvortex/gen/sequence.hpp"
#include "amvortex/ringpot/potential.hpp"
#include "amvortex/ringpot/reduced.hpp"
#include "amvortex/roots/roots.hpp"

namespace amvortex::cli {

using nlohmann::json;

namespace {

constexpr double kConjTol = 1e-8;

int grid_steps(double v, const char* what) {
  if (!(v >= 1.0) || v != std::floor(v) || v > 1e6)
    throw InputError(std::string(what) + ": step count must be a positive integer");
  return static_cast<int>(v);
}

}  // namespace

CommandOutput cmd_gen(const GenOptions& o) {
  if (o.n < 1 || o.n > o.cap)
    throw InputError("gen: --n must lie in [1, " + std::to_string(o.cap) + "]");
  if (o.route != "wronskian" && o.route != "recurrence" && o.route != "both")
    throw InputError("gen: unknown route '" + o.route + "'");
  CommandOutput res;
  const bool both = o.route == "both";
  const gen::AMSequence seq =
      gen::build_sequence(o.n, both ? gen::Route::wronskian : gen::parse_route(o.route), o.cap);
  json doc;
  doc["header"] = artifact_header("gen", "none", {{"arithmetic", "exact"}});
  doc["n"] = o.n;
  doc["route"] = o.route;
  if (both) {
    const auto other = gen::build_sequence(o.n, gen::Route::recurrence, o.cap);
    json mismatches = json::array();
    for (int k = 0; k < o.n; ++k)
      if (!(seq.polys[k] == other.polys[k])) mismatches.push_back(k + 1);
    doc["routesAgree"] = mismatches.empty();
    doc["routeMismatches"] = mismatches;
    if (!mismatches.empty()) res.exit_code = kExitInconsistency;
  }
  doc["P"] = exact::to_json(seq.polys[o.n - 1]);
  doc["sequence"] = gen::to_json(seq);
  if (o.n >= 2) doc["pair"] = gen::to_json(gen::normalized_pair(o.n - 1, seq));
  if (o.format == Format::json) {
    res.body = dump(doc);
    return res;
  }
  std::ostringstream csv;
  csv << "index,power,coefficient\n";
  for (int k = 0; k < o.n; ++k) {
    const auto& c = seq.polys[k].coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) csv << k + 1 << ',' << i << ',' << c[i].str() << '\n';
  }
  res.body = csv.str();
  doc.erase("sequence");
  res.meta = doc;
  return res;
}

json certify_pair(const json& pair_doc, const CertifyOptions& o) {
  const gen::NormalizedPair pair = gen::pair_from_json(pair_doc);
  const auto preset = balance::make_preset(o.preset, pair.m, pair.n);
  json certs = json::array();
  bool all = true;
  auto add = [&](const std::string& name, bool pass, json detail) {
    all = all && pass;
    certs.push_back({{"name", name}, {"pass", pass}, {"detail", std::move(detail)}});
  };

  const exact::Poly pq = gen::verify_pq(pair.p, pair.q, pair.m, pair.n);
  add("pq-equation", pq.is_zero(), {{"residual", exact::to_json(pq)}});
  const bool sf_p = roots::is_square_free(pair.p);
  const bool sf_q = roots::is_square_free(pair.q);
  add("H1-square-free-P", sf_p, json::object());
  add("H1-square-free-Q", sf_q, json::object());
  add("H2-common-root-free", roots::common_root_free(pair.p, pair.q), json::object());

  std::vector<balance::Complex> ra, rb;
  bool have_roots = true;
  auto solve = [&](const exact::Poly& poly, bool square_free, const std::string& name,
                   std::vector<balance::Complex>& dst) {
    if (poly.degree() == 0) {
      add(name, true, {{"roots", json::array()}});
      return;
    }
    if (!square_free) {
      have_roots = false;
      add(name, false, {{"skipped", "not square-free"}});
      return;
    }
    try {
      const auto rs = roots::find_roots(poly, o.root_tol);
      dst = rs.roots;
      add(name, true, roots::to_json(rs));
    } catch (const roots::RootFindError& e) {
      have_roots = false;
      add(name, false, {{"error", e.what()}, {"bestResidual", e.best_residual()}});
    }
  };
  solve(pair.p, sf_p, "roots-P", ra);
  solve(pair.q, sf_q, "roots-Q", rb);

  if (have_roots) {
    add("conjugate-symmetric", roots::conj_symmetric(ra, kConjTol) && roots::conj_symmetric(rb, kConjTol),
        json::object());
    balance::VortexConfig cfg;
    cfg.a = ra;
    cfg.b = rb;
    cfg.preset = balance::make_preset("pq-roots", pair.m, pair.n);
    cfg = balance::rescale(cfg, preset);
    const double res = balance::max_norm(balance::residual(cfg));
    add("balance-residual", res < o.tol, {{"maxNorm", res}, {"config", balance::to_json(cfg)}});
    if (cfg.size() >= 2) {
      const auto nd = balance::nondegeneracy(cfg);
      add("nondegenerate", nd.kernel_dim == 1 && nd.translation_aligned, balance::to_json(nd));
    } else {
      add("nondegenerate", true, {{"note", "single point"}});
    }
  } else {
    for (const char* name : {"conjugate-symmetric", "balance-residual", "nondegenerate"})
      add(name, false, {{"skipped", "roots unavailable"}});
  }
  return {{"m", pair.m}, {"n", pair.n}, {"certificates", certs}, {"allPass", all}};
}

CommandOutput cmd_certify(const CertifyOptions& o) {
  if (!(o.tol > 0) || !(o.root_tol > 0)) throw InputError("certify: tolerances must be positive");
  json doc;
  doc["header"] = artifact_header("certify", o.preset,
                                  {{"balanceResidual", o.tol},
                                   {"rootResidual", o.root_tol},
                                   {"conjugateSymmetry", kConjTol},
                                   {"kernel", balance::kKernelTol},
                                   {"alignment", balance::kAlignTol}});
  doc["pairFile"] = o.pair_file;
  const json report = certify_pair(read_json_file(o.pair_file), o);
  doc.update(report);
  CommandOutput res;
  res.exit_code = report["allPass"].get<bool>() ? kExitOk : kExitCertificate;
  res.body = dump(doc);
  return res;
}

CommandOutput cmd_search(const SearchCommandOptions& o) {
  if (!(o.tol > 0)) throw InputError("search: --tol must be positive");
  balance::SearchOptions so;
  so.tries = o.tries;
  so.seed = o.seed;
  so.preset = o.preset;
  so.newton.tol = o.tol;
  const auto result = balance::random_search(o.m, o.n, so);
  json doc;
  doc["header"] = artifact_header("search", o.preset,
                                  {{"newton", so.newton.tol},
                                   {"newtonMaxIterations", so.newton.max_iter},
                                   {"dedup", so.dedup_tol},
                                   {"mergeSeparation", balance::kMergeSeparation},
                                   {"kernel", balance::kKernelTol},
                                   {"alignment", balance::kAlignTol}});
  doc["tries"] = o.tries;
  doc["seed"] = o.seed;
  doc["startRadius"] = so.start_radius;
  doc.update(balance::to_json(result));
  return {kExitOk, dump(doc), json()};
}

CommandOutput cmd_potential(const PotentialOptions& o) {
  if (o.x1.size() != 3 || o.x2.size() != 3) throw InputError("potential: grid ranges are lo,hi,steps");
  const ringpot::HalfPlanePoint a{o.a1, o.a2};
  ringpot::GridSpec grid{o.x1[0], o.x1[1], grid_steps(o.x1[2], "--x1"),
                         o.x2[0], o.x2[1], grid_steps(o.x2[2], "--x2")};
  // scaling spot-check at a point off the ring center
  const ringpot::HalfPlanePoint x{o.a1 * 1.1, o.a2 + 0.2 * o.a1};
  const double base = ringpot::potential_A(a, x);
  const double scaled = ringpot::potential_A({2 * a.x1, 2 * a.x2}, {2 * x.x1, 2 * x.x2});
  const double rel = std::abs(scaled - base) / std::max(1.0, std::abs(base));
  const bool pass = rel <= o.tol;
  std::vector<double> radii;
  for (double r : o.radii)
    if (r < o.a1) radii.push_back(r);

  json meta;
  meta["header"] = artifact_header("potential", "none", {{"scaling", o.tol}});
  meta["ring"] = {o.a1, o.a2};
  meta["scalingCheck"] = {{"lambda", 2.0}, {"point", {x.x1, x.x2}}, {"relativeError", rel}, {"pass", pass}};
  meta["nearField"] = ringpot::to_json(ringpot::near_field_report(a, radii));
  CommandOutput res;
  res.exit_code = pass ? kExitOk : kExitCertificate;
  std::ostringstream csv;
  ringpot::write_grid_csv(csv, a, grid);
  if (o.format == Format::csv) {
    res.body = csv.str();
    res.meta = meta;
    return res;
  }
  json rows = json::array();
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    const std::string av = line.substr(c2 + 1);
    rows.push_back({{"x1", std::stod(line.substr(0, c1))},
                    {"x2", std::stod(line.substr(c1 + 1, c2 - c1 - 1))},
                    {"A", av.empty() ? json(nullptr) : json(std::stod(av))}});
  }
  meta["grid"] = rows;
  res.body = dump(meta);
  return res;
}

CommandOutput cmd_reduced(const ReducedOptions& o) {
  balance::VortexConfig cfg;
  if (!o.config_file.empty()) {
    cfg = balance::config_from_json(read_json_file(o.config_file));
  } else {
    if (o.m == o.n) throw InputError("reduced: m == n has no ring offset");
    if (o.n < 1 || o.m != o.n + 1)
      throw InputError("reduced: generated configurations exist for m = n + 1 >= 2; pass --config otherwise");
    const auto seq = gen::build_sequence(o.m, gen::Route::wronskian);
    const auto pair = gen::normalized_pair(o.n, seq);
    cfg.a = roots::find_roots(pair.p, o.root_tol).roots;
    cfg.b = roots::find_roots(pair.q, o.root_tol).roots;
    cfg.preset = balance::make_preset("pq-roots", o.m, o.n);
  }
  if (cfg.m() == cfg.n()) throw InputError("reduced: m == n has no ring offset");
  if (o.eps.empty()) throw InputError("reduced: --eps needs at least one value");
  const json residuals = ringpot::reduced_report(cfg, o.eps, o.c1);
  bool decreasing = true;
  for (std::size_t i = 1; i < o.eps.size(); ++i)
    if (o.eps[i] < o.eps[i - 1])
      decreasing = decreasing && residuals[fmt17(o.eps[i])]["rowNorm1"].get<double>() <
                                     residuals[fmt17(o.eps[i - 1])]["rowNorm1"].get<double>();
  json doc;
  doc["header"] = artifact_header("reduced", "reduced-leading",
                                  {{"rootResidual", o.root_tol}, {"fdStepRelative", 1e-6}});
  doc["m"] = cfg.m();
  doc["n"] = cfg.n();
  doc["alpha0"] = ringpot::alpha0(cfg.m(), cfg.n()).str();
  doc["c1"] = o.c1;
  doc["eps"] = o.eps;
  doc["config"] = balance::to_json(cfg);
  doc["residuals"] = residuals;
  doc["rowNorm1Decreasing"] = decreasing;
  return {kExitOk, dump(doc), json()};
}

namespace {

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw InputError("unknown format '" + s + "'");
}

void emit(const CommandOutput& res, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << res.body;
    return;
  }
  write_text_file(path, res.body);
  if (!res.meta.is_null()) write_text_file(path + ".meta.json", dump(res.meta));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vortex-ring equilibria from generating polynomials"};
  app.set_version_flag("--version", AMVORTEX_VERSION);
  app.require_subcommand(1);
  std::string out_path, format;

  GenOptions gen_o;
  auto* gen = app.add_subcommand("gen", "Generate the polynomial sequence up to P_n");
  gen->add_option("--n", gen_o.n, "Largest index")->required();
  gen->add_option("--route", gen_o.route, "wronskian, recurrence or both");
  gen->add_option("--cap", gen_o.cap, "Largest accepted n");

  CertifyOptions cert_o;
  auto* cert = app.add_subcommand("certify", "Certify a (P, Q) pair file");
  cert->add_option("pair", cert_o.pair_file, "Pair JSON")->required();
  cert->add_option("--preset", cert_o.preset, "Balance right-hand side");
  cert->add_option("--tol", cert_o.tol, "Balance residual tolerance");

  SearchCommandOptions search_o;
  auto* search = app.add_subcommand("search", "Random Newton search for balanced configurations");
  search->add_option("--m", search_o.m)->required();
  search->add_option("--n", search_o.n)->required();
  search->add_option("--tries", search_o.tries);
  search->add_option("--seed", search_o.seed);
  search->add_option("--preset", search_o.preset);
  search->add_option("--tol", search_o.tol, "Newton tolerance");

  PotentialOptions pot_o;
  std::string ring = "1,0", gx1 = "0.5,1.5,11", gx2 = "-0.5,0.5,11", radii = "1e-2,1e-3,1e-4";
  auto* pot = app.add_subcommand("potential", "Tabulate the ring potential A");
  pot->add_option("--a", ring, "Ring center a1,a2");
  pot->add_option("--x1", gx1, "lo,hi,steps");
  pot->add_option("--x2", gx2, "lo,hi,steps");
  pot->add_option("--r", radii, "Near-field radii");
  pot->add_option("--tol", pot_o.tol, "Scaling check tolerance");

  ReducedOptions red_o;
  std::string eps = "1e-3,1e-5,1e-8";
  auto* red = app.add_subcommand("reduced", "Reduced ring-system residuals per eps");
  red->add_option("--m", red_o.m);
  red->add_option("--n", red_o.n);
  red->add_option("--eps", eps, "Comma separated eps values");
  red->add_option("--c1", red_o.c1);
  red->add_option("--config", red_o.config_file, "VortexConfig JSON");

  for (auto* sub : {gen, cert, search, pot, red}) {
    sub->add_option("--out", out_path, "Output file (default stdout)");
    sub->add_option("--format", format, "json or csv");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    CommandOutput res;
    if (*gen) {
      gen_o.format = parse_format(format.empty() ? "json" : format);
      res = cmd_gen(gen_o);
    } else if (*cert) {
      if (!format.empty() && format != "json") throw InputError("certify writes json only");
      res = cmd_certify(cert_o);
    } else if (*search) {
      if (!format.empty() && format != "json") throw InputError("search writes json only");
      res = cmd_search(search_o);
    } else if (*pot) {
      const auto av = parse_double_list(ring);
      if (av.size() != 2) throw InputError("--a expects a1,a2");
      pot_o.a1 = av[0];
      pot_o.a2 = av[1];
      pot_o.x1 = parse_double_list(gx1);
      pot_o.x2 = parse_double_list(gx2);
      pot_o.radii = parse_double_list(radii);
      pot_o.format = parse_format(format.empty() ? "csv" : format);
      res = cmd_potential(pot_o);
    } else {
      if (!format.empty() && format != "json") throw InputError("reduced writes json only");
      red_o.eps = parse_double_list(eps);
      res = cmd_reduced(red_o);
    }
    emit(res, out_path, out);
    return res.exit_code;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const PreconditionError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InconsistencyError& e) {
    err << "inconsistency: " << e.what() << '\n';
    return kExitInconsistency;
  } catch (const NoSolutionError& e) {
    err << "inconsistency: " << e.what() << '\n';
    return kExitInconsistency;
  } catch (const roots::RootFindError& e) {
    err << "certificate failure: " << e.what() << '\n';
    return kExitCertificate;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"amvortex"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace amvortex::cli
