#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "amvortex/cli/commands.hpp"
#include "amvortex/cli/io.hpp"
#include "amvortex/error.hpp"

using namespace amvortex;
using namespace amvortex::cli;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch() {
  const std::filesystem::path dir(AMVORTEX_TEST_TMP);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string write_pair(const std::string& name, const json& doc) {
  const auto path = scratch() / name;
  write_text_file(path.string(), doc.dump());
  return path.string();
}

}  // namespace

TEST_CASE("list parsing") {
  CHECK(parse_double_list("1e-3,1e-5") == std::vector<double>{1e-3, 1e-5});
  CHECK_THROWS_AS(parse_double_list("1e-3,,2"), InputError);
  CHECK_THROWS_AS(parse_double_list("x"), InputError);
  CHECK_THROWS_AS(parse_double_list("1.5z"), InputError);
}

TEST_CASE("gen") {
  auto r = run({"gen", "--n", "2"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["P"] == json({"2", "-2", "1"}));
  CHECK(j["header"]["version"] == AMVORTEX_VERSION);
  CHECK(j["header"]["preset"] == "none");
  CHECK(j["header"].contains("tolerances"));

  r = run({"gen", "--n", "1"});
  CHECK(json::parse(r.out)["P"] == json({"0", "1"}));

  r = run({"gen", "--n", "6", "--route", "both"});
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["routesAgree"] == true);
  CHECK(j["pair"]["P"][0] == "3980046413/2916000000");
  CHECK(j["pair"]["Q"] == json({"23805769/48600000", "1112099/324000", "3607/3600", "1669/360", "0", "1"}));

  CHECK(run({"gen", "--n", "25"}).code == kExitInput);
  CHECK(run({"gen", "--n", "0"}).code == kExitInput);
  CHECK(run({"gen", "--n", "3", "--route", "magic"}).code == kExitInput);
}

TEST_CASE("gen csv with metadata sidecar") {
  const auto path = (scratch() / "seq.csv").string();
  REQUIRE(run({"gen", "--n", "3", "--format", "csv", "--out", path}).code == 0);
  const std::string csv = slurp(path);
  CHECK(csv.rfind("index,power,coefficient\n", 0) == 0);
  CHECK(csv.find("3,1,21/2\n") != std::string::npos);
  CHECK(csv.find('\r') == std::string::npos);
  const auto meta = json::parse(slurp(path + ".meta.json"));
  CHECK(meta["header"]["tool"] == "amvortex");
}

TEST_CASE("certify") {
  const auto gen = json::parse(run({"gen", "--n", "2"}).out);
  const auto p21 = write_pair("p21.json", gen["pair"]);
  auto r = run({"certify", p21});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["allPass"] == true);
  for (const auto& c : j["certificates"])
    if (c["name"] == "nondegenerate") CHECK(c["detail"]["kernelDim"] == 1);
  CHECK(j["header"]["preset"] == "pq-roots");
  CHECK(j["header"]["tolerances"]["balanceResidual"] == 1e-10);

  // roots are rescaled into the requested convention, here by 1/2
  r = run({"certify", p21, "--preset", "paper-balance"});
  CHECK(r.code == 0);
  for (const auto& c : json::parse(r.out)["certificates"])
    if (c["name"] == "balance-residual") CHECK(c["detail"]["config"]["b"][0][0].get<double>() == 0.0);
  for (const auto& c : json::parse(r.out)["certificates"])
    if (c["name"] == "balance-residual")
      CHECK(std::abs(c["detail"]["config"]["a"][0][1].get<double>()) == doctest::Approx(0.5));

  auto failed = [](const json& doc) {
    std::vector<std::string> names;
    for (const auto& c : doc["certificates"])
      if (!c["pass"].get<bool>()) names.push_back(c["name"]);
    return names;
  };
  const auto p41 = write_pair("p41.json", {{"m", 4}, {"n", 1}, {"P", {"0", "0", "0", "4", "1"}}, {"Q", {"0", "1"}}});
  r = run({"certify", p41});
  CHECK(r.code == kExitCertificate);
  auto names = failed(json::parse(r.out));
  CHECK(std::find(names.begin(), names.end(), "H1-square-free-P") != names.end());
  CHECK(std::find(names.begin(), names.end(), "H2-common-root-free") != names.end());

  const auto p53 = write_pair(
      "p53.json", {{"m", 5}, {"n", 3}, {"P", {"0", "8/27", "-8/9", "4/3", "-4/3", "1"}}, {"Q", {"0", "0", "0", "1"}}});
  r = run({"certify", p53});
  CHECK(r.code == kExitCertificate);
  names = failed(json::parse(r.out));
  CHECK(std::find(names.begin(), names.end(), "H1-square-free-Q") != names.end());

  const auto junk = scratch() / "junk.json";
  write_text_file(junk.string(), "{ not json");
  CHECK(run({"certify", junk.string()}).code == kExitInput);
  CHECK(run({"certify", (scratch() / "missing.json").string()}).code == kExitInput);
}

TEST_CASE("search") {
  auto r = run({"search", "--m", "2", "--n", "1", "--tries", "100", "--seed", "0"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["classes"].size() == 1);
  CHECK(run({"search", "--m", "2", "--n", "1", "--tries", "100", "--seed", "0"}).out == r.out);
  r = run({"search", "--m", "3", "--n", "1", "--tries", "200", "--seed", "0"});
  CHECK(json::parse(r.out)["classes"].empty());
  r = run({"search", "--m", "3", "--n", "2", "--tries", "200", "--seed", "0"});
  CHECK(json::parse(r.out)["classes"].size() >= 1);
  CHECK(run({"search", "--m", "1", "--n", "1"}).code == kExitInput);
}

TEST_CASE("potential") {
  const auto path = (scratch() / "grid.csv").string();
  REQUIRE(run({"potential", "--out", path, "--x1", "0.5,1.5,3", "--x2", "-0.5,0.5,3"}).code == 0);
  const std::string csv = slurp(path);
  CHECK(csv.rfind("x1,x2,A\n", 0) == 0);
  const auto meta = json::parse(slurp(path + ".meta.json"));
  CHECK(meta["scalingCheck"]["pass"] == true);
  CHECK(meta["nearField"].size() == 3);
  auto r = run({"potential", "--format", "json", "--x1", "0.5,1.5,3", "--x2", "-0.5,0.5,3"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["grid"].size() == 9);
  CHECK(run({"potential", "--x1", "0,1,3"}).code == kExitInput);
  CHECK(run({"potential", "--x1", "0.5,1,2.5"}).code == kExitInput);
  CHECK(run({"potential", "--a", "1"}).code == kExitInput);
}

TEST_CASE("reduced") {
  auto r = run({"reduced", "--m", "2", "--n", "1", "--eps", "1e-3,1e-5,1e-8"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["rowNorm1Decreasing"] == true);
  CHECK(j["alpha0"] == "6");
  CHECK(j["residuals"].size() == 3);
  CHECK(run({"reduced", "--m", "2", "--n", "2"}).code == kExitInput);
  CHECK(run({"reduced", "--m", "4", "--n", "1"}).code == kExitInput);
  CHECK(run({"reduced", "--eps", "2"}).code == kExitInput);
}

TEST_CASE("usage errors and version") {
  CHECK(run({}).code == kExitInput);
  CHECK(run({"frobnicate"}).code == kExitInput);
  CHECK(run({"gen"}).code == kExitInput);
  const auto v = run({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out.find(AMVORTEX_VERSION) != std::string::npos);
}
