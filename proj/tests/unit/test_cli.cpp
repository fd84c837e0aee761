#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "bnfourier");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = bnf::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(BNF_TEST_DATA) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const char* name) {
  const fs::path dir = fs::temp_directory_path() / ("bnfourier-cli-" + std::string(name));
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("spectrum subcommand") {
  const auto r = run({"spectrum", "--expr", "x1 AND x2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["coefficients"].size() == 4);
  CHECK(j["coefficients"][0]["coefficient"] == -0.5);
  for (int k = 1; k < 4; ++k) CHECK(j["coefficients"][k]["coefficient"] == 0.5);
  CHECK(j["coefficients"][3]["subset"] == "{x1,x2}");

  const auto x1 = nlohmann::json::parse(run({"spectrum", "--expr", "x1"}).out);
  CHECK(x1["coefficients"][0]["coefficient"] == 0.0);
  CHECK(x1["coefficients"][1]["coefficient"] == 1.0);

  const auto biased = nlohmann::json::parse(run({"spectrum", "--expr", "x1 AND x2", "--p", "0.3,0.3"}).out);
  double total = 0.0;
  for (const auto& row : biased["coefficients"]) total += row["coefficient"].get<double>() * row["coefficient"].get<double>();
  CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(biased["parseval"] == doctest::Approx(1.0));

  const auto csv = run({"spectrum", "--hex", "8", "--arity", "2", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("subset,degree,mask,coefficient\n\"{}\",0,0,-0.5\n", 0) == 0);
}

TEST_CASE("measures subcommand") {
  const auto parity = nlohmann::json::parse(
      run({"measures", "--expr", "(x1 AND NOT x2) OR (NOT x1 AND x2)", "--given", "x1"}).out);
  CHECK(parity["mutual_information"] == 0.0);
  CHECK(parity["independent"] == true);
  CHECK(parity["unateness"]["is_unate"] == false);

  const auto and3 = nlohmann::json::parse(run({"measures", "--expr", "x1 AND x2 AND x3", "--eps", "0.1"}).out);
  CHECK(and3["avg_sensitivity"] == 0.75);
  CHECK(and3["unateness"]["is_unate"] == true);
  CHECK(and3["noise_sensitivity"]["mode"] == "exact");
  CHECK(and3["cond_entropy"] == 0.0);

  const auto constant = nlohmann::json::parse(run({"measures", "--expr", "x1 OR NOT x1"}).out);
  CHECK(constant["entropy"] == 0.0);
  CHECK(constant["influences"][0]["value"] == 0.0);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"spectrum", "--format", "xml", "--expr", "a"}).code == 2);
  CHECK(run({"spectrum", "--expr", "a AND"}).code == 3);
  CHECK(run({"spectrum", "--expr", "a", "--p", "1.5"}).code == 3);
  CHECK(run({"spectrum", "--expr", "a AND b AND c", "--cap", "2"}).code == 4);
  CHECK(run({"collapse", data("cycle.bnet")}).code == 3);
  CHECK(run({"collapse", "/nonexistent.bnet"}).code == 3);
  const auto cap = run({"analyze", data("toy.bnet"), "--cap", "1", "--out", scratch("cap").string()});
  CHECK(cap.code == 4);
  CHECK(cap.err.find("y") != std::string::npos);
}

TEST_CASE("collapse subcommand") {
  const auto r = run({"collapse", data("mara_context.bnet")});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["constants"].size() == 2);
  CHECK(j["constants"][1]["name"] == "mara");
  CHECK(j["constants"][1]["value"] == 1);
  CHECK(j["non_effective_inputs"] == nlohmann::json::array({"salicylate"}));

  const auto bare = nlohmann::json::parse(run({"collapse", data("mara.bnet")}).out);
  CHECK(bare["constants"].empty());
  CHECK(bare["nodes"][1]["table"] == "df");

  const fs::path dir = scratch("collapse");
  CHECK(run({"collapse", data("mara.bnet"), "--out", dir.string()}).code == 0);
  CHECK(fs::exists(dir / "collapsed.json"));
}

TEST_CASE("analyze writes reports deterministically") {
  const fs::path a = scratch("a"), b = scratch("b");
  const auto ra = run({"analyze", data("toy.bnet"), "--out", a.string(), "--baseline", "exchange-random", "--trials",
                       "5", "--seed", "3", "--p", data("probs.txt"), "--svg"});
  REQUIRE(ra.code == 0);
  const auto rb = run({"analyze", data("toy.bnet"), "--out", b.string(), "--baseline", "exchange-random", "--trials",
                       "5", "--seed", "3", "--p", data("probs.txt"), "--threads", "2"});
  REQUIRE(rb.code == 0);
  for (const char* f : {"report.json", "curve.csv", "scatter.csv"}) CHECK(slurp(a / f) == slurp(b / f));
  CHECK(fs::exists(a / "curve.svg"));

  const auto report = nlohmann::json::parse(slurp(a / "report.json"));
  CHECK(report["metadata"]["seed"] == 3);
  CHECK(report["metadata"]["dataset"]["file"] == "toy.bnet");
  CHECK(report["metadata"]["distribution"]["p"] == nlohmann::json::array({0.25, 0.5, 0.75}));
  CHECK(report["tau"].size() == 3);
  CHECK(report["curve"].size() == 4);
  CHECK(report["baseline"]["mean"].size() == 4);
  CHECK(report["sensitivity"].size() == 3);
  CHECK(slurp(a / "curve.csv").rfind("l,A_l,mean,stddev\n", 0) == 0);
  CHECK(ra.out.find("rank") != std::string::npos);

  const auto other = scratch("c");
  REQUIRE(run({"analyze", data("toy.bnet"), "--out", other.string(), "--baseline", "exchange-random", "--trials",
               "5", "--seed", "4", "--p", data("probs.txt")}).code == 0);
  CHECK(slurp(other / "report.json") != slurp(a / "report.json"));
}

TEST_CASE("baseline and selftest subcommands") {
  const fs::path dir = scratch("baseline");
  const auto r = run({"baseline", data("toy.bnet"), "--mode", "random-topology-unate", "--trials", "4", "--out",
                      dir.string()});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(slurp(dir / "baseline.json"));
  CHECK(j["baseline"]["mode"] == "random-topology-unate");
  CHECK(j["baseline"]["trials"] == 4);
  CHECK(run({"baseline", data("toy.bnet")}).code == 2);

  const auto st = run({"selftest", "--trials", "20"});
  CHECK(st.code == 0);
  CHECK(st.out.find("PASS parseval") != std::string::npos);
  CHECK(st.out.find("FAIL") == std::string::npos);
}

TEST_CASE("probability specifications") {
  CHECK(run({"spectrum", "--expr", "a AND b", "--p", "0.2,0.4"}).code == 0);
  CHECK(run({"spectrum", "--expr", "a AND b", "--p", "0.2,0.4,0.5"}).code == 3);
  CHECK(run({"spectrum", "--expr", "a AND b AND c", "--p", data("probs.txt")}).code == 0);
  CHECK(run({"spectrum", "--expr", "a AND b AND d", "--p", data("probs.txt")}).code == 3);
}
