#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "commands.hpp"
#include "report.hpp"

using namespace stieltjes::cli;
using nlohmann::ordered_json;

namespace {

int significant_digits(const std::string& s) {
  int n = 0;
  bool lead = true;
  for (char c : s) {
    if (c == 'e' || c == 'E') break;
    if (c < '0' || c > '9') continue;
    if (lead && c == '0') continue;
    lead = false;
    ++n;
  }
  return n;
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(STIELTJES_CLI) + " " + args + " >/dev/null 2>&1";
  int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::filesystem::path temp_dir(const char* name) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("gamma: Euler's constant with every representation") {
  auto out = cmd_gamma({.k = 0, .a = "1", .digits = 30});
  REQUIRE(out.exit_code == kExitOk);
  const auto& r = out.report;
  REQUIRE(!r.results.empty());
  for (const auto& m : r.results) {
    CHECK(m.value == "0.577215664901532860606512090082");
    CHECK(significant_digits(m.value) == 30);
  }
  CHECK(std::is_sorted(r.checks.begin(), r.checks.end(), [](auto& x, auto& y) { return x.id < y.id; }));
  // prop2i needs a > 1
  CHECK(std::any_of(r.notes.begin(), r.notes.end(), [](auto& n) { return n.find("prop2i") != std::string::npos; }));
}

TEST_CASE("gamma: agreement matrix is square and symmetric") {
  auto out = cmd_gamma({.k = 2, .a = "3/2", .digits = 20});
  const auto& ag = out.report.agreement;
  REQUIRE(ag.matrix.size() == ag.methods.size());
  for (std::size_t i = 0; i < ag.matrix.size(); ++i)
    for (std::size_t j = 0; j < ag.matrix.size(); ++j) CHECK(ag.matrix[i][j] == ag.matrix[j][i]);
  CHECK(ag.methods.size() == 6);
}

TEST_CASE("gamma: domain errors and non-convergence") {
  CHECK(cmd_gamma({.k = 1, .a = "0", .digits = 20}).exit_code == kExitDomain);
  CHECK(cmd_gamma({.k = 1, .a = "-2", .digits = 20}).exit_code == kExitDomain);
  CHECK(cmd_gamma({.k = 1, .a = "1", .digits = 9}).exit_code == kExitDomain);
  CHECK(cmd_gamma({.k = 1, .a = "1", .digits = 10001}).exit_code == kExitDomain);
  CHECK(cmd_gamma({.k = 1, .a = "1", .digits = 20, .method = "prop2i"}).exit_code == kExitDomain);
  CHECK(cmd_gamma({.k = 1, .a = "1", .digits = 20, .method = "bogus"}).exit_code == kExitDomain);
  CHECK(cmd_gamma({.k = 1, .a = "x", .digits = 20}).exit_code == kExitDomain);
  // divergent asymptotic series at small a
  CHECK(cmd_gamma({.k = 3, .a = "1/2", .digits = 20, .method = "asymptotic"}).exit_code == kExitNoConvergence);
}

TEST_CASE("gamma: extremum value at ten digits") {
  auto out = cmd_gamma({.k = 1, .a = "1.39112", .digits = 10, .method = "reference"});
  REQUIRE(out.report.results.size() == 1);
  CHECK(std::abs(std::stod(out.report.results[0].value) - 0.0379557) < 1e-6);
  CHECK(significant_digits(out.report.results[0].value) == 10);
}

TEST_CASE("race: ordered by wall time, values agree") {
  auto out = cmd_race({.k = 2, .a = "0.75", .digits = 30});
  REQUIRE(out.exit_code == kExitOk);
  const auto& res = out.report.results;
  CHECK(std::is_sorted(res.begin(), res.end(), [](auto& x, auto& y) { return x.ms < y.ms; }));
  bool has_i = std::any_of(res.begin(), res.end(), [](auto& m) { return m.method == "prop2i"; });
  CHECK_FALSE(has_i);
  for (const auto& m : res) CHECK(m.value == res.front().value);
  CHECK(out.report.all_pass());
}

TEST_CASE("validate: prop9 suite passes and names the correction check") {
  auto out = cmd_validate("prop9", 25);
  CHECK(out.exit_code == kExitOk);
  const auto& c = out.report.checks;
  CHECK(std::any_of(c.begin(), c.end(), [](auto& x) { return x.id.find("correction≈0.0230957") != std::string::npos; }));
  CHECK(cmd_validate("nonsense", 25).exit_code == kExitDomain);
}

TEST_CASE("report: failing checks give exit status and ids") {
  Report r;
  r.checks = {{"a.one", true, ""}, {"b.two", false, "off"}};
  CHECK_FALSE(r.all_pass());
  CHECK(r.failing_ids() == std::vector<std::string>{"b.two"});
}

TEST_CASE("report: JSON round trip") {
  for (auto out : {cmd_gamma({.k = 1, .a = "3", .digits = 25}), cmd_validate("prop9", 25)}) {
    ordered_json j = to_json(out.report);
    Report back = report_from_json(ordered_json::parse(j.dump()));
    CHECK(back == out.report);
    CHECK(to_json(back).dump() == j.dump());
  }
}

TEST_CASE("report: CSV has one row per result and per check") {
  auto out = cmd_gamma({.k = 0, .a = "2", .digits = 20});
  std::string csv = to_csv(out.report);
  auto rows = std::count(csv.begin(), csv.end(), '\n');
  CHECK(rows == 1 + static_cast<long>(out.report.results.size() + out.report.checks.size()));
  CHECK(csv.find("result,reference,-0.42278433509846713939,") != std::string::npos);
}

TEST_CASE("dirichlet: character table file") {
  auto dir = temp_dir("stieltjes_cli_chi");
  std::filesystem::create_directories(dir);
  auto good = dir / "chi4.json", bad = dir / "bad.json";
  std::ofstream(good) << R"({"modulus": 4, "values": [[1, 0], [0, 0], [-1, 0], [0, 0]]})";
  std::ofstream(bad) << R"({"modulus": 4, "values": [1, 1, -1, 0]})";
  auto out = cmd_dirichlet(good.string(), 1, 20);
  CHECK(out.exit_code == kExitOk);
  REQUIRE(out.report.results.size() == 6);
  CHECK(out.report.results[2].method == "c0.re");
  CHECK(out.report.results[2].value == "0.78539816339744830962");
  CHECK(cmd_dirichlet(bad.string(), 1, 20).exit_code == kExitDomain);
  CHECK(cmd_dirichlet((dir / "missing.json").string(), 1, 20).exit_code == kExitDomain);
}

TEST_CASE("binary: exit codes and cache directory") {
  CHECK(run_cli("gamma --k 0 --a 1 --digits 12") == kExitOk);
  CHECK(run_cli("gamma --k 0 --a 0 --digits 12") == kExitDomain);
  CHECK(run_cli("gamma --k 0 --a 1 --digits 5") == kExitDomain);
  CHECK(run_cli("gamma --k 3 --a 1/2 --digits 20 --method asymptotic") == kExitNoConvergence);
  CHECK(run_cli("validate --suite prop9 --digits 25 --format json") == kExitOk);
  auto dir = temp_dir("stieltjes_cli_cache");
  CHECK(run_cli("--seed-cache " + dir.string() + " gamma --k 3 --a 2 --digits 12 --method prop2i") == kExitOk);
  CHECK(std::filesystem::exists(dir / "stirling1.txt"));
  // a corrupt cache is rebuilt, not trusted
  std::ofstream(dir / "stirling1.txt") << "garbage";
  CHECK(run_cli("--seed-cache " + dir.string() + " gamma --k 3 --a 2 --digits 12 --method prop2i") == kExitOk);
}
