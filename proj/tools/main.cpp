#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "stieltjes/combinatorics/combinatorics.hpp"
#include "stieltjes/mp/real.hpp"

namespace cli = stieltjes::cli;

int main(int argc, char** argv) {
  stieltjes::init_mpfr_range();
  CLI::App app{"Stieltjes constants at arbitrary precision"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "plain";
  std::string cache_dir;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--seed-cache", cache_dir, "Directory for the Stirling table cache")->envname("STIELTJES_CACHE");

  cli::GammaRequest greq;
  auto* gamma = app.add_subcommand("gamma", "gamma_k(a) by one or all representations");
  gamma->add_option("--k", greq.k, "Index k")->required();
  gamma->add_option("--a", greq.a, "Shift a, decimal or p/q")->required();
  gamma->add_option("--digits", greq.digits, "Significant digits");
  gamma->add_option("--method", greq.method, "all or a method name");

  cli::GammaRequest rreq;
  auto* race = app.add_subcommand("race", "Time every in-domain representation");
  race->add_option("--k", rreq.k, "Index k")->required();
  race->add_option("--a", rreq.a, "Shift a, decimal or p/q")->required();
  race->add_option("--digits", rreq.digits, "Significant digits");

  std::string suite = "all";
  int vdigits = 30;
  auto* validate = app.add_subcommand("validate", "Run identity checks");
  validate->add_option("--suite", suite, "Suite")
      ->check(CLI::IsMember({"all", "addition", "prop2", "prop9", "ser", "lerch", "bounds", "prop6"}));
  validate->add_option("--digits", vdigits, "Significant digits");

  std::string chi_file;
  unsigned order = 3;
  int ddigits = 30;
  auto* dirichlet = app.add_subcommand("dirichlet", "Laurent coefficients of L(s, chi) at s = 1");
  dirichlet->add_option("--character", chi_file, "JSON character table")->required();
  dirichlet->add_option("--order", order, "Highest coefficient");
  dirichlet->add_option("--digits", ddigits, "Significant digits");

  CLI11_PARSE(app, argc, argv);

  std::filesystem::path cache_file;
  if (!cache_dir.empty()) {
    cache_file = stieltjes::stirling_cache_file(cache_dir);
    if (std::filesystem::exists(cache_file) && !stieltjes::StirlingTable::global().load(cache_file))
      std::cerr << "note: ignoring unreadable cache " << cache_file << '\n';
  }

  cli::Outcome out;
  if (*gamma)
    out = cli::cmd_gamma(greq);
  else if (*race)
    out = cli::cmd_race(rreq);
  else if (*validate)
    out = cli::cmd_validate(suite, vdigits);
  else
    out = cli::cmd_dirichlet(chi_file, order, ddigits);

  if (!cache_file.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(cache_dir, ec);
    if (!stieltjes::StirlingTable::global().save(cache_file))
      std::cerr << "note: could not write cache " << cache_file << '\n';
  }

  if (!out.error.empty()) {
    std::cerr << "error: " << out.error << '\n';
    return out.exit_code;
  }
  if (format == "json")
    std::cout << cli::to_json(out.report).dump(2) << '\n';
  else if (format == "csv")
    std::cout << cli::to_csv(out.report);
  else
    std::cout << cli::to_plain(out.report);
  if (out.exit_code == cli::kExitCheckFailed) {
    std::cerr << "failed:";
    for (const auto& id : out.report.failing_ids()) std::cerr << ' ' << id;
    std::cerr << '\n';
  } else if (out.exit_code == cli::kExitNoConvergence) {
    std::cerr << "error: a series did not converge\n";
  }
  return out.exit_code;
}
