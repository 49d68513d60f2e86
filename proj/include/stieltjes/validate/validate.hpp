#pragma once

#include <string>
#include <vector>

namespace stieltjes {

struct Check {
  std::string id;
  bool pass = false;
  std::string detail;
  friend bool operator==(const Check&, const Check&) = default;
};

/// Suite names accepted by run_suite, "all" excluded.
const std::vector<std::string>& suite_names();

/// Runs one suite (or "all") at `digits`; checks come back sorted by id.
/// Throws DomainError for an unknown suite.
std::vector<Check> run_suite(const std::string& suite, int digits);

}  // namespace stieltjes
