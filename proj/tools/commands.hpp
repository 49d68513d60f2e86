#pragma once

#include <string>

#include "report.hpp"

namespace stieltjes::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitNoConvergence = 3;

inline constexpr int kMinDigits = 10;
inline constexpr int kMaxDigits = 10000;

struct Outcome {
  Report report;
  int exit_code = kExitOk;
  std::string error;  // set when no report could be produced
};

struct GammaRequest {
  unsigned k = 0;
  std::string a;
  int digits = 30;
  std::string method = "all";
};

Outcome cmd_gamma(const GammaRequest& req);
/// All in-domain methods, results ordered by wall time; disagreement fails.
Outcome cmd_race(const GammaRequest& req);
Outcome cmd_validate(const std::string& suite, int digits);
/// Laurent data of L(s, chi) for a character table read from a JSON file
/// {"modulus": m, "values": [[re, im], ...]} listing chi(1..m).
Outcome cmd_dirichlet(const std::string& character_file, unsigned order, int digits);

}  // namespace stieltjes::cli
