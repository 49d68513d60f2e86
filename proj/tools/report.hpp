#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "stieltjes/validate/validate.hpp"

namespace stieltjes::cli {

struct MethodResult {
  std::string method;
  std::string value;    // exactly `digits` significant digits
  std::string err_est;
  long terms = 0;
  double ms = 0;
  bool converged = true;
  friend bool operator==(const MethodResult&, const MethodResult&) = default;
};

/// Pairwise agreement within combined err_est; symmetric by construction.
struct Agreement {
  std::vector<std::string> methods;
  std::vector<std::vector<bool>> matrix;
  friend bool operator==(const Agreement&, const Agreement&) = default;
};

struct Report {
  nlohmann::ordered_json request = nlohmann::ordered_json::object();
  std::vector<MethodResult> results;
  std::vector<Check> checks;
  Agreement agreement;
  std::vector<std::string> notes;
  friend bool operator==(const Report&, const Report&) = default;

  bool all_pass() const;
  std::vector<std::string> failing_ids() const;
};

nlohmann::ordered_json to_json(const Report& r);
/// Inverse of to_json; throws nlohmann::json::exception on malformed input.
Report report_from_json(const nlohmann::ordered_json& j);

std::string to_csv(const Report& r);
std::string to_plain(const Report& r);

}  // namespace stieltjes::cli
