#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace stieltjes::cli {

using nlohmann::ordered_json;

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::vector<std::string> Report::failing_ids() const {
  std::vector<std::string> ids;
  for (const auto& c : checks)
    if (!c.pass) ids.push_back(c.id);
  return ids;
}

ordered_json to_json(const Report& r) {
  ordered_json j;
  j["request"] = r.request;
  j["results"] = ordered_json::array();
  for (const auto& m : r.results)
    j["results"].push_back({{"method", m.method},
                            {"value", m.value},
                            {"err_est", m.err_est},
                            {"terms", m.terms},
                            {"ms", m.ms},
                            {"converged", m.converged}});
  j["checks"] = ordered_json::array();
  for (const auto& c : r.checks) j["checks"].push_back({{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}});
  if (!r.agreement.methods.empty())
    j["agreement"] = {{"methods", r.agreement.methods}, {"matrix", r.agreement.matrix}};
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

Report report_from_json(const ordered_json& j) {
  Report r;
  r.request = j.at("request");
  for (const auto& m : j.at("results"))
    r.results.push_back({m.at("method").get<std::string>(), m.at("value").get<std::string>(),
                         m.at("err_est").get<std::string>(), m.at("terms").get<long>(), m.at("ms").get<double>(),
                         m.value("converged", true)});
  for (const auto& c : j.at("checks"))
    r.checks.push_back({c.at("id").get<std::string>(), c.at("pass").get<bool>(), c.at("detail").get<std::string>()});
  if (j.contains("agreement")) {
    r.agreement.methods = j["agreement"].at("methods").get<std::vector<std::string>>();
    r.agreement.matrix = j["agreement"].at("matrix").get<std::vector<std::vector<bool>>>();
  }
  if (j.contains("notes")) r.notes = j["notes"].get<std::vector<std::string>>();
  return r;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char c : s) {
    if (c == '"') o += '"';
    o += c;
  }
  return o + '"';
}

std::string ms_text(double ms) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << ms;
  return os.str();
}

}  // namespace

std::string to_csv(const Report& r) {
  std::ostringstream os;
  os << "kind,id,value,err_est,terms,ms,pass,detail\n";
  for (const auto& m : r.results)
    os << "result," << csv_field(m.method) << ',' << m.value << ',' << m.err_est << ',' << m.terms << ','
       << ms_text(m.ms) << ',' << (m.converged ? "true" : "false") << ",\n";
  for (const auto& c : r.checks)
    os << "check," << csv_field(c.id) << ",,,,," << (c.pass ? "true" : "false") << ',' << csv_field(c.detail)
       << '\n';
  return os.str();
}

std::string to_plain(const Report& r) {
  std::ostringstream os;
  for (auto it = r.request.begin(); it != r.request.end(); ++it) {
    os << (it == r.request.begin() ? "" : " ") << it.key() << '=';
    os << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump());
  }
  os << '\n';
  if (!r.results.empty()) {
    std::size_t w = 6, vw = 5;
    for (const auto& m : r.results) {
      w = std::max(w, m.method.size());
      vw = std::max(vw, m.value.size());
    }
    os << '\n' << std::left << std::setw(static_cast<int>(w) + 2) << "method" << std::setw(static_cast<int>(vw) + 2)
       << "value" << std::setw(11) << "err_est" << std::setw(8) << "terms" << "ms\n";
    for (const auto& m : r.results)
      os << std::setw(static_cast<int>(w) + 2) << m.method << std::setw(static_cast<int>(vw) + 2) << m.value
         << std::setw(11) << m.err_est << std::setw(8) << m.terms << ms_text(m.ms)
         << (m.converged ? "" : "  (not converged)") << '\n';
  }
  if (!r.agreement.methods.empty()) {
    os << "\nagreement\n";
    for (std::size_t i = 0; i < r.agreement.methods.size(); ++i) {
      os << "  ";
      for (bool b : r.agreement.matrix[i]) os << (b ? '+' : 'x');
      os << "  " << r.agreement.methods[i] << '\n';
    }
  }
  if (!r.checks.empty()) {
    os << '\n';
    for (const auto& c : r.checks) os << (c.pass ? "PASS " : "FAIL ") << c.id << "  " << c.detail << '\n';
  }
  for (const auto& n : r.notes) os << "note: " << n << '\n';
  return os.str();
}

}  // namespace stieltjes::cli
