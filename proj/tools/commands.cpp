#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>

#include "stieltjes/core/core.hpp"
#include "stieltjes/lerch/lerch.hpp"

namespace stieltjes::cli {
namespace {

using nlohmann::ordered_json;

constexpr Method kCandidates[] = {Method::reference, Method::prop2i, Method::prop2ii,
                                  Method::prop2iii,  Method::prop4,  Method::addition};

void check_digits(int digits) {
  if (digits < kMinDigits || digits > kMaxDigits)
    throw DomainError("digits must lie in [" + std::to_string(kMinDigits) + ", " + std::to_string(kMaxDigits) + "]");
}

std::string err_text(const Real& e) { return e.is_zero() ? "0" : e.to_decimal(3); }

Real parse_a(const std::string& text, int digits) {
  WorkingPrecision wp(bits_for_digits(digits + 10));
  Real a;
  try {
    a = Real::parse(text);
  } catch (const std::exception&) {
    throw DomainError("cannot parse a = '" + text + "'");
  }
  if (!a.is_finite()) throw DomainError("a must be finite");
  return a;
}

struct Timed {
  StieltjesValue v;
  double ms = 0;
};

Timed run(Method m, unsigned k, const Real& a, int digits) {
  auto t0 = std::chrono::steady_clock::now();
  Timed t{compute_gamma(m, k, a, {.digits = digits}), 0};
  t.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return t;
}

ordered_json gamma_request(const char* command, const GammaRequest& req) {
  return {{"command", command}, {"k", req.k}, {"a", req.a}, {"digits", req.digits}, {"method", req.method}};
}

/// Fills results, agreement and agree.* checks; returns the exit code.
int fill(Report& r, const std::vector<Timed>& runs, int digits) {
  WorkingPrecision wp(bits_for_digits(digits));
  bool converged = true;
  for (const auto& t : runs) {
    r.results.push_back({method_name(t.v.method), t.v.value.to_decimal(digits), err_text(t.v.err_est), t.v.terms,
                         t.ms, t.v.converged});
    converged = converged && t.v.converged;
  }
  std::size_t n = runs.size();
  if (n > 1) {
    r.agreement.matrix.assign(n, std::vector<bool>(n, true));
    for (const auto& t : runs) r.agreement.methods.push_back(method_name(t.v.method));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Real d = abs(runs[i].v.value - runs[j].v.value);
        Real tol = runs[i].v.err_est + runs[j].v.err_est;
        bool ok = d <= tol;
        r.agreement.matrix[i][j] = r.agreement.matrix[j][i] = ok;
        std::string x = method_name(runs[i].v.method), y = method_name(runs[j].v.method);
        if (y < x) std::swap(x, y);
        r.checks.push_back({"agree." + x + "~" + y, ok, "diff " + err_text(d) + " tol " + err_text(tol)});
      }
    std::sort(r.checks.begin(), r.checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  }
  if (!converged) return kExitNoConvergence;
  return r.all_pass() ? kExitOk : kExitCheckFailed;
}

template <class F>
Outcome guarded(F&& body) {
  try {
    return body();
  } catch (const DomainError& e) {
    return {{}, kExitDomain, e.what()};
  } catch (const ConvergenceError& e) {
    return {{}, kExitNoConvergence, e.what()};
  }
}

std::vector<Timed> run_all(const GammaRequest& req, const Real& a, Report& r) {
  std::vector<Timed> runs;
  auto in = methods_in_domain(req.k, a);
  for (Method m : kCandidates) {
    if (std::find(in.begin(), in.end(), m) == in.end()) {
      r.notes.push_back(method_name(m) + " skipped: a = " + req.a + " is outside its region of convergence");
      continue;
    }
    runs.push_back(run(m, req.k, a, req.digits));
  }
  return runs;
}

}  // namespace

Outcome cmd_gamma(const GammaRequest& req) {
  return guarded([&] {
    check_digits(req.digits);
    Real a = parse_a(req.a, req.digits);
    Outcome out;
    out.report.request = gamma_request("gamma", req);
    std::vector<Timed> runs;
    if (req.method == "all") {
      runs = run_all(req, a, out.report);
    } else {
      Method m = method_from_name(req.method);
      if (m == Method::prop2i || m == Method::prop2ii || m == Method::prop2iii) {
        auto v = m == Method::prop2i ? Prop2Variant::i : m == Method::prop2ii ? Prop2Variant::ii : Prop2Variant::iii;
        if (!prop2_in_domain(v, a)) throw DomainError(req.method + " does not converge at a = " + req.a);
      }
      runs.push_back(run(m, req.k, a, req.digits));
    }
    out.exit_code = fill(out.report, runs, req.digits);
    return out;
  });
}

Outcome cmd_race(const GammaRequest& req) {
  return guarded([&] {
    check_digits(req.digits);
    Real a = parse_a(req.a, req.digits);
    Outcome out;
    GammaRequest echo = req;
    echo.method = "all";
    out.report.request = gamma_request("race", echo);
    auto runs = run_all(req, a, out.report);
    std::stable_sort(runs.begin(), runs.end(), [](const Timed& x, const Timed& y) { return x.ms < y.ms; });
    if (!prop2_in_domain(Prop2Variant::i, a) && a.sign() > 0) {
      Real a1;
      {
        WorkingPrecision wp(bits_for_digits(req.digits + 10));
        a1 = a + Real(1L);
      }
      auto shifted = run(Method::prop2i, req.k, a1, req.digits);
      out.report.notes.push_back("prop2i at a + 1 would use " + std::to_string(shifted.v.terms) + " terms");
    }
    out.exit_code = fill(out.report, runs, req.digits);
    return out;
  });
}

Outcome cmd_validate(const std::string& suite, int digits) {
  return guarded([&] {
    check_digits(digits);
    Outcome out;
    out.report.request = {{"command", "validate"}, {"suite", suite}, {"digits", digits}};
    out.report.checks = run_suite(suite, digits);
    out.exit_code = out.report.all_pass() ? kExitOk : kExitCheckFailed;
    return out;
  });
}

namespace {

Real component(const ordered_json& v) {
  if (v.is_string()) return Real::parse(v.get<std::string>());
  if (v.is_number_integer()) return Real(v.get<long>());
  if (v.is_number()) return Real(v.get<double>());
  throw DomainError("character value components must be numbers or strings");
}

DirichletCharacter read_character(const std::string& file, int digits) {
  std::ifstream in(file);
  if (!in) throw DomainError("cannot open character file " + file);
  ordered_json j;
  try {
    j = ordered_json::parse(in);
    long m = j.at("modulus").get<long>();
    if (m < 1) throw DomainError("modulus must be positive");
    std::vector<Complex> values;
    WorkingPrecision wp(bits_for_digits(digits + 10));
    for (const auto& v : j.at("values")) {
      if (v.is_array() && v.size() == 2)
        values.push_back({component(v[0]), component(v[1])});
      else
        values.push_back({component(v), Real(0L)});
    }
    if (static_cast<long>(values.size()) != m) throw DomainError("values must list chi(1..modulus)");
    return DirichletCharacter(m, std::move(values), std::min(digits, 20));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed character file: ") + e.what());
  }
}

}  // namespace

Outcome cmd_dirichlet(const std::string& character_file, unsigned order, int digits) {
  return guarded([&] {
    check_digits(digits);
    DirichletCharacter chi = read_character(character_file, digits);
    Outcome out;
    out.report.request = {
        {"command", "dirichlet"}, {"character", character_file}, {"order", order}, {"digits", digits}};
    auto t0 = std::chrono::steady_clock::now();
    auto L = dirichlet_L_laurent(chi, order, digits);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    WorkingPrecision wp(bits_for_digits(digits));
    auto push = [&](const std::string& name, const Complex& c) {
      out.report.results.push_back({name + ".re", c.re.to_decimal(digits), err_text(c.re.err_as_real()),
                                    static_cast<long>(order), ms, true});
      out.report.results.push_back({name + ".im", c.im.to_decimal(digits), err_text(c.im.err_as_real()),
                                    static_cast<long>(order), ms, true});
    };
    push("pole", L.pole);
    for (std::size_t j = 0; j < L.coeffs.size(); ++j) push("c" + std::to_string(j), L.coeffs[j]);
    if (chi.is_principal()) {
      long units = 0;
      for (long k = 1; k <= chi.modulus(); ++k) units += !chi(k).re.is_zero();
      Real want = Real(mpq_class(units, chi.modulus()));
      Real d = abs(L.pole.re - want) + abs(L.pole.im);
      out.report.checks.push_back(
          {"dirichlet.pole", d <= pow(Real(10L), Real(static_cast<long>(1 - digits))), "phi(m)/m diff " + err_text(d)});
    } else {
      bool zero = L.pole.re.is_zero() && L.pole.im.is_zero();
      out.report.checks.push_back({"dirichlet.pole", zero, zero ? "pole vanishes" : "nonzero pole"});
    }
    out.exit_code = out.report.all_pass() ? kExitOk : kExitCheckFailed;
    return out;
  });
}

}  // namespace stieltjes::cli
