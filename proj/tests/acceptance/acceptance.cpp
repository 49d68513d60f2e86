// One line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "stieltjes/core/core.hpp"
#include "stieltjes/hurwitz/hurwitz.hpp"
#include "stieltjes/lerch/lerch.hpp"
#include "stieltjes/ser/ser.hpp"
#include "stieltjes/specfun/specfun.hpp"

using namespace stieltjes;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> outputs;  // decimal strings, compared on rerun
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Real tenpow(long e) { return pow(Real(10L), Real(e)); }

bool close(const Real& x, const Real& y, int digits) {
  return abs(x - y) <= max(Real(1L), abs(y)) * tenpow(-digits);
}

std::string sci(const Real& x) { return x.is_zero() ? "0" : x.to_decimal(3); }

Outcome gamma1_prime_one() {
  Outcome o;
  auto t0 = Clock::now();
  WorkingPrecision wp(bits_for_digits(50));
  Real general = gamma_derivative(1, 1, Real(1L));
  Real closed = gamma1_prime_at_one_closed_form();
  double secs = seconds_since(t0);
  Real quoted = Real::parse("0.707385812532");
  bool q1 = abs(general - quoted) < Real(5e-13), q2 = abs(closed - quoted) < Real(5e-13);
  o.pass = q1 && q2 && close(general, closed, 40) && secs < 10;
  o.detail = general.to_decimal(20) + ", paths differ by " + sci(abs(general - closed)) + ", " +
             std::to_string(secs) + " s";
  o.outputs = {general.to_decimal(50), closed.to_decimal(50)};
  return o;
}

Outcome extremum() {
  Outcome o;
  auto e = find_gamma1_max(30);
  WorkingPrecision wp(bits_for_digits(30));
  Real da = abs(e.a_star - Real::parse("1.39112")), dg = abs(e.gamma1_at_star - Real::parse("0.0379557"));
  o.pass = da <= Real(1e-5) && dg <= Real(1e-6);
  o.detail = "a* = " + e.a_star.to_decimal(12) + ", gamma_1(a*) = " + e.gamma1_at_star.to_decimal(12);
  o.outputs = {e.a_star.to_decimal(30), e.gamma1_at_star.to_decimal(30)};
  return o;
}

Outcome euler_half() {
  Outcome o;
  auto e = gamma_exp_series_euler(30);
  WorkingPrecision wp(bits_for_digits(30));
  Real half = ldexp(const_euler(), -1);
  bool corr = abs(e.correction - Real::parse("0.0230957")) <= Real(1e-6);
  bool val = abs(e.value - half) <= tenpow(-30);
  o.pass = corr && val && e.terms_first <= 12 && e.terms_second <= 12;
  o.detail = "correction " + e.correction.to_decimal(10) + ", diff from gamma/2 " + sci(abs(e.value - half)) +
             ", terms " + std::to_string(e.terms_first) + "+" + std::to_string(e.terms_second);
  o.outputs = {e.correction.to_decimal(30), e.value.to_decimal(30)};
  return o;
}

Outcome gamma1_series() {
  Outcome o;
  auto g = gamma1_exp_series(25);
  auto r = stieltjes_reference(1, Real(1L), 35);
  WorkingPrecision wp(bits_for_digits(25));
  o.pass = close(g.value, r.value, 25);
  o.detail = "diff " + sci(abs(g.value - r.value));
  o.outputs = {g.value.to_decimal(25)};
  return o;
}

Outcome cross_matrix() {
  Outcome o;
  auto t0 = Clock::now();
  int pairs = 0, bad = 0;
  for (const char* as : {"3/4", "1", "3/2", "3"}) {
    Real a = Real::parse(as);
    for (unsigned n = 0; n <= 6; ++n) {
      std::vector<StieltjesValue> vals;
      for (Method m : methods_in_domain(n, a)) vals.push_back(compute_gamma(m, n, a, {.digits = 40}));
      WorkingPrecision wp(bits_for_digits(40));
      for (std::size_t i = 0; i < vals.size(); ++i) {
        o.outputs.push_back(vals[i].value.to_decimal(40));
        for (std::size_t j = i + 1; j < vals.size(); ++j, ++pairs)
          if (abs(vals[i].value - vals[j].value) > vals[i].err_est + vals[j].err_est) {
            ++bad;
            o.detail += std::string(" [") + as + " n" + std::to_string(n) + " " + method_name(vals[i].method) +
                        "/" + method_name(vals[j].method) + "]";
          }
      }
    }
  }
  double secs = seconds_since(t0);
  o.pass = bad == 0 && secs < 300;
  o.detail = std::to_string(pairs - bad) + "/" + std::to_string(pairs) + " pairs agree, " + std::to_string(secs) +
             " s" + o.detail;
  return o;
}

Outcome reflection() {
  Outcome o;
  auto p = prop10_check(Real(0.5), Prop10Part::i, 30);
  auto t = prop10_check(Real(mpq_class(1, 3)), Prop10Part::ii, 25);
  WorkingPrecision wp(bits_for_digits(30));
  Real target = const_euler() - log(const_pi()) + ldexp(const_log2(), 1);
  o.pass = close(p.lhs, target, 30) && close(p.rhs, target, 30) && close(t.lhs, t.rhs, 25);
  o.detail = "a=1/2 sides off by " + sci(abs(p.lhs - target)) + ", " + sci(abs(p.rhs - target)) +
             "; a=1/3 sides differ by " + sci(abs(t.lhs - t.rhs));
  o.outputs = {p.lhs.to_decimal(30), p.rhs.to_decimal(30), t.lhs.to_decimal(25), t.rhs.to_decimal(25)};
  return o;
}

Outcome knessl() {
  Outcome o;
  bool exact = true;
  for (unsigned long n : {1ul, 5ul, 10ul, 20ul}) {
    Real p = knessl_p_integral(n, 30);
    WorkingPrecision wp(bits_for_digits(30));
    Real want(ser_p(static_cast<unsigned>(n)));
    if (!close(p, want, 30)) {
      exact = false;
      o.detail += "n=" + std::to_string(n) + " off by " + sci(abs(p - want)) + "; ";
    }
    o.outputs.push_back(p.to_decimal(30));
  }
  const unsigned long n = 1000000;
  Real p = knessl_p_integral(n, 20);
  WorkingPrecision wp(bits_for_digits(20));
  Real miss = abs(p / knessl_asymptotic(n, 2) - Real(1L));
  Real L = log(Real(n));
  Real a3 = abs(knessl_coefficient(3)) / (L * L * L);
  // tolerance for the omitted 1/ln^3 n order
  Real tol(5e-2);
  o.pass = exact && miss <= tol;
  o.detail += "ratio miss at 1e6 " + sci(miss) + " (tolerance " + sci(tol) + ", A3/ln^3 n = " + sci(a3) + ")";
  o.outputs.push_back(p.to_decimal(20));
  return o;
}

Outcome euler_integral() {
  Outcome o;
  Real g = euler_gamma_integral(30);
  WorkingPrecision wp(bits_for_digits(30));
  o.pass = abs(g - const_euler()) <= tenpow(-30);
  o.detail = "diff " + sci(abs(g - const_euler()));
  o.outputs = {g.to_decimal(30)};
  return o;
}

Outcome bounds_grid() {
  Outcome o;
  int bad = 0;
  for (unsigned n = 1; n <= 30; ++n)
    for (int i = 1; i <= 10; ++i) {
      auto r = bounds_report(n, Real(mpq_class(i, 10)), 20);
      if (!r.satisfied_stated || !r.satisfied_zw) {
        ++bad;
        o.detail += " [n=" + std::to_string(n) + " a=" + std::to_string(i) + "/10]";
      }
      o.outputs.push_back(r.C_value.to_decimal(20));
    }
  o.pass = bad == 0;
  o.detail = std::to_string(300 - bad) + "/300 grid points inside both bounds" + o.detail;
  return o;
}

Outcome corollary5() {
  Outcome o;
  WorkingPrecision wp(bits_for_digits(20));
  for (const char* as : {"1/2", "1"}) {
    Real a = Real::parse(as);
    auto m = marichev_sum(1, a);
    Real closed = log(ldexp(const_pi(), 1)) / 2 - lngamma(a) - Real(1L);
    bool ok = close(m.sum, closed, 20);
    o.pass = o.pass && ok;
    o.detail += std::string("a=") + as + ": " + std::to_string(m.terms) + " terms, diff " +
                sci(abs(m.sum - closed)) + (a == Real(1L) ? "" : "; ");
    o.outputs.push_back(m.sum.to_decimal(20));
  }
  return o;
}

}  // namespace

int main() {
  init_mpfr_range();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"gamma_1'(1) by both paths", gamma1_prime_one},
      {"extremum of gamma_1", extremum},
      {"exponential series for gamma/2", euler_half},
      {"hypergeometric series for gamma_1", gamma1_series},
      {"cross-representation matrix", cross_matrix},
      {"reflection identities", reflection},
      {"Knessl integral and asymptotics", knessl},
      {"full-line integral for gamma", euler_integral},
      {"bounds grid", bounds_grid},
      {"Marichev sum with n = 1", corollary5},
  };

  int failures = 0;
  std::vector<std::vector<std::string>> first;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o = criteria[i].second();
    first.push_back(o.outputs);
    failures += !o.pass;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }

  // determinism: rerun everything from a cold cache
  clear_hurwitz_cache();
  std::string diffs;
  for (std::size_t i = 0; i < criteria.size(); ++i)
    if (criteria[i].second().outputs != first[i]) diffs += " " + std::to_string(i + 1);
  bool det = diffs.empty();
  failures += !det;
  std::printf("%s 11 determinism: %s\n", det ? "PASS" : "FAIL",
              det ? "rerun of criteria 1-10 reproduced every decimal string" : ("changed:" + diffs).c_str());
  return failures;
}
