#include "doctest.h"
#include "test_helpers.hpp"

#include "stieltjes/mp/jet.hpp"
#include "stieltjes/mp/quadrature.hpp"
#include "stieltjes/mp/summation.hpp"

using namespace stieltjes;
using testutil::close;

TEST_CASE("real: parse decimal and rational") {
  WorkingPrecision wp(bits_for_digits(40));
  CHECK(Real::parse("3/4") == Real(0.75));
  CHECK(Real::parse("-1.25") == Real(-1.25));
  CHECK_THROWS_AS(Real::parse("1.2x"), DomainError);
  CHECK_THROWS_AS(Real::parse("1/0"), DomainError);
}

TEST_CASE("real: decimal formatting carries the requested digits") {
  WorkingPrecision wp(bits_for_digits(40));
  CHECK(const_pi().to_decimal(10) == "3.141592654");
  CHECK(Real(1L).to_decimal(5) == "1.0000");
  CHECK(Real(0.5).to_decimal(3) == "0.500");
  CHECK(Real::parse("-1e-30").to_decimal(2) == "-1.0e-30");
}

TEST_CASE("real: precision doubling agrees within the guard constant") {
  Real lo_val, hi_val;
  {
    WorkingPrecision wp(200);
    lo_val = exp(sin(Real(1L)) / log(Real(3L))) + sqrt(Real(2L));
  }
  {
    WorkingPrecision wp(400);
    hi_val = exp(sin(Real(1L)) / log(Real(3L))) + sqrt(Real(2L));
  }
  WorkingPrecision wp(400);
  Real rel = abs(lo_val - hi_val) / abs(hi_val);
  CHECK(rel < ldexp(Real(1L), -200 + 8));
  // and the tracked error covers the actual deviation
  CHECK(abs(lo_val - hi_val) <= lo_val.err_as_real());
}

TEST_CASE("real: error estimate grows through sums and products") {
  WorkingPrecision wp(100);
  Real a(1L), b(3L);
  a.set_err(ErrMag::pow2(-50));
  Real c = a * b + a;
  CHECK(c.err().log2() >= -50 + 1.9);
}

TEST_CASE("summation: geometric series") {
  WorkingPrecision wp(bits_for_digits(40));
  auto r = sum_until_converged([](long n) { return ldexp(Real(1L), -n); }, ErrMag::pow2(-100),
                               SumOptions{.min_terms = 1, .max_terms = 500, .stability_window = 3, .first_index = 1});
  CHECK(r.converged);
  CHECK(close(r.value, Real(1L), 29));
  CHECK(r.tail_bound <= Real(1L) * ldexp(Real(1L), -99));
}

TEST_CASE("summation: zero series converges after min_terms") {
  auto r = sum_until_converged([](long) { return Real(0L); }, ErrMag::pow2(-60),
                               SumOptions{.min_terms = 7, .max_terms = 100});
  CHECK(r.converged);
  CHECK(r.terms_used == 7);
  CHECK(r.value.is_zero());
}

TEST_CASE("summation: max_terms reached reports non-convergence") {
  auto r = sum_until_converged([](long n) { return Real(1L) / (n + 1); }, ErrMag::pow2(-60),
                               SumOptions{.min_terms = 1, .max_terms = 50});
  CHECK_FALSE(r.converged);
  CHECK(r.terms_used == 50);
}

TEST_CASE("summation: non-finite term is a hard error") {
  WorkingPrecision wp(64);
  auto bad = [](long n) {
    Real r(1L);
    if (n == 4) mpfr_set_nan(r.raw());
    return r;
  };
  CHECK_THROWS_WITH_AS(sum_until_converged(bad, ErrMag::pow2(-30), SumOptions{.min_terms = 1, .max_terms = 10}),
                       "non-finite term at index 4", ConvergenceError);
}

TEST_CASE("summation: bad options are rejected") {
  auto t = [](long) { return Real(1L); };
  CHECK_THROWS_AS(sum_until_converged(t, ErrMag{}, {}), DomainError);
  CHECK_THROWS_AS(sum_until_converged(t, ErrMag::pow2(-3), SumOptions{.min_terms = 5, .max_terms = 2}), DomainError);
}

TEST_CASE("quadrature: simple integrals") {
  WorkingPrecision wp(bits_for_digits(40));
  auto r1 = integrate([](const Real& x) { return x; }, Real(0L), Real(1L), ErrMag::pow2(-130));
  CHECK(r1.converged);
  CHECK(close(r1.value, Real(0.5), 38));
  auto r2 = integrate_to_infinity([](const Real& t) { return exp(-t); }, Real(0L), ErrMag::pow2(-130));
  CHECK(r2.converged);
  CHECK(close(r2.value, Real(1L), 38));
  auto r3 = integrate_full_line([](const Real& x) { return Real(1L) / (Real(1L) + x * x); }, ErrMag::pow2(-130));
  CHECK(close(r3.value, const_pi(), 36));
}

TEST_CASE("quadrature: endpoint singularities") {
  WorkingPrecision wp(bits_for_digits(30));
  auto r = integrate([](const Real& x) { return Real(1L) / sqrt(x); }, Real(0L), Real(1L), ErrMag::pow2(-100));
  CHECK(close(r.value, Real(2L), 28));
  auto r2 = integrate([](const Real& x) { return log(x); }, Real(0L), Real(1L), ErrMag::pow2(-100));
  CHECK(close(r2.value, Real(-1L), 28));
}

TEST_CASE("quadrature: odd functions over symmetric intervals vanish") {
  WorkingPrecision wp(bits_for_digits(30));
  testutil::Gen g(11);
  for (int i = 0; i < 5; ++i) {
    Real c(g.uniform(0.5, 3.0));
    Real L(g.uniform(0.2, 2.0));
    auto r = integrate([&](const Real& x) { return sin(c * x) * exp(x * x / 4); }, -L, L, ErrMag::pow2(-100));
    CHECK(abs(r.value) < ldexp(Real(1L), -95));
  }
}

TEST_CASE("jet: reciprocal pole extraction") {
  WorkingPrecision wp(bits_for_digits(30));
  Real one(1L);
  {
    Jet j(one, 6);
    j[1] = Real(1L);
    auto sp = jet_reciprocal_pole(j);
    CHECK(sp.pole_coeff == Real(1L));
    for (std::size_t m = 0; m <= sp.regular.order(); ++m) CHECK(sp.regular[m].is_zero());
  }
  {
    Jet j(one, 6);
    j[1] = Real(2L);
    j[2] = Real(1L);
    CHECK(jet_reciprocal_pole(j).pole_coeff == Real(0.5));
  }
  {
    // (s-1) e^{s-1}: 1/j = e^{-t}/t, regular part sum_{m>=0} (-1)^{m+1} t^m/(m+1)!
    const std::size_t K = 6;
    Jet t(one, K + 2);
    t[1] = Real(1L);
    Jet e = exp(t);
    Jet j = t * e;
    auto sp = jet_reciprocal_pole(j);
    CHECK(sp.pole_coeff == Real(1L));
    Real fact(1L);
    for (std::size_t m = 0; m <= K; ++m) {
      fact = fact * static_cast<long>(m + 1);
      Real want = Real((m % 2 == 0) ? -1L : 1L) / fact;
      CHECK(close(sp.regular[m], want, 28));
    }
  }
  {
    Jet j(one, 3);
    j[2] = Real(1L);
    CHECK_THROWS_AS(jet_reciprocal_pole(j), DegeneratePoleError);
  }
}

TEST_CASE("jet: division by a series with zero constant term is rejected") {
  Jet a = Jet::constant(Real(0L), 3, Real(1L));
  Jet b(Real(0L), 3);
  b[1] = Real(1L);
  CHECK_THROWS_AS(a / b, DomainError);
}

namespace {

Jet composite(const Real& s0, std::size_t K) {
  Jet s = Jet::variable(s0, K);
  Jet x = exp(s * Real(0.25)) + s * s;
  Jet y = log(x) / (s + Real(3L));
  return pow(y + Real(2L), Real(1.5)) * pow(Real(3L), s);
}

}  // namespace

TEST_CASE("jet: order K agrees with order K+5 on shared coefficients") {
  WorkingPrecision wp(bits_for_digits(40));
  testutil::Gen g(7);
  for (int trial = 0; trial < 4; ++trial) {
    Real s0(g.uniform(-0.5, 2.0));
    const std::size_t K = static_cast<std::size_t>(g.integer(2, 9));
    Jet lo = composite(s0, K);
    Jet hi = composite(s0, K + 5);
    for (std::size_t m = 0; m <= K; ++m) CHECK(close(lo[m], hi[m], 38));
  }
}

TEST_CASE("jet: evaluating at the centre returns the scalar result") {
  WorkingPrecision wp(bits_for_digits(30));
  Real s0(0.7);
  Jet j = composite(s0, 5);
  Jet s = Jet::variable(s0, 0);
  Real scalar = pow(log(exp(s0 * Real(0.25)) + s0 * s0) / (s0 + Real(3L)) + Real(2L), Real(1.5)) * pow(Real(3L), s0);
  CHECK(close(j.evaluate(Real(0L)), scalar, 28));
  CHECK(close(j[0], scalar, 28));
  (void)s;
}

TEST_CASE("jet: derivative and Horner evaluation") {
  WorkingPrecision wp(bits_for_digits(30));
  Jet e = exp(Jet::variable(Real(0L), 20));
  CHECK(close(e.evaluate(Real(0.5)), exp(Real(0.5)), 20));
  CHECK(close(e.derivative(5), Real(1L), 28));
}
