#include "doctest.h"
#include "test_helpers.hpp"

#include <thread>

#include "stieltjes/hurwitz/hurwitz.hpp"
#include "stieltjes/mp/quadrature.hpp"
#include "stieltjes/specfun/specfun.hpp"

using namespace stieltjes;
using testutil::close;

TEST_CASE("hurwitz: zeta values") {
  WorkingPrecision wp(bits_for_digits(40));
  Real pi = const_pi();
  CHECK(close(hurwitz_zeta(Real(2L), Real(1L)), pi * pi / 6, 39));
  CHECK(close(hurwitz_zeta(Real(3L), Real(1L)), Real::parse("1.2020569031595942853997381615114499907650"), 39));
  Real s(3L), a(1.5);
  CHECK(close(hurwitz_zeta(s, a) - hurwitz_zeta(s, a + Real(1L)), pow(a, -s), 39));
  CHECK_THROWS_AS(hurwitz_zeta(Real(2L), Real(0L)), DomainError);
  CHECK_THROWS_AS(hurwitz_zeta(Real(1L), Real(1L)), DomainError);
}

TEST_CASE("hurwitz: telescoping holds for jets at random centres") {
  WorkingPrecision wp(bits_for_digits(30));
  testutil::Gen g(41);
  for (int i = 0; i < 6; ++i) {
    Real s0(g.uniform(-3.0, 6.0));
    if (abs(s0 - Real(1L)) < Real(0.1)) continue;
    Real a(g.uniform(0.05, 5.0));
    Jet lhs = hurwitz_zeta_jet(s0, 4, a) - hurwitz_zeta_jet(s0, 4, a + Real(1L));
    Jet rhs = inverse_power_jet(s0, 4, a, log(a));
    for (std::size_t m = 0; m <= 4; ++m) CHECK(close(lhs[m], rhs[m], 27));
  }
}

TEST_CASE("hurwitz: negative integers give Bernoulli polynomials") {
  WorkingPrecision wp(bits_for_digits(30));
  // zeta(-1, a) = -B_2(a)/2 = -(a^2 - a + 1/6)/2
  Real a(0.3);
  CHECK(close(hurwitz_zeta(Real(-1L), a), -(a * a - a + Real(1L) / 6) / 2, 29));
  CHECK(close(hurwitz_zeta(Real(0L), a), Real(0.5) - a, 29));
}

TEST_CASE("reference: gamma_0 equals minus digamma") {
  for (const char* as : {"1/2", "1", "2.75"}) {
    Real a;
    {
      WorkingPrecision wp(bits_for_digits(50));
      a = Real::parse(as);
    }
    auto v = stieltjes_reference(0, a, 50);
    WorkingPrecision wp(bits_for_digits(50));
    CHECK(close(v.value, -digamma(a), 49));
    CHECK(v.err_est.sign() > 0);
    CHECK(v.method == Method::reference);
  }
}

TEST_CASE("reference: Euler's constant and gamma_1") {
  auto g0 = stieltjes_reference(0, Real(1L), 30);
  WorkingPrecision wp(bits_for_digits(30));
  CHECK(g0.value.to_decimal(16) == "0.5772156649015329");
  auto g1 = stieltjes_reference(1, Real(1L), 30);
  CHECK(g1.value.to_decimal(15) == "-0.0728158454836767");
}

TEST_CASE("reference: value is stable across truncation and precision") {
  Real base;
  {
    WorkingPrecision wp(bits_for_digits(60));
    base = hurwitz_zeta_jet(Real(1L), 6, Real(1L), EmOptions{.N = 60, .M = 0}).derivative(3);
  }
  for (long N : {20L, 35L, 50L}) {
    WorkingPrecision wp(bits_for_digits(40));
    Real v = hurwitz_zeta_jet(Real(1L), 6, Real(1L), EmOptions{.N = N, .M = 0}).derivative(3);
    CHECK(close(v, base, 39));
  }
  {
    WorkingPrecision wp(bits_for_digits(40));
    HurwitzJet h = hurwitz_zeta_jet_detailed(Real(1L), 6, Real(1L), EmOptions{.N = 40, .M = 30});
    CHECK(h.M == 30);
    CHECK(close(h.jet.derivative(3), base, 39));
  }
}

TEST_CASE("reference: precision doubling moves the value less than err_est") {
  auto lo = stieltjes_reference(4, Real(0.3), 30);
  auto hi = stieltjes_reference(4, Real(0.3), 60);
  WorkingPrecision wp(bits_for_digits(60));
  CHECK(abs(lo.value - hi.value) <= lo.err_est);
}

TEST_CASE("laurent expansion: pole coefficient and regular part") {
  auto le = laurent_expansion(Real(2L), 6, 30);
  WorkingPrecision wp(bits_for_digits(30));
  CHECK(le.pole_coeff == Real(1L));
  REQUIRE(le.gammas.size() == 7);
  CHECK(close(le.gammas[0].value, -digamma(Real(2L)), 29));
  // evaluate the expansion near s = 1 against a direct value
  Real t(0.01);
  Real series = Real(1L) / t;
  Real fact(1L), tp(1L);
  for (unsigned k = 0; k <= 6; ++k) {
    if (k > 0) {
      fact = fact * static_cast<long>(k);
      tp = tp * t;
    }
    Real term = le.gammas[k].value * tp / fact;
    series += (k % 2) ? -term : term;
  }
  CHECK(close(series, hurwitz_zeta(Real(1.01), Real(2L)), 15));
}

TEST_CASE("shift identity for gamma_k(a+n)") {
  WorkingPrecision wp(bits_for_digits(30));
  for (double ad : {0.3, 1.0, 2.2}) {
    Real a(ad);
    auto ga = stieltjes_gammas(a, 6);
    for (long n = 1; n <= 5; ++n) {
      auto gn = stieltjes_gammas(a + Real(n), 6);
      for (unsigned k = 0; k <= 6; ++k) {
        Real corr;
        for (long j = 0; j < n; ++j) {
          Real x = a + Real(j);
          corr += pow(log(x), static_cast<long>(k)) / x;
        }
        CHECK(close(gn[k], ga[k] - corr, 28));
      }
    }
  }
}

TEST_CASE("integral representation with the complex logarithm") {
  WorkingPrecision wp(bits_for_digits(30));
  for (long a : {1L, 2L})
    for (unsigned k = 0; k <= 3; ++k) CHECK(close(gamma_hermite_integral(k, Real(a)), stieltjes_gamma(k, Real(a)), 28));
}

TEST_CASE("zeta derivatives at zero") {
  WorkingPrecision wp(bits_for_digits(30));
  Real two_pi = ldexp(const_pi(), 1);
  CHECK(close(zeta_deriv_at_zero(1, Real(1L)), -log(two_pi) / 2, 29));
  // a = 2: zeta'(0,2) = zeta'(0,1) + ln 1, and the jet about s0 = 0 agrees
  CHECK(close(zeta_deriv_at_zero(1, Real(2L)), hurwitz_zeta_jet(Real(0L), 1, Real(2L)).derivative(1), 29));
  CHECK(close(zeta_deriv_at_zero(1, Real(2L)), zeta_deriv_at_zero(1, Real(1L)), 29));
  for (unsigned j = 1; j <= 4; ++j) {
    Real a(0.37);
    CHECK(close(zeta_deriv_at_zero(j, a), hurwitz_zeta_jet(Real(0L), j, a).derivative(j), 28));
  }
  // Lerch: zeta'(0,a) = ln Gamma(a) - ln(2 pi)/2
  CHECK(close(zeta_deriv_at_zero(1, Real(0.8)), lngamma(Real(0.8)) - log(two_pi) / 2, 29));
}

TEST_CASE("zeta derivatives at zero integrate to zero over the unit interval") {
  WorkingPrecision wp(bits_for_digits(12));
  for (unsigned j = 1; j <= 2; ++j) {
    auto r = integrate([&](const Real& a) { return zeta_deriv_at_zero(j, a); }, Real(0L), Real(1L), ErrMag::pow2(-40));
    CHECK(abs(r.value) < Real(1e-9));
  }
}

TEST_CASE("auxiliary constants") {
  auto c = aux_constants(40);
  WorkingPrecision wp(bits_for_digits(40));
  Real pi = const_pi();
  Real z2 = pi * pi / 6;
  Real rhs = z2 * (const_euler() + log(ldexp(pi, 1)) - Real(1L) + c.zeta_prime_minus1 * 12L);
  CHECK(close(c.zeta_prime_2, rhs, 38));
  CHECK(abs(c.log_glaisher - Real(1L) / 12 + c.zeta_prime_minus1) < testutil::tenpow(-39));
  CHECK(c.zeta_prime_2.to_decimal(16) == "-0.9375482543158438");
}

TEST_CASE("Marichev-type sums") {
  WorkingPrecision wp(bits_for_digits(25));
  for (unsigned n = 0; n <= 2; ++n)
    for (const char* as : {"1/2", "1"}) {
      auto m = marichev_sum(n, Real::parse(as));
      CHECK(close(m.sum, m.expected, 22));
    }
  // n = 1 closed form
  for (const char* as : {"1/2", "1"}) {
    Real a = Real::parse(as);
    auto m = marichev_sum(1, a);
    Real closed = log(ldexp(const_pi(), 1)) / 2 - lngamma(a) - Real(1L);
    CHECK(close(m.sum, closed, 22));
  }
}

TEST_CASE("unit-interval integral of the Laurent coefficients") {
  WorkingPrecision wp(bits_for_digits(15));
  for (unsigned j = 0; j <= 1; ++j)
    for (double zd : {1.0, 0.5}) {
      auto r = prop6_integral(j, Real(zd));
      CHECK(close(r.lhs, r.rhs, 6));
      CHECK(r.terms > 0);
    }
}

TEST_CASE("jet cache: concurrent lookups agree with direct evaluation") {
  clear_hurwitz_cache();
  std::vector<Real> got(4);
  std::vector<std::thread> th;
  for (int i = 0; i < 4; ++i)
    th.emplace_back([&, i] {
      WorkingPrecision wp(bits_for_digits(30));
      got[i] = hurwitz_zeta_jet_cached(Real(3L), 2 + i % 2, Real(0.75))[2];
    });
  for (auto& t : th) t.join();
  WorkingPrecision wp(bits_for_digits(30));
  Real direct = hurwitz_zeta_jet(Real(3L), 2, Real(0.75))[2];
  for (auto& g : got) CHECK(g.to_decimal(30) == direct.to_decimal(30));
}
