#include "doctest.h"
#include "test_helpers.hpp"

#include <filesystem>
#include <fstream>
#include <thread>

#include "stieltjes/combinatorics/combinatorics.hpp"
#include "stieltjes/mp/jet.hpp"

using namespace stieltjes;

TEST_CASE("stirling1: small values") {
  CHECK(stirling1(0, 0) == 1);
  CHECK(stirling1(4, 1) == -6);
  CHECK(stirling1(4, 2) == 11);
  CHECK(stirling1(4, 3) == -6);
  CHECK(stirling1(4, 4) == 1);
  CHECK(stirling1(3, 5) == 0);
  CHECK(stirling1(5, 0) == 0);
}

TEST_CASE("stirling1: recurrence and boundary values") {
  for (unsigned n = 0; n <= 40; ++n) {
    CHECK(stirling1(n, n) == 1);
    CHECK(stirling1(n, 0) == (n == 0 ? 1 : 0));
    for (unsigned k = 1; k <= n + 1; ++k)
      CHECK(stirling1(n + 1, k) == stirling1(n, k - 1) - mpz_class(n) * stirling1(n, k));
  }
}

TEST_CASE("stirling1: row sums give the falling factorial at x=2") {
  for (unsigned n = 0; n <= 30; ++n) {
    mpz_class lhs = 0;
    for (unsigned k = 0; k <= n; ++k) lhs += stirling1(n, k) * (mpz_class(1) << k);
    mpz_class rhs = 1;
    for (unsigned i = 0; i < n; ++i) rhs *= mpz_class(2) - mpz_class(i);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("stirling1: binomial-weighted column identity") {
  for (unsigned j = 0; j <= 25; ++j)
    for (unsigned l = 0; l <= j; ++l) {
      mpz_class lhs = 0;
      for (unsigned k = l; k <= j; ++k) {
        mpz_class t = stirling1(j, k) * binomial(k, l);
        lhs += (k % 2) ? mpz_class(-t) : t;
      }
      mpz_class rhs = stirling1(j + 1, l + 1);
      if (l % 2) rhs = -rhs;
      CHECK(lhs == rhs);
    }
}

TEST_CASE("stirling1: harmonic-number forms of the first columns") {
  for (unsigned n = 1; n <= 20; ++n) {
    mpz_class nf = factorial(n);
    mpq_class sgn = (n % 2) ? -1 : 1;
    CHECK(mpq_class(stirling1(n + 1, 1)) == sgn * nf);
    CHECK(mpq_class(stirling1(n + 1, 2)) == -sgn * nf * harmonic(n));
    mpq_class h = harmonic(n), h2 = harmonic(n, 2);
    CHECK(mpq_class(stirling1(n + 1, 3)) == sgn * nf * (h * h - h2) / 2);
  }
}

TEST_CASE("stirling1: widening the column limit keeps earlier entries") {
  StirlingTable t;
  t.reserve(50, 3);
  mpz_class a = t.get(50, 3);
  mpz_class b = t.get(50, 20);
  CHECK(a == stirling1(50, 3));
  CHECK(b == stirling1(50, 20));
  CHECK(t.k_max() >= 20);
}

TEST_CASE("stirling1: concurrent readers see identical values") {
  StirlingTable t;
  std::vector<mpz_class> got(4);
  std::vector<std::thread> ths;
  for (int i = 0; i < 4; ++i) ths.emplace_back([&, i] { got[i] = t.get(120 + i % 2, 7); });
  for (auto& th : ths) th.join();
  CHECK(got[0] == stirling1(120, 7));
  CHECK(got[1] == stirling1(121, 7));
  CHECK(got[0] == got[2]);
}

TEST_CASE("stirling1: cache file round trip and corruption") {
  auto dir = std::filesystem::temp_directory_path() / "stieltjes_cache_test";
  std::filesystem::remove_all(dir);
  auto file = stirling_cache_file(dir);
  StirlingTable t;
  t.reserve(30, 10);
  REQUIRE(t.save(file));
  StirlingTable u;
  REQUIRE(u.load(file));
  CHECK(u.n_max() == 30);
  CHECK(u.get(30, 10) == stirling1(30, 10));

  {
    std::ifstream in(file);
    std::string all((std::istreambuf_iterator<char>(in)), {});
    all[all.size() - 3] = all[all.size() - 3] == '1' ? '2' : '1';
    std::ofstream out(file);
    out << all;
  }
  StirlingTable v;
  CHECK_FALSE(v.load(file));
  {
    std::ofstream out(file);
    out << "garbage\n";
  }
  CHECK_FALSE(v.load(file));
  CHECK_FALSE(v.load(dir / "missing.txt"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("bernoulli: values and odd zeros") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == mpq_class(-1, 2));
  CHECK(bernoulli(2) == mpq_class(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(4) == mpq_class(-1, 30));
  CHECK(bernoulli(12) == mpq_class(-691, 2730));
  for (unsigned m = 1; m < 60; ++m) CHECK(bernoulli(2 * m + 1) == 0);
}

TEST_CASE("bernoulli: defining recurrence") {
  for (unsigned m = 1; m <= 40; ++m) {
    mpq_class s = 0;
    for (unsigned k = 0; k <= m; ++k) s += mpq_class(binomial(m + 1, k)) * bernoulli(k);
    CHECK(s == 0);
  }
}

TEST_CASE("harmonic: recurrence") {
  CHECK(harmonic(0) == 0);
  CHECK(harmonic(3) == mpq_class(11, 6));
  CHECK(harmonic(2, 2) == mpq_class(5, 4));
  for (unsigned n = 1; n < 30; ++n)
    for (unsigned r = 1; r <= 3; ++r) {
      mpz_class d;
      mpz_ui_pow_ui(d.get_mpz_t(), n, r);
      CHECK(harmonic(n, r) == harmonic(n - 1, r) + mpq_class(1, d));
    }
}

TEST_CASE("pochhammer derivatives at one") {
  CHECK(pochhammer_deriv_at_one(2, 0) == 2);
  CHECK(pochhammer_deriv_at_one(1, 1) == 1);
  CHECK(pochhammer_deriv_at_one(3, 1) == 11);
  CHECK(pochhammer_deriv_at_one(0, 0) == 1);
}

TEST_CASE("pochhammer derivatives agree with jet expansion") {
  WorkingPrecision wp(256);
  for (unsigned j = 0; j <= 12; ++j) {
    Jet p = Jet::constant(Real(1L), 12, Real(1L));
    for (unsigned i = 0; i < j; ++i) p.mul_linear(Real(static_cast<long>(1 + i)));
    for (unsigned l = 0; l <= 12; ++l) {
      Real want(pochhammer_deriv_at_one(j, l));
      CHECK(p.derivative(l) == want);
    }
  }
}
