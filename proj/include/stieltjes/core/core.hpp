#pragma once

#include <vector>

#include <gmpxx.h>

#include "stieltjes/hurwitz/hurwitz.hpp"
#include "stieltjes/mp/real.hpp"

namespace stieltjes {

/// Truncation of a representation's outer infinite sum.
struct TruncationPlan {
  int digits = 40;
  long fixed_terms = 0;  // exact number of outer terms; 0 = adaptive
  long max_terms = 4000;
};

/// gamma_l(a+b) from gamma_l(a) and zeta^(m)(j,a), |b| < a.
StieltjesValue gamma_addition(unsigned l, const Real& a, const Real& b, const TruncationPlan& plan = {});
/// The j-th correction term of the addition formula (j >= 2), at the
/// current working precision.
Real addition_term(unsigned l, const Real& a, const Real& b, unsigned j);
/// The i-th term of the l = 1 specialization with harmonic numbers (i >= 1).
Real addition_term_harmonic(const Real& a, const Real& b, unsigned i);
/// Addition formula from the nearby point a + 1/4 with b = -1/4.
StieltjesValue gamma_addition_nearby(unsigned l, const Real& a, const TruncationPlan& plan = {});

/// Integer coefficients c_k such that
/// gamma_l^(j)(a) = sum_k c_k zeta^(l-k)(j+1, a).
std::vector<mpz_class> derivative_coefficients(unsigned j, unsigned l);
/// The same coefficients read off the explicit first, second and third
/// derivative formulas (j in 1..3).
std::vector<mpz_class> derivative_coefficients_explicit(unsigned j, unsigned l);
/// gamma_l^(j)(a) at the current working precision.
Real gamma_derivative(unsigned j, unsigned l, const Real& a);
/// gamma_1'(1) = zeta(2) [gamma + ln(2 pi) + 12 zeta'(-1)].
Real gamma1_prime_at_one_closed_form();

enum class Prop2Variant { i, ii, iii };

StieltjesValue gamma_series_prop2(Prop2Variant v, unsigned n, const Real& a, const TruncationPlan& plan = {});
/// True when a lies in the variant's region of convergence.
bool prop2_in_domain(Prop2Variant v, const Real& a);

/// Euler-Maclaurin series with split point N; N = 0 chooses one from the
/// precision.
StieltjesValue gamma_series_prop4(unsigned n, const Real& a, long N = 0, const TruncationPlan& plan = {});

struct AsymptoticValue {
  Real value;
  Real omitted;  // magnitude of the first omitted term
  long terms = 0;
};
/// Divergent asymptotic series, truncated before its smallest term.
AsymptoticValue gamma_asymptotic(unsigned l, const Real& a, long max_terms = 400);

struct ExtremumResult {
  Real a_star;
  Real gamma1_at_star;
  Real derivative_at_star;
  int newton_steps = 0;
};
/// Root of gamma_1'(a) = zeta'(2,a) + zeta(2,a) on [1, 2].
ExtremumResult find_gamma1_max(int digits);
/// gamma_1'(a) at the current working precision.
Real gamma1_prime(const Real& a);

struct ExpSeriesResult {
  Real value;
  Real correction;  // only meaningful for gamma/2: the two n-sums combined
  long terms_first = 0;
  long terms_second = 0;
};
/// Right side of the erf / Ei series for gamma/2.
ExpSeriesResult gamma_exp_series_euler(int digits);
/// Right side of the 2F2 / 3F3 series for gamma_1.
ExpSeriesResult gamma1_exp_series(int digits);
/// gamma_1 (= gamma_1(1)) through gamma1_exp_series, as a StieltjesValue.
StieltjesValue gamma1_exp_series_value(int digits);

struct BoundReport {
  unsigned n = 0;
  Real a;
  Real C_value;
  Real bound_stated;    // e n! / (sqrt(n) 2^n)
  Real bound_proof;    // e n^n / (2^n e^n)
  Real bound_zw;       // (3 + (-1)^n)(2n)! / (n^(n+1) (2 pi)^n)
  bool satisfied_stated = false;
  bool satisfied_proof = false;
  bool satisfied_zw = false;
};
BoundReport bounds_report(unsigned n, const Real& a, int digits = 20);

/// All representations in scope for (n, a): in-domain ones only.
std::vector<Method> methods_in_domain(unsigned n, const Real& a);
/// Dispatch to one representation at plan.digits.
StieltjesValue compute_gamma(Method m, unsigned n, const Real& a, const TruncationPlan& plan = {});

}  // namespace stieltjes
