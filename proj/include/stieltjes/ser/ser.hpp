#pragma once

#include <vector>

#include <gmpxx.h>

#include "stieltjes/mp/real.hpp"

namespace stieltjes {

/// P_{n+1}(y) = (1/n!) int_0^y x(1-x)(2-x)...(n-1-x) dx as exact
/// coefficients: coeffs[i] multiplies y^i.
struct SerPolynomial {
  unsigned n = 0;
  std::vector<mpq_class> coeffs;
  mpq_class operator()(const mpq_class& y) const;
};

enum class SerForm { binomial_expansion, power_expansion };

/// Exact P_{n+1}(y), n >= 1, from either closed form.
mpq_class ser_polynomial(unsigned n, const mpq_class& y, SerForm form = SerForm::power_expansion);
SerPolynomial ser_polynomial_coeffs(unsigned n);
/// P'_{n+1}(y).
mpq_class ser_polynomial_derivative(unsigned n, const mpq_class& y);

/// p_{n+1} = P_{n+1}(1); both closed forms are evaluated and must agree.
mpq_class ser_p(unsigned n);
/// The two closed forms separately.
mpq_class ser_p_stirling_shifted(unsigned n);
mpq_class ser_p_stirling(unsigned n);

/// D_n^(k) = sum_{m<=n} ln^k m / m - ln^(k+1)(n+1)/(k+1).
Real ser_partial_d(unsigned n, unsigned k);

struct RemainderResult {
  Real value;
  long terms = 0;
  bool converged = false;
};
/// r_n^(k) = gamma_k - D_n^(k) from the double series, with the sum over m
/// taken in closed form through zeta derivatives at n+1.
RemainderResult remainder_rnk(unsigned n, unsigned k, int digits, long max_terms = 20000);

/// p_{n+1} = int e^z (1+e^z)^-n / (z^2 + pi^2) dz over the real line.
Real knessl_p_integral(unsigned long n, int digits);
/// 1/(n ln^2 n) (1 + sum_{j<=J} A_j / ln^j n), J <= 2.
Real knessl_asymptotic(unsigned long n, unsigned J);
/// A_1, A_2 and the next coefficient A_3, used as a size estimate.
Real knessl_coefficient(unsigned j);

/// gamma = int e^z ln(1 + e^-z) / (z^2 + pi^2) dz, to absolute 10^-digits.
Real euler_gamma_integral(int digits);

}  // namespace stieltjes
