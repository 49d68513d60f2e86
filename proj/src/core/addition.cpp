#include "series_util.hpp"
#include "stieltjes/combinatorics/combinatorics.hpp"

namespace stieltjes {

using core_detail::zeta_coeffs;

Real addition_term(unsigned l, const Real& a, const Real& b, unsigned j) {
  if (j < 2) throw DomainError("addition term index starts at 2");
  // C(l,k) k! zeta^(l-k) = l! c_{l-k}
  Jet c = zeta_coeffs(j, l, a);
  Real inner;
  for (unsigned k = 0; k <= l && k + 1 <= j; ++k) {
    Real t = Real(stirling1(j, k + 1)) * c[l - k];
    inner += (k % 2) ? -t : t;
  }
  Real scale = Real(factorial(l)) * pow(b, static_cast<long>(j - 1)) / Real(factorial(j - 1));
  Real r = scale * inner;
  return (l % 2) ? -r : r;
}

Real addition_term_harmonic(const Real& a, const Real& b, unsigned i) {
  if (i < 1) throw DomainError("harmonic addition term index starts at 1");
  Jet c = zeta_coeffs(i + 1, 1, a);
  Real br = Real(harmonic(i)) * c[0] + c[1];
  return -(pow(-b, static_cast<long>(i)) * br);
}

StieltjesValue gamma_addition(unsigned l, const Real& a, const Real& b, const TruncationPlan& plan) {
  if (a.sign() <= 0) throw DomainError("addition formula needs a > 0");
  if (!(abs(b) < a)) throw DomainError("addition formula needs |b| < a");
  WorkingPrecision wp(bits_for_digits(plan.digits));
  Real base = stieltjes_gamma(l, a);
  auto acc = core_detail::run_series([&](long j) { return addition_term(l, a, b, static_cast<unsigned>(j)); }, 2,
                                     plan);
  return core_detail::finish(l, a + b, Method::addition, base + acc.sum, acc.tail, acc.terms, acc.converged);
}

StieltjesValue gamma_addition_nearby(unsigned l, const Real& a, const TruncationPlan& plan) {
  if (a.sign() <= 0) throw DomainError("addition formula needs a > 0");
  WorkingPrecision wp(bits_for_digits(plan.digits));
  Real a0 = a + ldexp(Real(1L), -2);
  Real b = -ldexp(Real(1L), -2);
  StieltjesValue v = gamma_addition(l, a0, b, plan);
  v.a = a;
  return v;
}

std::vector<mpz_class> derivative_coefficients(unsigned j, unsigned l) {
  if (j < 1) throw DomainError("derivative order must be at least 1");
  std::vector<mpz_class> c(l + 1);
  for (unsigned k = 0; k <= l; ++k) {
    mpz_class v = factorial(k) * binomial(l, k) * stirling1(j + 1, k + 1);
    c[k] = ((l + k) % 2) ? mpz_class(-v) : v;
  }
  return c;
}

std::vector<mpz_class> derivative_coefficients_explicit(unsigned j, unsigned l) {
  std::vector<mpz_class> c(l + 1, 0);
  const mpz_class L = l;
  std::vector<mpz_class> raw;
  int sign = 0;
  switch (j) {
    case 1:
      raw = {1, L};
      sign = (l + 1) % 2 ? -1 : 1;
      break;
    case 2:
      raw = {2, 3 * L, L * (L - 1)};
      sign = l % 2 ? -1 : 1;
      break;
    case 3:
      raw = {6, 11 * L, 6 * L * (L - 1), L * (L - 1) * (L - 2)};
      sign = (l + 1) % 2 ? -1 : 1;
      break;
    default:
      throw DomainError("explicit derivative forms exist for j = 1, 2, 3");
  }
  for (unsigned k = 0; k <= l && k < raw.size(); ++k) c[k] = sign * raw[k];
  return c;
}

Real gamma_derivative(unsigned j, unsigned l, const Real& a) {
  if (a.sign() <= 0) throw DomainError("gamma derivative needs a > 0");
  auto c = derivative_coefficients(j, l);
  Jet z = zeta_coeffs(j + 1, l, a);
  Real r;
  for (unsigned k = 0; k <= l; ++k) {
    if (c[k] == 0) continue;
    r += Real(mpz_class(c[k] * factorial(l - k))) * z[l - k];
  }
  return r;
}

Real gamma1_prime_at_one_closed_form() {
  Real zpm1 = hurwitz_zeta_jet(Real(-1L), 1, Real(1L)).derivative(1);
  Real pi = const_pi();
  Real z2 = pi * pi / 6L;
  return z2 * (const_euler() + log(ldexp(pi, 1)) + zpm1 * 12L);
}

}  // namespace stieltjes
