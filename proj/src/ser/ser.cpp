#include "stieltjes/ser/ser.hpp"

#include <cmath>

#include "stieltjes/combinatorics/combinatorics.hpp"
#include "stieltjes/hurwitz/hurwitz.hpp"
#include "stieltjes/mp/quadrature.hpp"

namespace stieltjes {

namespace {

mpq_class qpow(const mpq_class& x, unsigned e) {
  mpq_class r = 1;
  for (unsigned i = 0; i < e; ++i) r *= x;
  return r;
}

mpq_class sign_over_factorial(unsigned n, bool negative) {
  mpq_class r(1, 1);
  r /= mpq_class(factorial(n));
  return negative ? mpq_class(-r) : r;
}

}  // namespace

mpq_class SerPolynomial::operator()(const mpq_class& y) const {
  mpq_class acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * y + coeffs[i];
  return acc;
}

SerPolynomial ser_polynomial_coeffs(unsigned n) {
  if (n < 1) throw DomainError("Ser polynomials start at n = 1");
  SerPolynomial p;
  p.n = n;
  p.coeffs.assign(n + 2, 0);
  const mpq_class pre = sign_over_factorial(n, n % 2 == 0);  // (-1)^(n+1)/n!
  for (unsigned k = 0; k <= n; ++k) p.coeffs[k + 1] = pre * mpq_class(stirling1(n, k), k + 1);
  for (auto& c : p.coeffs) c.canonicalize();
  return p;
}

mpq_class ser_polynomial(unsigned n, const mpq_class& y, SerForm form) {
  if (n < 1) throw DomainError("Ser polynomials start at n = 1");
  if (form == SerForm::power_expansion) return ser_polynomial_coeffs(n)(y);
  mpq_class acc = 0;
  for (unsigned k = 1; k <= n; ++k) {
    mpq_class br = (mpq_class(k) * y + 1) * qpow(1 - y, k - 1) * (y - 1) + 1;
    mpq_class t = mpq_class(stirling1(n - 1, k - 1), k * (k + 1)) * br;
    acc += (k % 2) ? mpq_class(-t) : t;
  }
  acc *= sign_over_factorial(n, n % 2 == 1);
  acc.canonicalize();
  return acc;
}

mpq_class ser_polynomial_derivative(unsigned n, const mpq_class& y) {
  SerPolynomial p = ser_polynomial_coeffs(n);
  mpq_class acc = 0;
  for (std::size_t i = p.coeffs.size(); i-- > 1;) acc = acc * y + p.coeffs[i] * static_cast<unsigned long>(i);
  return acc;
}

mpq_class ser_p_stirling_shifted(unsigned n) {
  if (n < 1) throw DomainError("p_{n+1} needs n >= 1");
  mpq_class acc = 0;
  for (unsigned k = 1; k <= n; ++k) {
    mpq_class t(stirling1(n - 1, k - 1), k * (k + 1));
    acc += (k % 2) ? mpq_class(-t) : t;
  }
  acc *= sign_over_factorial(n, n % 2 == 1);
  acc.canonicalize();
  return acc;
}

mpq_class ser_p_stirling(unsigned n) {
  if (n < 1) throw DomainError("p_{n+1} needs n >= 1");
  mpq_class acc = 0;
  for (unsigned k = 1; k <= n; ++k) acc += mpq_class(stirling1(n, k), k + 1);
  acc *= sign_over_factorial(n, n % 2 == 0);
  acc.canonicalize();
  return acc;
}

mpq_class ser_p(unsigned n) {
  mpq_class a = ser_p_stirling_shifted(n);
  if (a != ser_p_stirling(n)) throw std::logic_error("closed forms of p_{n+1} disagree");
  return a;
}

Real ser_partial_d(unsigned n, unsigned k) {
  Real s;
  for (unsigned m = 2; m <= n; ++m) s += pow(log(Real(m)), static_cast<long>(k)) / Real(m);
  if (k == 0) s += Real(1L);
  return s - pow(log(Real(n + 1)), static_cast<long>(k + 1)) / static_cast<long>(k + 1);
}

RemainderResult remainder_rnk(unsigned n, unsigned k, int digits, long max_terms) {
  if (n < 1) throw DomainError("remainder needs n >= 1");
  WorkingPrecision wp(bits_for_digits(digits));
  const ErrMag eps = ErrMag::pow2(-WorkingPrecision::bits());
  const Real A(n + 1);
  const Real kf(factorial(k));
  // sum_{m>n} ln^t m / m^(i+1) = (-1)^t zeta^(t)(i+1, n+1) = (-1)^t t! c_t
  RemainderResult r;
  Real fi(1L);  // i!
  int quiet = 0;
  for (long i = 1; i <= max_terms; ++i) {
    fi = fi * Real(i);
    Jet c = hurwitz_zeta_jet_cached(Real(i + 1), k, A);
    auto tail = [&](unsigned t) {
      Real v = Real(factorial(t)) * c[t];
      return (t % 2) ? -v : v;
    };
    Real br = tail(k);
    if (i % 2) br = -br;
    Real inner;
    for (unsigned j = 0; j < k; ++j) {
      if (j + 2 > static_cast<unsigned long>(i + 1)) break;
      inner += kf / Real(factorial(k - j - 1)) * Real(stirling1(static_cast<unsigned>(i + 1), j + 2)) *
               tail(k - j - 1);
    }
    br += inner / fi;
    Real t = -(br / Real(i + 1));
    r.value += t;
    ++r.terms;
    quiet = (t.is_zero() || t.magnitude() <= eps * r.value.magnitude()) ? quiet + 1 : 0;
    if (quiet >= 3) {
      r.converged = true;
      break;
    }
  }
  return r;
}

Real knessl_p_integral(unsigned long n, int digits) {
  if (n < 1) throw DomainError("p_{n+1} integral needs n >= 1");
  const long p = bits_for_digits(digits);
  Real out;
  {
    WorkingPrecision wp(p + 16);
    const Real pi2 = const_pi() * const_pi();
    const Real N(n);
    // e^z (1+e^z)^-n, written so that neither exponential overflows
  auto f = [&](const Real& z) {
    Real e = z.sign() <= 0 ? z - N * log1p(exp(z)) : -(N - Real(1L)) * z - N * log1p(exp(-z));
    return exp(e) / (z * z + pi2);
  };
    // the mass sits left of z = -ln n, where (1+e^z)^-n switches off
    Real centre = -log(N);
    SumReport r = integrate_full_line(f, ErrMag::pow2(-p) * ErrMag::from_double(1.0 / (n * std::log(n + 1.0) + 1.0)),
                                      centre);
    if (!r.converged) throw ConvergenceError("p_{n+1} quadrature did not converge");
    out = r.value;
  }
  WorkingPrecision wp(p);
  return round_to_working(out);
}

Real knessl_coefficient(unsigned j) {
  const Real g = const_euler();
  const Real pi2 = const_pi() * const_pi();
  switch (j) {
    case 1:
      return -ldexp(g, 1);
    case 2:
      return g * g * 3L - ldexp(pi2, -1);
    case 3:
      return -(g * g * g * 4L) + ldexp(pi2 * g, 1) - hurwitz_zeta(Real(3L), Real(1L)) * 8L;
    default:
      throw DomainError("coefficients known for j = 1, 2, 3");
  }
}

Real knessl_asymptotic(unsigned long n, unsigned J) {
  if (n < 2) throw DomainError("asymptotic form needs n >= 2");
  if (J > 2) throw DomainError("asymptotic form uses at most two corrections");
  const Real L = log(Real(n));
  Real s(1L);
  Real Lp(1L);
  for (unsigned j = 1; j <= J; ++j) {
    Lp = Lp * L;
    s += knessl_coefficient(j) / Lp;
  }
  return s / (Real(n) * L * L);
}

Real euler_gamma_integral(int digits) {
  WorkingPrecision wp(bits_for_digits(digits));
  const Real pi2 = const_pi() * const_pi();
  const ErrMag tiny = ErrMag::pow2(-WorkingPrecision::bits() - 8);
  auto f = [&](const Real& z) {
    Real v;
    if (z.sign() < 0) {
      // ln(1+e^-z) = -z + ln(1+e^z)
      v = exp(z) * (log1p(exp(z)) - z);
    } else {
      Real t = exp(-z);
      v = t.magnitude() <= tiny ? Real(1L) - ldexp(t, -1) : log1p(t) / t;
    }
    return v / (z * z + pi2);
  };
  Real eps = pow(Real(10L), static_cast<long>(-digits));
  SumReport r = integrate_full_line(f, eps.magnitude());
  if (!r.converged) throw ConvergenceError("gamma integral did not converge");
  return r.value;
}

}  // namespace stieltjes
