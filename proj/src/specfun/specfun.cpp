#include "stieltjes/specfun/specfun.hpp"

#include <algorithm>
#include <cmath>

#include "stieltjes/combinatorics/combinatorics.hpp"

namespace stieltjes {

namespace {

using MpfrUnary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

Real wrap(MpfrUnary f, const Real& x, const ErrMag& lipschitz) {
  Real r;
  f(r.raw(), x.get(), MPFR_RNDN);
  r.set_err(lipschitz * x.err() + rounding_error(r.get()));
  return r;
}

double working_digits() { return static_cast<double>(WorkingPrecision::bits()) * 0.30102999566398120; }

bool equals_half(const Real& a) { return a == Real(0.5); }

}  // namespace

Real polygamma(unsigned m, const Real& a) {
  if (a.sign() <= 0) throw DomainError("polygamma needs a > 0");
  const long p = WorkingPrecision::bits();
  const double threshold = std::max(10.0, 0.5 * working_digits()) + m + 2;
  Real result;
  {
    WorkingPrecision wp(p + 16 + 2 * m);
    Real x = a;
    Real shift_sum;
    const Real mfact(factorial(m));
    // psi^(m)(a+1) = psi^(m)(a) + (-1)^m m! a^(-m-1)
    while (x.to_double() < threshold) {
      Real t = (m == 0) ? Real(1L) / x : mfact / pow(x, static_cast<long>(m + 1));
      if (m % 2 == 1) t = -t;
      shift_sum += t;
      x += Real(1L);
    }
    Real asym;
    Real inv2 = Real(1L) / (x * x);
    if (m == 0) {
      asym = log(x) - Real(1L) / ldexp(x, 1);
    } else {
      asym = Real(factorial(m - 1)) / pow(x, static_cast<long>(m)) +
             mfact / ldexp(pow(x, static_cast<long>(m + 1)), 1);
    }
    // Bernoulli tail: m=0 subtracts B_2k/(2k x^2k); m>=1 adds B_2k (2k+m-1)!/(2k)! x^-(2k+m)
    Real xpow = (m == 0) ? inv2 : inv2 / pow(x, static_cast<long>(m));
    ErrMag prev_mag;
    ErrMag last;
    const ErrMag target = ErrMag::pow2(-(p + 12));
    for (unsigned k = 1;; ++k) {
      Real t;
      if (m == 0) {
        t = Real(bernoulli(2 * k)) / static_cast<long>(2 * k) * xpow;
        t = -t;
      } else {
        mpq_class c = bernoulli(2 * k) * mpq_class(factorial(2 * k + m - 1), factorial(2 * k));
        t = Real(c) * xpow;
      }
      asym += t;
      last = t.magnitude();
      if (last <= target * asym.magnitude()) break;
      if (k > 2 && prev_mag < last) throw ConvergenceError("polygamma asymptotic series diverged");
      if (k > 10000) throw ConvergenceError("polygamma asymptotic series too long");
      prev_mag = last;
      xpow = xpow * inv2;
    }
    asym.add_err(last);
    if (m >= 1 && m % 2 == 0) asym = -asym;
    result = asym - shift_sum;
  }
  return round_to_working(result);
}

Real digamma(const Real& a) { return polygamma(0, a); }

Real gamma_fn(const Real& x) {
  Real r;
  mpfr_gamma(r.raw(), x.get(), MPFR_RNDN);
  ErrMag lip = x.err().is_zero() ? ErrMag{} : r.magnitude() * (ErrMag::from_double(4.0) + abs(log(abs(x) + Real(2L))).magnitude());
  r.set_err(lip * x.err() + rounding_error(r.get()));
  return r;
}

Real lngamma(const Real& x) {
  if (x.sign() <= 0) throw DomainError("lngamma needs x > 0");
  ErrMag lip = x.err().is_zero() ? ErrMag{} : (ErrMag::from_double(2.0) + abs(digamma(x)).magnitude());
  return wrap(mpfr_lngamma, x, lip);
}

Jet lngamma_jet(const Real& c, std::size_t K) {
  Jet j(c, K);
  j[0] = lngamma(c);
  Real fact(1L);
  for (std::size_t m = 1; m <= K; ++m) {
    fact = fact * static_cast<long>(m);
    j[m] = polygamma(static_cast<unsigned>(m - 1), c) / fact;
  }
  return j;
}

Real erf(const Real& x) { return wrap(mpfr_erf, x, ErrMag::from_double(1.13)); }
Real erfc(const Real& x) { return wrap(mpfr_erfc, x, ErrMag::from_double(1.13)); }

Real ei(const Real& x) {
  if (x.sign() >= 0) throw DomainError("Ei implemented for negative arguments only");
  ErrMag lip = (exp(x) / abs(x)).magnitude();
  return wrap(mpfr_eint, x, lip);
}

long pfq_guard_bits(const Real& x) {
  if (x.sign() >= 0) return 0;
  return static_cast<long>(std::ceil(1.5 * std::fabs(x.to_double()) * 1.4426950408889634));
}

PfqResult pfq_detailed(const HypergeometricSpec& spec) {
  for (const auto& b : spec.lower)
    if (b.sign() <= 0 && b.is_integer()) throw DomainError("pfq lower parameter is a nonpositive integer");
  const std::size_t p = spec.upper.size();
  const std::size_t q = spec.lower.size();
  if (p > q + 1) throw DomainError("pfq with p > q+1 diverges");
  if (p == q + 1 && !(abs(spec.argument) < Real(1L))) throw DomainError("pfq with p = q+1 needs |x| < 1");

  const long bits = WorkingPrecision::bits();
  PfqResult out;
  out.guard_bits = pfq_guard_bits(spec.argument) + 16;
  Real total;
  {
    WorkingPrecision wp(bits + out.guard_bits);
    const Real& x = spec.argument;
    if (x.is_zero()) {
      out.value = Real(1L);
      out.terms = 1;
      return out;
    }
    Real term(1L);
    total = Real(1L);
    const double xabs = std::fabs(x.to_double());
    const ErrMag target = ErrMag::pow2(-(bits + 12));
    int quiet = 0;
    long k = 0;
    for (;; ++k) {
      Real num = x;
      for (const auto& a : spec.upper) num = num * (a + Real(k));
      Real den(k + 1);
      for (const auto& b : spec.lower) den = den * (b + Real(k));
      term = term * num / den;
      if (term.is_zero()) break;
      total += term;
      if (static_cast<double>(k) > xabs && term.magnitude() <= target * total.magnitude()) {
        if (++quiet >= 2) break;
      } else {
        quiet = 0;
      }
      if (k > 1000000) throw ConvergenceError("pfq did not converge");
    }
    total.add_err(term.magnitude());
    out.terms = k + 2;
  }
  out.value = round_to_working(total);
  return out;
}

Real pfq(const HypergeometricSpec& spec) { return pfq_detailed(spec).value; }

Real incomplete_gamma(const Real& alpha, const Real& x) {
  if (x.sign() <= 0) throw DomainError("incomplete gamma needs x > 0");
  if (alpha.is_zero()) return -ei(-x);
  if (equals_half(alpha)) return sqrt(const_pi()) * erfc(sqrt(x));
  if (alpha.sign() < 0 && alpha.is_integer()) throw DomainError("incomplete gamma: alpha a nonpositive integer");
  const long bits = WorkingPrecision::bits();
  Real r;
  {
    WorkingPrecision wp(bits + pfq_guard_bits(-x) + 16);
    Real f = pfq({{alpha}, {alpha + Real(1L)}, -x});
    r = gamma_fn(alpha) - pow(x, alpha) / alpha * f;
  }
  return round_to_working(r);
}

Real incomplete_gamma_dalpha(const Real& alpha, const Real& x) {
  if (x.sign() <= 0) throw DomainError("incomplete gamma derivative needs x > 0");
  const long bits = WorkingPrecision::bits();
  Real r;
  {
    WorkingPrecision wp(bits + pfq_guard_bits(-x) + 16);
    Real L = log(x);
    if (alpha.is_zero()) {
      Real g = const_euler();
      Real pi = const_pi();
      Real f3 = pfq({{Real(1L), Real(1L), Real(1L)}, {Real(2L), Real(2L), Real(2L)}, -x});
      r = g * g / 2 + pi * pi / 12 - L * L / 2 - x * f3 + (g + incomplete_gamma(Real(0L), x) + L) * L;
    } else {
      if (alpha.sign() < 0) throw DomainError("incomplete gamma derivative: alpha < 0 unsupported");
      Real ap1 = alpha + Real(1L);
      Real f1 = pfq({{alpha}, {ap1}, -x});
      Real f2 = pfq({{alpha, alpha}, {ap1, ap1}, -x});
      r = gamma_fn(alpha) * digamma(alpha) + pow(x, alpha) / (alpha * alpha) * (-(alpha * L * f1) + f2);
    }
  }
  return round_to_working(r);
}

Real theta3(const Real& q) {
  if (!(q.sign() > 0 && q < Real(1L))) throw DomainError("theta3 needs 0 < q < 1");
  const ErrMag target = ErrMag::pow2(-(WorkingPrecision::bits() + 8));
  Real sum;
  Real lq = log(q);
  for (long n = 1;; ++n) {
    Real t = exp(lq * (n * n));
    sum += t;
    if (t.magnitude() <= target) break;
    if (n > 100000000) throw ConvergenceError("theta3 did not converge");
  }
  return Real(1L) + ldexp(sum, 1);
}

Real P1(const Real& t) { return t - floor(t) - Real(0.5); }

}  // namespace stieltjes
