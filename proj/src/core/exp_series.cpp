#include "series_util.hpp"
#include "stieltjes/specfun/specfun.hpp"

namespace stieltjes {

namespace {

// Terms are differences of O(ln n) pieces, so they are measured against
// max(|s|, 1); callers evaluate everything kGuardBits above target_bits.
template <class Term>
Real sum_fast(Term&& term, long& used, long target_bits) {
  const ErrMag eps = ErrMag::pow2(-target_bits);
  Real s;
  int quiet = 0;
  used = 0;
  for (long n = 1; n < 200; ++n) {
    Real t = term(n);
    s += t;
    ++used;
    ErrMag scale = max(s.magnitude(), ErrMag::from_double(1.0));
    quiet = (t.is_zero() || t.magnitude() <= eps * scale) ? quiet + 1 : 0;
    if (quiet >= 2) return s;
  }
  throw ConvergenceError("exponential series did not settle");
}

}  // namespace

ExpSeriesResult gamma_exp_series_euler(int digits) {
  const long p = bits_for_digits(digits);
  WorkingPrecision wp(p + kGuardBits);
  const Real pi = const_pi();
  const Real rpi = sqrt(pi);
  ExpSeriesResult r;
  Real s1 = sum_fast([&](long n) { return erfc(rpi * Real(n)) / Real(n); }, r.terms_first, p);
  Real s2 = sum_fast([&](long n) { return ei(-(pi * Real(n * n))); }, r.terms_second, p);
  r.correction = s1 - s2;
  r.value = r.correction - Real(1L) + ldexp(log(ldexp(pi, 2)), -1);
  return r;
}

ExpSeriesResult gamma1_exp_series(int digits) {
  const long p = bits_for_digits(digits);
  WorkingPrecision wp(p + kGuardBits);
  const Real pi = const_pi();
  const Real g = const_euler();
  const Real lpi = log(pi);
  const Real half(mpq_class(1, 2));
  const Real three_half(mpq_class(3, 2));
  const Real ps = digamma(half);
  const Real rpi = sqrt(pi);
  ExpSeriesResult r;
  Real s2 = sum_fast(
      [&](long n) {
        Real x = -(pi * Real(n * n));
        Real f = pfq({{half, half}, {three_half, three_half}, x});
        Real t = f * Real(4 * n) + ps - ldexp(log(Real(n)), 1) - erf(rpi * Real(n)) * lpi;
        return t / Real(n);
      },
      r.terms_first, p);
  const Real c3 = g * g / 4L + pi * pi / 24L;
  Real s3 = sum_fast(
      [&](long n) {
        Real x = pi * Real(n * n);
        Real f = pfq({{Real(1L), Real(1L), Real(1L)}, {Real(2L), Real(2L), Real(2L)}, -x});
        Real lx = log(x);
        return c3 - ldexp(x * f, -1) + ldexp(lx * (ldexp(g, 1) + lx), -2) + ldexp(lpi * ei(-x), -1);
      },
      r.terms_second, p);
  r.correction = s3 - ldexp(s2, -1);
  r.value = pi * pi / 16L + ldexp(g * ps, -1) + ldexp(ps * ps, -3) - Real(1L) + ldexp(lpi, -1) -
            ldexp(lpi * lpi, -3) + r.correction;
  return r;
}

StieltjesValue gamma1_exp_series_value(int digits) {
  ExpSeriesResult e = gamma1_exp_series(digits);
  // interval tracking through the cancelling 2F2/3F3 sums is far too
  // pessimistic; a run 10 digits finer measures the actual error instead
  ExpSeriesResult f = gamma1_exp_series(digits + 10);
  WorkingPrecision wp(bits_for_digits(digits));
  Real value = round_to_working(e.value);
  Real diff = abs(e.value - f.value);
  diff.set_err({});
  value.set_err({});
  return core_detail::finish(1, Real(1L), Method::exp_series, value, diff, e.terms_first + e.terms_second, true);
}

}  // namespace stieltjes
