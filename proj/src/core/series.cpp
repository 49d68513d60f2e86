#include <cmath>

#include "series_util.hpp"
#include "stieltjes/combinatorics/combinatorics.hpp"

namespace stieltjes {

using core_detail::zeta_coeffs;

namespace {

// sum_m (-1)^m s(ks, n-m+1) zeta^(m)(ks,a)/m!
Real prop2_inner(long ks, unsigned n, const Real& a) {
  Jet c = zeta_coeffs(ks, n, a);
  Real r;
  for (unsigned m = 0; m <= n; ++m) {
    unsigned col = n - m + 1;
    if (col > static_cast<unsigned long>(ks)) continue;
    Real t = Real(stirling1(static_cast<unsigned>(ks), col)) * c[m];
    r += (m % 2) ? -t : t;
  }
  return r;
}

}  // namespace

bool prop2_in_domain(Prop2Variant v, const Real& a) {
  return v == Prop2Variant::i ? a > Real(1L) : a > Real(mpq_class(1, 2));
}

StieltjesValue gamma_series_prop2(Prop2Variant v, unsigned n, const Real& a, const TruncationPlan& plan) {
  if (!prop2_in_domain(v, a))
    throw DomainError(v == Prop2Variant::i ? "this series needs a > 1" : "this series needs a > 1/2");
  WorkingPrecision wp(bits_for_digits(plan.digits));
  const Real nf(factorial(n));
  Real shift = v == Prop2Variant::i ? a - Real(1L) : a - Real(mpq_class(1, 2));
  Real lead = -(pow(log(shift), static_cast<long>(n + 1)) / static_cast<long>(n + 1));
  Method m = Method::prop2i;
  core_detail::Accum acc;
  switch (v) {
    case Prop2Variant::i:
      acc = core_detail::run_series(
          [&](long k) {
            Real t = prop2_inner(k + 1, n, a) / Real(factorial(static_cast<unsigned>(k + 1)));
            return (k % 2) ? nf * t : -(nf * t);
          },
          1, plan);
      break;
    case Prop2Variant::ii:
      m = Method::prop2ii;
      acc = core_detail::run_series(
          [&](long k) {
            Real d = ldexp(Real(factorial(static_cast<unsigned>(2 * k + 1))), 2 * k);
            return -(nf * prop2_inner(2 * k + 1, n, a) / d);
          },
          1, plan);
      break;
    case Prop2Variant::iii:
      m = Method::prop2iii;
      acc = core_detail::run_series(
          [&](long k) {
            Real d1 = ldexp(Real(factorial(static_cast<unsigned>(2 * k + 1))), 2 * k);
            Real d2 = ldexp(Real(factorial(static_cast<unsigned>(4 * k + 1))), 4 * k);
            Real t1 = nf * prop2_inner(2 * k + 1, n, a) / d1;
            Real t2 = ldexp(nf * prop2_inner(4 * k + 1, n, a) / d2, 1);
            return ((k % 2) ? -t1 : t1) - t2;
          },
          1, plan);
      break;
  }
  return core_detail::finish(n, a, m, lead + acc.sum, acc.tail, acc.terms, acc.converged);
}

StieltjesValue gamma_series_prop4(unsigned l, const Real& a, long N, const TruncationPlan& plan) {
  if (a.sign() <= 0) throw DomainError("this series needs a > 0");
  if (N < 0) throw DomainError("split point N must be nonnegative");
  WorkingPrecision wp(bits_for_digits(plan.digits));
  const long p = WorkingPrecision::bits();
  if (N == 0) N = std::max(4, plan.digits / 2);
  const double top = static_cast<double>(N) + 1.0 + a.to_double();
  const double r_est = std::ceil(p / std::log2(top)) + 10.0;
  const long guard = static_cast<long>(std::ceil(r_est * std::log2(top / a.to_double()))) + kGuardBits;

  Real head;
  std::vector<std::vector<Real>> logpow(N + 1);  // ln^i(n+a), i = 0..l
  std::vector<Real> inv, pw;                     // 1/(n+a) and (n+a)^-r
  {
    WorkingPrecision hi(p + guard);
    for (long n = 0; n <= N; ++n) {
      Real x = a + Real(n);
      Real lx = log(x);
      logpow[n].resize(l + 1);
      logpow[n][0] = Real(1L);
      for (unsigned i = 1; i <= l; ++i) logpow[n][i] = logpow[n][i - 1] * lx;
      inv.push_back(Real(1L) / x);
      pw.push_back(inv.back());
      head += logpow[n][l] * inv.back();
    }
    Real lN = log(a + Real(N));
    head -= pow(lN, static_cast<long>(l + 1)) / static_cast<long>(l + 1);
  }
  const Real lf(factorial(l));
  long next_r = 2;
  auto term = [&](long r) -> Real {
    WorkingPrecision hi(p + guard);
    for (; next_r <= r; ++next_r)
      for (long n = 0; n <= N; ++n) pw[n] = pw[n] * inv[n];
    Jet c = zeta_coeffs(r, l, a);
    Real acc;
    for (unsigned k = 0; k <= l && k + 1 <= static_cast<unsigned long>(r); ++k) {
      Real partial;
      for (long n = 0; n <= N; ++n) partial += logpow[n][l - k] * pw[n];
      // (-1)^l zeta^(l-k) - (-1)^k partial, zeta^(l-k) = (l-k)! c_{l-k}
      Real z = Real(factorial(l - k)) * c[l - k];
      Real br = ((l % 2) ? -z : z) - ((k % 2) ? -partial : partial);
      // (-1)^k C(l,k) k! = (-1)^k l!/(l-k)!
      Real w = Real(stirling1(static_cast<unsigned>(r), k + 1)) * lf / Real(factorial(l - k));
      Real t = w * br;
      acc += (k % 2) ? -t : t;
    }
    acc = acc / Real(factorial(static_cast<unsigned>(r)));
    if (r % 2) acc = -acc;
    return round_to_working(acc);
  };
  auto acc = core_detail::run_series(term, 2, plan);
  Real value = round_to_working(head) + acc.sum;
  StieltjesValue v = core_detail::finish(l, a, Method::prop4, value, acc.tail, acc.terms, acc.converged);
  v.terms += N + 1;
  return v;
}

AsymptoticValue gamma_asymptotic(unsigned l, const Real& a, long max_terms) {
  if (a.sign() <= 0) throw DomainError("asymptotic series needs a > 0");
  const long p = WorkingPrecision::bits();
  Real la = log(a);
  std::vector<Real> lp(l + 1);
  lp[0] = Real(1L);
  for (unsigned i = 1; i <= l; ++i) lp[i] = lp[i - 1] * la;
  Real sum = lp[l] / ldexp(a, 1) - lp[l] * la / static_cast<long>(l + 1);
  Real a2 = Real(1L) / (a * a);
  Real apow(1L);
  AsymptoticValue out;
  Real prev_mag;
  bool have_prev = false;
  for (long m = 1; m <= max_terms; ++m) {
    apow = apow * a2;
    Real inner;
    for (unsigned k = 0; k <= l && k + 1 <= static_cast<unsigned long>(2 * m); ++k)
      inner += Real(mpz_class(binomial(l, k) * factorial(k) * stirling1(static_cast<unsigned>(2 * m), k + 1))) *
               lp[l - k];
    Real t = -(Real(mpq_class(bernoulli(static_cast<unsigned>(2 * m)) /
                              mpq_class(factorial(static_cast<unsigned>(2 * m))))) *
               apow * inner);
    Real mag = abs(t);
    mag.set_err({});
    if (have_prev && mag > prev_mag && !prev_mag.is_zero()) {
      out.omitted = mag;
      break;
    }
    if (!t.is_zero() && mag.magnitude() <= ErrMag::pow2(-p) * sum.magnitude()) {
      out.omitted = mag;
      break;
    }
    sum += t;
    ++out.terms;
    out.omitted = mag;
    if (!t.is_zero()) {
      prev_mag = mag;
      have_prev = true;
    }
  }
  out.value = sum;
  return out;
}

Real gamma1_prime(const Real& a) {
  Jet z = hurwitz_zeta_jet(Real(2L), 1, a);
  return z[0] + z[1];
}

ExtremumResult find_gamma1_max(int digits) {
  ExtremumResult r;
  Real lo(1L), hi(2L);
  {
    WorkingPrecision wp(64);
    for (int i = 0; i < 30; ++i) {
      Real mid = ldexp(lo + hi, -1);
      if (gamma1_prime(mid).sign() > 0)
        lo = mid;
      else
        hi = mid;
    }
  }
  WorkingPrecision wp(bits_for_digits(digits));
  const long p = WorkingPrecision::bits();
  Real x = round_to_working(ldexp(lo + hi, -1));
  x.set_err({});
  for (int it = 0; it < 40; ++it) {
    Real f = gamma1_prime(x);
    Jet z3 = hurwitz_zeta_jet(Real(3L), 1, x);
    Real df = -(z3[0] * 3L + z3[1] * 2L);
    Real dx = f / df;
    x = x - dx;
    x.set_err({});
    ++r.newton_steps;
    if (dx.is_zero() || dx.magnitude() <= ErrMag::pow2(-(p - 4)) * x.magnitude()) break;
  }
  r.a_star = x;
  r.derivative_at_star = gamma1_prime(x);
  // the root error is |f|/|f'|
  Jet z3 = hurwitz_zeta_jet(Real(3L), 1, x);
  Real df = -(z3[0] * 3L + z3[1] * 2L);
  r.a_star.set_err((abs(r.derivative_at_star) / abs(df)).magnitude() + rounding_error(x.get()));
  r.gamma1_at_star = hurwitz_zeta_jet(Real(1L), 5, x).derivative(1);
  r.gamma1_at_star = -r.gamma1_at_star;
  return r;
}

}  // namespace stieltjes
