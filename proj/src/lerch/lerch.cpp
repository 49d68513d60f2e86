#include "stieltjes/lerch/lerch.hpp"

#include <numeric>

#include "stieltjes/combinatorics/combinatorics.hpp"
#include "stieltjes/core/core.hpp"
#include "stieltjes/hurwitz/hurwitz.hpp"
#include "stieltjes/specfun/specfun.hpp"

namespace stieltjes {

RationalPhase RationalPhase::make(long p, long q) {
  if (q <= 0) throw DomainError("phase denominator must be positive");
  long r = ((p % q) + q) % q;
  if (r == 0) throw DomainError("integral x reduces to the Hurwitz zeta function");
  long g = std::gcd(r, q);
  return {r / g, q / g};
}

namespace {

// cos and sin of 2 pi p r / q
Complex root_of_unity(const RationalPhase& x, long r) {
  Real th = ldexp(const_pi(), 1) * Real(mpq_class((x.p * r) % x.q, x.q));
  return {cos(th), sin(th)};
}

Jet scale_arg(Jet j, const Real& c) {
  Real f(1L);
  for (std::size_t m = 0; m <= j.order(); ++m) {
    j[m] = j[m] * f;
    f = f * c;
  }
  return j;
}

}  // namespace

LerchJet lerch_jet(const RationalPhase& x, long s0, std::size_t K, const Real& a) {
  if (a.sign() <= 0) throw DomainError("Lerch coefficients need a > 0");
  if (s0 < 1) throw DomainError("lerch_jet needs an integer centre >= 1");
  const Real S0(s0);
  Jet re(S0, K), im(S0, K);
  const Real q(x.q);
  for (long r = 0; r < x.q; ++r) {
    // at s0 = 1 the cached jet is the regular part; the poles cancel because
    // the roots of unity sum to zero
    Jet z = hurwitz_zeta_jet_cached(S0, K, (a + Real(r)) / q);
    Complex w = root_of_unity(x, r);
    Jet zr = z, zi = z;
    zr *= w.re;
    zi *= w.im;
    re += zr;
    im += zi;
  }
  Jet qs = inverse_power_jet(S0, K, q, log(q));
  return {re * qs, im * qs};
}

Complex lerch_value(const RationalPhase& x, const Real& s, const Real& a) {
  if (a.sign() <= 0) throw DomainError("Lerch value needs a > 0");
  if (s.sign() <= 0) throw DomainError("Lerch value needs s > 0");
  if (s == Real(1L)) {
    LerchJet j = lerch_jet(x, 1, 0, a);
    return {j.re[0], j.im[0]};
  }
  const Real q(x.q);
  Complex out;
  for (long r = 0; r < x.q; ++r) {
    Real z = hurwitz_zeta(s, (a + Real(r)) / q);
    Complex w = root_of_unity(x, r);
    out.re += w.re * z;
    out.im += w.im * z;
  }
  Real qs = pow(q, -s);
  return {out.re * qs, out.im * qs};
}

Complex ell_coeff(unsigned n, const RationalPhase& x, const Real& a) {
  LerchJet j = lerch_jet(x, 1, n, a);
  Real f(factorial(n));
  Complex c{j.re[n] * f, j.im[n] * f};
  if (n % 2) c = {-c.re, -c.im};
  return c;
}

Real ell_half_closed_form(unsigned n, const Real& a) {
  if (n > 2) throw DomainError("closed forms cover n <= 2");
  Real h = ldexp(a, -1);
  Real h1 = ldexp(a + Real(1L), -1);
  Real l2 = const_log2();
  Real dpsi = digamma(h1) - digamma(h);
  switch (n) {
    case 0:
      return ldexp(dpsi, -1);
    case 1:
      return ldexp(l2 * dpsi + stieltjes_gamma(1, h) - stieltjes_gamma(1, h1), -1);
    default:
      return ldexp(l2 * l2 * dpsi + ldexp(l2, 1) * (stieltjes_gamma(1, h) - stieltjes_gamma(1, h1)) +
                       stieltjes_gamma(2, h) - stieltjes_gamma(2, h1),
                   -1);
  }
}

Complex ell_quarter_from_gammas(unsigned n, const Real& a) {
  std::vector<std::vector<Real>> g;
  for (long r = 0; r < 4; ++r) g.push_back(stieltjes_gammas(ldexp(a + Real(r), -2), n));
  Real l4 = log(Real(4L));
  Complex out;
  for (unsigned k = 0; k <= n; ++k) {
    Real w = Real(binomial(n, k)) * pow(l4, static_cast<long>(n - k));
    out.re += w * (g[0][k] - g[2][k]);
    out.im += w * (g[1][k] - g[3][k]);
  }
  return {ldexp(out.re, -2), ldexp(out.im, -2)};
}

namespace {

// sum_j (-1)^j C(n,j) (n-j)! s(k, n-j+1) L^(j)(x, k, a)
Complex stirling_lerch(unsigned k, unsigned n, const RationalPhase& x, const Real& a) {
  LerchJet L = lerch_jet(x, k, n, a);
  Complex out;
  for (unsigned j = 0; j <= n; ++j) {
    if (n - j + 1 > k) continue;
    // C(n,j) (n-j)! j! = n!
    Real w = Real(mpz_class(factorial(n) * stirling1(k, n - j + 1)));
    if (j % 2) w = -w;
    out.re += w * L.re[j];
    out.im += w * L.im[j];
  }
  return out;
}

}  // namespace

Complex ell_derivative(unsigned k, unsigned n, const RationalPhase& x, const Real& a) {
  if (k < 1) throw DomainError("derivative order must be at least 1");
  return stirling_lerch(k + 1, n, x, a);
}

EllAddition ell_addition(unsigned n, const RationalPhase& x, const Real& a, const Real& xi, int digits,
                         long max_terms) {
  if (a.sign() <= 0) throw DomainError("Lerch addition needs a > 0");
  if (!(abs(xi) < a)) throw DomainError("Lerch addition needs |xi| < a");
  WorkingPrecision wp(bits_for_digits(digits));
  const ErrMag eps = ErrMag::pow2(-WorkingPrecision::bits());
  EllAddition out;
  out.value = ell_coeff(n, x, a);
  if (xi.is_zero()) {
    out.converged = true;
    return out;
  }
  Real xp(1L);
  int quiet = 0;
  for (long k = 2; k < max_terms + 2; ++k) {
    xp = xp * xi / Real(k - 1);
    Complex t = stirling_lerch(static_cast<unsigned>(k), n, x, a);
    t = {t.re * xp, t.im * xp};
    out.value.re += t.re;
    out.value.im += t.im;
    ++out.terms;
    ErrMag mag = max(t.re.magnitude(), t.im.magnitude());
    ErrMag scale = max(out.value.re.magnitude(), out.value.im.magnitude());
    quiet = (mag.is_zero() || mag <= eps * scale) ? quiet + 1 : 0;
    if (quiet >= 3) {
      out.converged = true;
      break;
    }
  }
  return out;
}

DirichletCharacter::DirichletCharacter(long modulus, std::vector<Complex> values, int tol_digits)
    : m_(modulus), values_(std::move(values)) {
  if (m_ < 1) throw DomainError("character modulus must be positive");
  if (static_cast<long>(values_.size()) != m_) throw DomainError("character table must list chi(1..m)");
  WorkingPrecision wp(bits_for_digits(tol_digits));
  Real tol = pow(Real(10L), static_cast<long>(-tol_digits));
  principal_ = true;
  for (long k = 1; k <= m_; ++k) {
    const Complex& c = (*this)(k);
    bool unit = std::gcd(k, m_) == 1;
    Real mod2 = c.re * c.re + c.im * c.im;
    if (!unit && !(mod2 <= tol)) throw DomainError("chi(k) must vanish when gcd(k, m) > 1");
    if (unit && !(abs(mod2 - Real(1L)) <= tol)) throw DomainError("chi(k) must have modulus 1 on units");
    if (unit && !(abs(c.re - Real(1L)) <= tol && abs(c.im) <= tol)) principal_ = false;
  }
  for (long i = 1; i <= m_; ++i)
    for (long j = i; j <= m_; ++j) {
      const Complex &x = (*this)(i), &y = (*this)(j), &z = (*this)((i * j - 1) % m_ + 1);
      Real pr = x.re * y.re - x.im * y.im, pi = x.re * y.im + x.im * y.re;
      if (!(abs(pr - z.re) <= tol && abs(pi - z.im) <= tol)) throw DomainError("character table is not multiplicative");
    }
}

DirichletCharacter DirichletCharacter::principal(long modulus) {
  std::vector<Complex> v;
  for (long k = 1; k <= modulus; ++k) v.push_back({Real(std::gcd(k, modulus) == 1 ? 1L : 0L), Real(0L)});
  return DirichletCharacter(modulus, std::move(v));
}

DirichletCharacter DirichletCharacter::mod4() {
  return DirichletCharacter(4, {{Real(1L), Real(0L)}, {Real(0L), Real(0L)}, {Real(-1L), Real(0L)}, {Real(0L), Real(0L)}});
}

DirichletCharacter DirichletCharacter::mod3() {
  return DirichletCharacter(3, {{Real(1L), Real(0L)}, {Real(-1L), Real(0L)}, {Real(0L), Real(0L)}});
}

DirichletLaurent dirichlet_L_laurent(const DirichletCharacter& chi, std::size_t K, int digits) {
  WorkingPrecision wp(bits_for_digits(digits));
  const long m = chi.modulus();
  const Real M(m);
  const Real one(1L);
  Jet re(one, K), im(one, K);
  Complex P;
  for (long k = 1; k <= m; ++k) {
    const Complex& c = chi(k);
    if (c.re.is_zero() && c.im.is_zero()) continue;
    Jet z = hurwitz_zeta_jet_cached(one, K, Real(mpq_class(k, m)));
    Jet zr = z, zi = z;
    zr *= c.re;
    zi *= c.im;
    re += zr;
    im += zi;
    P.re += c.re;
    P.im += c.im;
  }
  Jet ms = inverse_power_jet(one, K + 1, M, log(M));
  Jet ms_k = ms.truncated(K);
  re = re * ms_k;
  im = im * ms_k;
  // m^-s/(s-1) = (1/m)/(s-1) + sum_{j>=1} ms[j] (s-1)^(j-1)
  DirichletLaurent out;
  out.pole = {P.re * ms[0], P.im * ms[0]};
  for (std::size_t j = 0; j <= K; ++j)
    out.coeffs.push_back({re[j] + P.re * ms[j + 1], im[j] + P.im * ms[j + 1]});
  return out;
}

std::vector<Real> polylog_pair_derivs_at_zero(const Real& a, std::size_t K) {
  if (!(a.sign() > 0 && a < Real(1L))) throw DomainError("need 0 < a < 1");
  const Real zero(0L);
  const Real half(mpq_class(1, 2));
  const Real pi = const_pi();
  // S(s) = pi^(s-1/2) Gamma((1-s)/2) / Gamma(s/2) [zeta(1-s,a) + zeta(1-s,1-a)]
  //      = pi^(s-1/2) Gamma((1-s)/2) exp(-lnGamma(1+s/2)) (s/2) Z(1-s)
  Jet s = Jet::variable(zero, K);
  Jet A = pow(pi, s - Jet::constant(zero, K, half));
  Jet lg = lngamma_jet(half, K);
  Jet B = exp(Jet(zero, scale_arg(lg, -half).coeffs()));
  Jet lg1 = lngamma_jet(Real(1L), K);
  Jet C = exp(-Jet(zero, scale_arg(lg1, half).coeffs()));
  // (s/2) Z(1-s) = -1 + (s/2) sum G_k s^k / k!,  G_k = gamma_k(a) + gamma_k(1-a)
  std::vector<Real> ga = stieltjes_gammas(a, K), gb = stieltjes_gammas(Real(1L) - a, K);
  Jet D(zero, K);
  D[0] = Real(-1L);
  Real f(1L);
  for (std::size_t k = 0; k + 1 <= K; ++k) {
    if (k > 0) f = f * static_cast<long>(k);
    D[k + 1] = ldexp((ga[k] + gb[k]) / f, -1);
  }
  Jet S = A * B * C * D;
  std::vector<Real> out;
  for (std::size_t k = 0; k <= K; ++k) out.push_back(S.derivative(k));
  return out;
}

Prop10Result prop10_check(const Real& a, Prop10Part part, int digits) {
  if (!(a.sign() > 0 && a < Real(1L))) throw DomainError("need 0 < a < 1");
  WorkingPrecision wp(bits_for_digits(digits));
  const Real pi = const_pi();
  const Real lpi = log(pi);
  const Real g = const_euler();
  const Real ps = digamma(Real(mpq_class(1, 2)));
  std::vector<Real> S = polylog_pair_derivs_at_zero(a, 2);
  Prop10Result r;
  if (part == Prop10Part::i) {
    r.lhs = -lpi + ps - pi * cot(pi * a) - ldexp(digamma(a), 1);
    r.rhs = g + lpi + ldexp(S[1], 1);
  } else {
    Real b = Real(1L) - a;
    TruncationPlan plan{.digits = digits};
    r.lhs = gamma_series_prop4(1, a, 0, plan).value + gamma_series_prop4(1, b, 0, plan).value;
    Real gl = g + lpi;
    r.rhs = pi * pi / 12L + ldexp(lpi * lpi, -2) - ldexp(lpi * ps, -1) + ldexp(ps * ps, -2) +
            ldexp((lpi - ps) * (digamma(a) + digamma(b)), -1) - ldexp(gl * gl, -2) - gl * S[1] + S[2];
  }
  Real tol = pow(Real(10L), static_cast<long>(-digits)) * max(Real(1L), abs(r.lhs));
  r.agree = abs(r.lhs - r.rhs) <= tol;
  return r;
}

}  // namespace stieltjes
