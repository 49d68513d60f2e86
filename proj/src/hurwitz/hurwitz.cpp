#include "stieltjes/hurwitz/hurwitz.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "stieltjes/combinatorics/combinatorics.hpp"
#include "stieltjes/mp/quadrature.hpp"
#include "stieltjes/specfun/specfun.hpp"

namespace stieltjes {

std::string method_name(Method m) {
  switch (m) {
    case Method::reference: return "reference";
    case Method::prop2i: return "prop2i";
    case Method::prop2ii: return "prop2ii";
    case Method::prop2iii: return "prop2iii";
    case Method::prop4: return "prop4";
    case Method::addition: return "addition";
    case Method::asymptotic: return "asymptotic";
    case Method::exp_series: return "exp-series";
  }
  return "unknown";
}

Method method_from_name(const std::string& name) {
  for (Method m : {Method::reference, Method::prop2i, Method::prop2ii, Method::prop2iii, Method::prop4,
                   Method::addition, Method::asymptotic, Method::exp_series})
    if (method_name(m) == name) return m;
  throw DomainError("unknown method: " + name);
}

namespace {

double digits_now() { return static_cast<double>(WorkingPrecision::bits()) * 0.30102999566398120; }

struct EmAttempt {
  Jet jet;
  long M = 0;
  bool converged = false;
  ErrMag truncation;
};

// One Euler-Maclaurin evaluation with fixed N; the caller holds the raised
// precision.
EmAttempt em_attempt(const Real& s0, std::size_t K, const Real& a, long N, long fixed_M, bool laurent, long target_bits) {
  Jet sum(s0, K);
  for (long n = 0; n < N; ++n) {
    Real base = a + Real(n);
    sum += inverse_power_jet(s0, K, base, log(base));
  }
  const Real X = a + Real(N);
  const Real L = log(X);

  // X^(1-s)/(s-1)
  if (laurent) {
    Real negL = -L;
    Real pw = negL;
    Real fact(1L);
    for (std::size_t m = 0; m <= K; ++m) {
      // (-L)^(m+1)/(m+1)!
      fact = fact * static_cast<long>(m + 1);
      sum[m] += pw / fact;
      pw = pw * negL;
    }
  } else {
    Jet num = inverse_power_jet(s0 - Real(1L), K, X, L);
    Jet den = Jet::variable(s0, K) - Real(1L);
    sum += num / den;
  }

  const Jet Xs = inverse_power_jet(s0, K, X, L);
  sum += Xs * Real(0.5);

  const ErrMag base_norm = max(sum.derivative_norm(), ErrMag::pow2(-4 * target_bits));
  const ErrMag target = ErrMag::pow2(-target_bits);
  const Real inv_x2 = Real(1L) / (X * X);
  Jet poch = Jet::variable(s0, K);  // (s)_1
  Real xpow = Real(1L) / X;         // X^(1-2j)
  ErrMag prev;
  EmAttempt out;
  for (long j = 1;; ++j) {
    if (j > 1) {
      poch.mul_linear(s0 + Real(2 * j - 3));
      poch.mul_linear(s0 + Real(2 * j - 2));
      xpow = xpow * inv_x2;
    }
    Real coef = Real(mpq_class(bernoulli(static_cast<unsigned>(2 * j)) / mpq_class(factorial(static_cast<unsigned>(2 * j)))));
    Jet term = (poch * Xs) * (coef * xpow);
    ErrMag tn = term.derivative_norm();
    bool small = tn <= target * max(sum.derivative_norm(), base_norm);
    if (fixed_M > 0) {
      if (j > fixed_M) {
        out.truncation = tn;
        out.converged = small;
        break;
      }
    } else if (small) {
      out.truncation = tn;
      out.converged = true;
      break;
    } else if (j > 2 && prev < tn) {
      out.truncation = tn;
      out.converged = false;
      break;
    }
    sum += term;
    prev = tn;
    out.M = j;
    if (j > 100000) break;
  }
  out.jet = std::move(sum);
  return out;
}

}  // namespace

HurwitzJet hurwitz_zeta_jet_detailed(const Real& s0, std::size_t K, const Real& a, const EmOptions& opt) {
  if (a.sign() <= 0) throw DomainError("Hurwitz zeta needs a > 0");
  const long p = WorkingPrecision::bits();
  const bool laurent = (s0 == Real(1L));
  long N = opt.N > 0 ? opt.N : std::max<long>(10, static_cast<long>(std::ceil(0.7 * digits_now())));
  const int max_tries = opt.N > 0 ? 1 : 6;
  HurwitzJet out;
  out.laurent = laurent;
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    const double lnX = std::log(static_cast<double>(N) + std::max(a.to_double(), 0.0));
    const long guard = 32 + static_cast<long>(std::ceil(static_cast<double>(K) * std::log2(2.0 + lnX)));
    EmAttempt r;
    {
      WorkingPrecision wp(p + guard);
      r = em_attempt(s0, K, a, N, opt.M, laurent, p + 8);
    }
    out.N = N;
    out.M = r.M;
    out.converged = r.converged;
    out.truncation = r.truncation;
    out.jet = Jet(s0, K);
    for (std::size_t m = 0; m <= K; ++m) {
      Real c = round_to_working(r.jet[m]);
      c.add_err(r.truncation);
      out.jet[m] = c;
    }
    if (r.converged) break;
    N *= 2;
  }
  return out;
}

Jet hurwitz_zeta_jet(const Real& s0, std::size_t K, const Real& a, const EmOptions& opt) {
  HurwitzJet h = hurwitz_zeta_jet_detailed(s0, K, a, opt);
  if (!h.converged) throw ConvergenceError("Euler-Maclaurin did not reach the target accuracy");
  return h.jet;
}

namespace {

std::string exact_key(const Real& x) {
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 16, 0, x.get(), MPFR_RNDN);
  std::string out = std::string(s) + "p" + std::to_string(e);
  mpfr_free_str(s);
  return out;
}

class JetCache {
 public:
  using Key = std::tuple<std::string, std::string, long>;

  bool find(const Key& k, std::size_t K, Jet& out) {
    std::shared_lock lk(mu_);
    auto it = map_.find(k);
    if (it == map_.end() || it->second.order() < K) return false;
    out = it->second.truncated(K);
    return true;
  }
  void insert(const Key& k, const Jet& j) {
    std::unique_lock lk(mu_);
    auto it = map_.find(k);
    if (it == map_.end() || it->second.order() < j.order()) map_[k] = j;
  }
  void clear() {
    std::unique_lock lk(mu_);
    map_.clear();
  }

 private:
  std::shared_mutex mu_;
  std::map<Key, Jet> map_;
};

JetCache& jet_cache() {
  static JetCache c;
  return c;
}

}  // namespace

Jet hurwitz_zeta_jet_cached(const Real& s0, std::size_t K, const Real& a) {
  JetCache::Key key{exact_key(s0), exact_key(a), static_cast<long>(WorkingPrecision::bits())};
  Jet out;
  if (jet_cache().find(key, K, out)) return out;
  out = hurwitz_zeta_jet(s0, K, a);
  jet_cache().insert(key, out);
  return out;
}

void clear_hurwitz_cache() { jet_cache().clear(); }

Real hurwitz_zeta(const Real& s, const Real& a) {
  if (s == Real(1L)) throw DomainError("zeta(s,a) has a pole at s = 1");
  return hurwitz_zeta_jet(s, 0, a)[0];
}

Real hurwitz_zeta_deriv(unsigned m, const Real& s, const Real& a) {
  if (s == Real(1L)) throw DomainError("zeta(s,a) has a pole at s = 1");
  return hurwitz_zeta_jet(s, m, a).derivative(m);
}

std::vector<Real> stieltjes_gammas(const Real& a, unsigned K) {
  Jet reg = hurwitz_zeta_jet_cached(Real(1L), K + 4, a);
  std::vector<Real> out;
  out.reserve(K + 1);
  for (unsigned k = 0; k <= K; ++k) {
    Real g = reg.derivative(k);
    if (k % 2) g = -g;
    out.push_back(g);
  }
  return out;
}

Real stieltjes_gamma(unsigned k, const Real& a) { return stieltjes_gammas(a, k)[k]; }

namespace {

StieltjesValue make_reference_value(unsigned k, const Real& a, const Real& g, long terms) {
  StieltjesValue v;
  v.k = k;
  v.a = a;
  v.value = g;
  Real e = g.err_as_real();
  ErrMag floor_err = rounding_error(g.get());
  if (floor_err.is_zero()) floor_err = ErrMag::pow2(-WorkingPrecision::bits());
  Real fe;
  floor_err.to_mpfr(fe.raw());
  v.err_est = max(e, fe);
  v.method = Method::reference;
  v.terms = terms;
  return v;
}

}  // namespace

StieltjesValue stieltjes_reference(unsigned k, const Real& a, int digits) {
  WorkingPrecision wp(bits_for_digits(digits));
  HurwitzJet h = hurwitz_zeta_jet_detailed(Real(1L), k + 4, a);
  if (!h.converged) throw ConvergenceError("Euler-Maclaurin did not reach the target accuracy");
  Real g = h.jet.derivative(k);
  if (k % 2) g = -g;
  return make_reference_value(k, a, g, h.N + h.M);
}

LaurentExpansion laurent_expansion(const Real& a, unsigned K, int digits) {
  WorkingPrecision wp(bits_for_digits(digits));
  HurwitzJet h = hurwitz_zeta_jet_detailed(Real(1L), K + 4, a);
  if (!h.converged) throw ConvergenceError("Euler-Maclaurin did not reach the target accuracy");
  LaurentExpansion le;
  le.a = a;
  le.pole_coeff = Real(1L);
  for (unsigned k = 0; k <= K; ++k) {
    Real g = h.jet.derivative(k);
    if (k % 2) g = -g;
    le.gammas.push_back(make_reference_value(k, a, g, h.N + h.M));
  }
  return le;
}

Real zeta_deriv_at_zero(unsigned j, const Real& a) {
  if (j < 1) throw DomainError("zeta_deriv_at_zero needs j >= 1");
  if (a.sign() <= 0) throw DomainError("zeta_deriv_at_zero needs a > 0");
  const long p = WorkingPrecision::bits();
  const double D = digits_now();
  Real result;
  {
    WorkingPrecision wp(p + 24);
    const Real la = log(a);
    // polynomial part
    Real poly;
    Real lk(1L);
    for (unsigned k = 0; k <= j; ++k) {
      Real t = Real(mpz_class(binomial(j, k) * factorial(j - k))) * lk;
      poly += (k % 2 == 0) ? -t : t;  // (-1)^(k+1)
      lk = lk * la;
    }
    poly = poly * a;
    Real lj = pow(la, static_cast<long>(j));
    poly += (j % 2 == 0) ? ldexp(lj, -1) : -ldexp(lj, -1);

    // int_a^inf ln^(j-1)x / x P1(x-a) dx over unit cells, then an
    // integration-by-parts tail at A = a + Nq.
    auto g = [&](const Real& x) {
      Real lx = log(x);
      return pow(lx, static_cast<long>(j - 1)) / x;
    };
    const long Nq = std::max<long>(12, static_cast<long>(std::ceil(0.6 * D)));
    const ErrMag eps = ErrMag::pow2(-(p + 8));
    Real integral;
    for (long n = 0; n < Nq; ++n) {
      Real lo = a + Real(n);
      auto r = integrate([&](const Real& u) { return (u - Real(0.5)) * g(lo + u); }, Real(0L), Real(1L), eps);
      if (!r.converged) throw ConvergenceError("zeta_deriv_at_zero: cell quadrature did not converge");
      integral += r.value;
    }
    const Real A = a + Real(Nq);
    const std::size_t order = 2 * static_cast<std::size_t>(std::ceil(0.6 * D)) + 12;
    Jet u = Jet::variable(A, order);
    Jet lg = log(u);
    Jet gj = reciprocal(u);
    for (unsigned i = 1; i < j; ++i) gj = gj * lg;
    Real tail;
    ErrMag prev;
    ErrMag last;
    const ErrMag target = ErrMag::pow2(-(p + 8));
    for (std::size_t i = 1; 2 * i - 2 <= order; ++i) {
      // -B_2i/(2i)! g^(2i-2)(A) = -B_2i (2i-2)!/(2i)! c_{2i-2}
      mpq_class c = bernoulli(static_cast<unsigned>(2 * i)) /
                    mpq_class(mpz_class(static_cast<unsigned long>(2 * i)) * mpz_class(static_cast<unsigned long>(2 * i - 1)));
      Real t = -(Real(c) * gj[2 * i - 2]);
      last = t.magnitude();
      if (i > 2 && prev < last) break;
      tail += t;
      prev = last;
      if (last <= target) break;
    }
    tail.add_err(last);
    integral += tail;
    Real jI = integral * static_cast<long>(j);
    result = poly + ((j % 2 == 0) ? jI : -jI);
  }
  return round_to_working(result);
}

AuxConstants aux_constants(int digits) {
  WorkingPrecision wp(bits_for_digits(digits));
  AuxConstants c;
  c.zeta_prime_2 = hurwitz_zeta_jet(Real(2L), 1, Real(1L)).derivative(1);
  c.zeta_prime_minus1 = hurwitz_zeta_jet(Real(-1L), 1, Real(1L)).derivative(1);
  c.log_glaisher = Real(mpq_class(1, 12)) - c.zeta_prime_minus1;
  return c;
}

Real gamma_hermite_integral(unsigned k, const Real& a) {
  if (a.sign() <= 0) throw DomainError("gamma_hermite_integral needs a > 0");
  const long p = WorkingPrecision::bits();
  Real result;
  {
    WorkingPrecision wp(p + 24);
    const Real la = log(a);
    const Real two_pi = ldexp(const_pi(), 1);
    auto f = [&](const Real& y) {
      // ln(a - iy) = ln|a - iy| - i atan(y/a)
      Real re = ldexp(log(a * a + y * y), -1);
      Real im = -atan(y / a);
      Real pr(1L), pi(0L);
      for (unsigned i = 0; i < k; ++i) {
        Real nr = pr * re - pi * im;
        pi = pr * im + pi * re;
        pr = nr;
      }
      // Re[(y/a - i)(pr + i pi)] = (y/a) pr + pi
      Real num = (y / a) * pr + pi;
      Real den = (Real(1L) + (y * y) / (a * a)) * expm1(two_pi * y);
      if (den.is_zero()) return Real(0L);
      return num / den;
    };
    auto r = integrate_to_infinity(f, Real(0L), ErrMag::pow2(-(p + 8)));
    if (!r.converged) throw ConvergenceError("gamma_hermite_integral: quadrature did not converge");
    Real lk = pow(la, static_cast<long>(k));
    result = lk / ldexp(a, 1) - lk * la / static_cast<long>(k + 1) + ldexp(r.value, 1) / a;
  }
  return round_to_working(result);
}

MarichevSum marichev_sum(unsigned n, const Real& a) {
  const long p = WorkingPrecision::bits();
  MarichevSum out;
  unsigned K = n + 24;
  for (int attempt = 0; attempt < 6; ++attempt, K *= 2) {
    std::vector<Real> g = stieltjes_gammas(a, K);
    Real sum;
    Real fact(1L);
    long used = 0;
    bool done = false;
    const ErrMag target = ErrMag::pow2(-(p + 4));
    int quiet = 0;
    for (unsigned k = 0; n + k <= K; ++k) {
      if (k > 0) fact = fact * static_cast<long>(k);
      Real t = g[n + k] / fact;
      sum += t;
      ++used;
      quiet = (t.magnitude() <= target * sum.magnitude()) ? quiet + 1 : 0;
      if (quiet >= 3) {
        done = true;
        break;
      }
    }
    if (done) {
      out.sum = sum;
      out.terms = used;
      break;
    }
  }
  if (out.terms == 0) throw ConvergenceError("marichev_sum did not converge");
  Real z = (n == 0) ? Real(0.5) - a : zeta_deriv_at_zero(n, a);
  Real e = z + Real(factorial(n));
  out.expected = (n % 2) ? -e : e;
  return out;
}

Prop6Result prop6_integral(unsigned j, const Real& z) {
  if (z.sign() <= 0) throw DomainError("prop6_integral needs z > 0");
  const long p = WorkingPrecision::bits();
  Prop6Result out;
  const Real jf(factorial(j));
  const ErrMag eps = ErrMag::pow2(-(p + 4));
  // gamma_k(a) = gamma_k(a+1) + ln^k a / a splits the sum into an entire
  // part in a and (z ln a)^j a^(z-1) / j!.
  long max_terms = 0;
  auto smooth = [&](const Real& a) {
    unsigned K = j + 30;
    for (int attempt = 0; attempt < 5; ++attempt, K *= 2) {
      std::vector<Real> g = stieltjes_gammas(a + Real(1L), K);
      Real sum;
      Real zk = pow(z, static_cast<long>(j));
      Real fact(1L);  // (k-j)!
      int quiet = 0;
      for (unsigned k = j; k <= K; ++k) {
        if (k > j) {
          fact = fact * static_cast<long>(k - j);
          zk = zk * z;
        }
        Real t = zk * g[k] / fact;
        sum += t;
        quiet = (t.magnitude() <= ErrMag::pow2(-(p + 4)) * sum.magnitude()) ? quiet + 1 : 0;
        if (quiet >= 3) {
          max_terms = std::max<long>(max_terms, static_cast<long>(k - j + 1));
          return sum / jf;
        }
      }
    }
    throw ConvergenceError("prop6_integral: k-sum did not converge");
  };
  auto sm = integrate(smooth, Real(0L), Real(1L), eps);
  auto singular = [&](const Real& a) {
    Real la = log(a);
    return pow(z * la, static_cast<long>(j)) * exp((z - Real(1L)) * la) / jf;
  };
  auto sg = integrate(singular, Real(0L), Real(1L), eps);
  if (!sm.converged || !sg.converged) throw ConvergenceError("prop6_integral: quadrature did not converge");
  out.smooth_part = sm.value;
  out.singular_part = sg.value;
  out.lhs = sm.value + sg.value;
  out.rhs = Real(1L) / z;
  if (j % 2) out.rhs = -out.rhs;
  out.terms = max_terms;
  return out;
}

}  // namespace stieltjes
