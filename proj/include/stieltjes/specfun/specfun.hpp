#pragma once

#include <vector>

#include "stieltjes/mp/jet.hpp"
#include "stieltjes/mp/real.hpp"

namespace stieltjes {

/// psi(a) for a > 0.
Real digamma(const Real& a);
/// psi^(m)(a) for a > 0; m = 0 is digamma.
Real polygamma(unsigned m, const Real& a);

Real gamma_fn(const Real& x);
/// ln Gamma(x) for x > 0.
Real lngamma(const Real& x);
/// ln Gamma(c + t) as a jet in t, order K; requires c > 0.
Jet lngamma_jet(const Real& c, std::size_t K);

Real erf(const Real& x);
Real erfc(const Real& x);
/// Ei(x) for x < 0 only.
Real ei(const Real& x);

/// Gamma(alpha, x) for x > 0. alpha = 0 and 1/2 use the closed forms;
/// other alpha go through the 1F1 relation and exclude nonpositive integers.
Real incomplete_gamma(const Real& alpha, const Real& x);
/// d/d alpha Gamma(alpha, x). alpha = 0 uses the cancelled limit; other
/// alpha must be positive (best effort away from 0 and 1/2).
Real incomplete_gamma_dalpha(const Real& alpha, const Real& x);

struct HypergeometricSpec {
  std::vector<Real> upper;
  std::vector<Real> lower;
  Real argument;
};

struct PfqResult {
  Real value;
  long terms = 0;
  long guard_bits = 0;
};

/// Sum_k prod (a_i)_k / prod (b_j)_k x^k / k!, for p <= q (entire cases).
/// Guard bits ceil(1.5 |x| log2 e) cover the cancellation of alternating
/// series at large negative x.
PfqResult pfq_detailed(const HypergeometricSpec& spec);
Real pfq(const HypergeometricSpec& spec);

/// 1 + 2 sum q^(n^2), 0 < q < 1.
Real theta3(const Real& q);
/// Periodized Bernoulli polynomial t - floor(t) - 1/2.
Real P1(const Real& t);

/// Number of guard bits pfq adds for argument x.
long pfq_guard_bits(const Real& x);

}  // namespace stieltjes
