#pragma once

#include <algorithm>

#include "stieltjes/core/core.hpp"
#include "stieltjes/mp/jet.hpp"

namespace stieltjes::core_detail {

struct Accum {
  Real sum;
  Real tail;  // estimated remainder after the last term
  long terms = 0;
  bool converged = false;
};

/// Sums term(first), term(first+1), ... under the plan. Adaptive mode
/// stops after three consecutive terms below 2^-prec |sum|; the remainder
/// is estimated from the ratio of the last two terms.
template <class Term>
Accum run_series(Term&& term, long first, const TruncationPlan& plan) {
  const long p = WorkingPrecision::bits();
  const ErrMag eps = ErrMag::pow2(-p);
  Accum acc;
  Real last, prev;
  int quiet = 0;
  const long cap = plan.fixed_terms > 0 ? plan.fixed_terms : plan.max_terms;
  for (long i = 0; i < cap; ++i) {
    Real t = term(first + i);
    if (!t.is_finite()) throw ConvergenceError("non-finite term at index " + std::to_string(first + i));
    acc.sum += t;
    ++acc.terms;
    prev = last;
    last = abs(t);
    last.set_err({});
    bool small = t.is_zero() || t.magnitude() <= eps * acc.sum.magnitude();
    quiet = small ? quiet + 1 : 0;
    if (plan.fixed_terms == 0 && quiet >= 3) {
      acc.converged = true;
      break;
    }
  }
  // remainder ~ last * r/(1-r) for ratio r, at least the last term
  Real tail = last;
  if (acc.terms >= 2 && !prev.is_zero()) {
    double r = (last / prev).to_double();
    if (r < 0.99 && r > 0.5) tail = last * Real(r / (1.0 - r));
    if (r >= 0.99) tail = last * Real(100L);
  }
  acc.tail = tail;
  if (plan.fixed_terms > 0) acc.converged = tail.magnitude() <= eps * acc.sum.magnitude() || tail.is_zero();
  return acc;
}

/// zeta^(m)(s,a)/m! for m = 0..n about an integer s >= 2.
inline Jet zeta_coeffs(long s, unsigned n, const Real& a) { return hurwitz_zeta_jet_cached(Real(s), n, a); }

/// Packs a series result; err_est never claims more than the working
/// precision minus half the guard bits.
inline StieltjesValue finish(unsigned k, const Real& a, Method m, const Real& value, const Real& tail, long terms,
                             bool converged) {
  StieltjesValue v;
  v.k = k;
  v.a = a;
  v.value = value;
  v.value.add_err(tail.magnitude());
  Real e = v.value.err_as_real();
  Real fl = abs(value) * ldexp(Real(1L), -(WorkingPrecision::bits() - kGuardBits / 2));
  fl.set_err({});
  v.err_est = max(e, fl);
  v.method = m;
  v.terms = terms;
  v.converged = converged;
  return v;
}

}  // namespace stieltjes::core_detail
