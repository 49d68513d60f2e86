#pragma once

#include <cstddef>
#include <string>

#include "stieltjes/mp/jet.hpp"
#include "stieltjes/mp/real.hpp"

namespace stieltjes {

struct SumReport {
  Real value;
  long terms_used = 0;
  bool converged = false;
  Real tail_bound;
};

struct JetSumReport {
  Jet value;
  long terms_used = 0;
  bool converged = false;
  Real tail_bound;
};

struct SumOptions {
  long min_terms = 1;
  long max_terms = 100000;
  int stability_window = 3;
  long first_index = 0;
};

namespace detail {

inline ErrMag size_of(const Real& x) { return x.magnitude(); }
inline ErrMag size_of(const Jet& j) { return j.coefficient_norm(); }
inline bool finite(const Real& x) { return x.is_finite(); }
inline bool finite(const Jet& j) {
  for (const auto& c : j.coeffs())
    if (!c.is_finite()) return false;
  return true;
}

template <class T, class Term>
long run_sum(T& acc, bool& converged, ErrMag& last_inc, Term&& term, const ErrMag& eps, const SumOptions& opt) {
  if (!(ErrMag{} < eps)) throw DomainError("sum_until_converged: eps must be positive");
  if (opt.min_terms < 1 || opt.max_terms < opt.min_terms)
    throw DomainError("sum_until_converged: need max_terms >= min_terms >= 1");
  int quiet = 0;
  long used = 0;
  converged = false;
  for (long i = 0; i < opt.max_terms; ++i) {
    const long n = opt.first_index + i;
    T t = term(n);
    if (!finite(t)) throw ConvergenceError("non-finite term at index " + std::to_string(n));
    if (i == 0) {
      acc = t;
    } else {
      acc += t;
    }
    ++used;
    ErrMag inc = size_of(t);
    last_inc = inc;
    ErrMag scale = size_of(acc);
    bool small = inc.is_zero() || inc <= eps * scale;
    quiet = small ? quiet + 1 : 0;
    if (used >= opt.min_terms && quiet >= opt.stability_window) {
      converged = true;
      break;
    }
  }
  return used;
}

}  // namespace detail

/// Sums term(first_index), term(first_index+1), ... until the last
/// `stability_window` increments are all below eps * |partial sum|.
///
/// tail_bound is the last increment, the usual proxy when the terms decay
/// at least geometrically.
template <class Term>
SumReport sum_until_converged(Term&& term, const ErrMag& eps, const SumOptions& opt = {}) {
  SumReport r;
  ErrMag last;
  r.terms_used = detail::run_sum(r.value, r.converged, last, term, eps, opt);
  Real tb;
  last.to_mpfr(tb.raw());
  r.tail_bound = tb;
  r.value.add_err(last);
  return r;
}

template <class Term>
JetSumReport sum_jets_until_converged(Term&& term, const ErrMag& eps, const SumOptions& opt = {}) {
  JetSumReport r;
  ErrMag last;
  r.terms_used = detail::run_sum(r.value, r.converged, last, term, eps, opt);
  Real tb;
  last.to_mpfr(tb.raw());
  r.tail_bound = tb;
  for (std::size_t m = 0; m <= r.value.order(); ++m) r.value[m].add_err(last);
  return r;
}

/// 2^(-bits): the usual relative eps for a working precision.
inline ErrMag eps_for_bits(long bits) { return ErrMag::pow2(-bits); }

}  // namespace stieltjes
