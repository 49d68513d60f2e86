#include "series_util.hpp"
#include "stieltjes/combinatorics/combinatorics.hpp"

namespace stieltjes {

BoundReport bounds_report(unsigned n, const Real& a, int digits) {
  if (n < 1) throw DomainError("bounds need n >= 1");
  if (a.sign() <= 0 || a > Real(1L)) throw DomainError("bounds need 0 < a <= 1");
  WorkingPrecision wp(bits_for_digits(digits));
  BoundReport r;
  r.n = n;
  r.a = a;
  r.C_value = stieltjes_gamma(n, a) - pow(log(a), static_cast<long>(n)) / a;
  const Real e = exp(Real(1L));
  const Real nn(static_cast<long>(n));
  r.bound_stated = e * Real(factorial(n)) / (sqrt(nn) * ldexp(Real(1L), n));
  r.bound_proof = e * pow(nn, static_cast<long>(n)) / (ldexp(Real(1L), n) * pow(e, static_cast<long>(n)));
  r.bound_zw = Real(static_cast<long>(3 + (n % 2 ? -1 : 1))) * Real(factorial(2 * n)) /
               (pow(nn, static_cast<long>(n + 1)) * pow(ldexp(const_pi(), 1), static_cast<long>(n)));
  Real c = abs(r.C_value);
  r.satisfied_stated = c <= r.bound_stated;
  r.satisfied_proof = c <= r.bound_proof;
  r.satisfied_zw = c <= r.bound_zw;
  return r;
}

std::vector<Method> methods_in_domain(unsigned, const Real& a) {
  std::vector<Method> out{Method::reference};
  if (prop2_in_domain(Prop2Variant::i, a)) out.push_back(Method::prop2i);
  if (prop2_in_domain(Prop2Variant::ii, a)) {
    out.push_back(Method::prop2ii);
    out.push_back(Method::prop2iii);
  }
  if (a.sign() > 0) {
    out.push_back(Method::prop4);
    out.push_back(Method::addition);
  }
  return out;
}

StieltjesValue compute_gamma(Method m, unsigned n, const Real& a, const TruncationPlan& plan) {
  switch (m) {
    case Method::reference:
      return stieltjes_reference(n, a, plan.digits);
    case Method::prop2i:
      return gamma_series_prop2(Prop2Variant::i, n, a, plan);
    case Method::prop2ii:
      return gamma_series_prop2(Prop2Variant::ii, n, a, plan);
    case Method::prop2iii:
      return gamma_series_prop2(Prop2Variant::iii, n, a, plan);
    case Method::prop4:
      return gamma_series_prop4(n, a, 0, plan);
    case Method::addition:
      return gamma_addition_nearby(n, a, plan);
    case Method::asymptotic: {
      WorkingPrecision wp(bits_for_digits(plan.digits));
      AsymptoticValue av = gamma_asymptotic(n, a);
      return core_detail::finish(n, a, Method::asymptotic, av.value, av.omitted, av.terms,
                                 av.omitted.magnitude() <= ErrMag::pow2(-WorkingPrecision::bits()) *
                                                               av.value.magnitude());
    }
    case Method::exp_series:
      if (n != 1 || !(a == Real(1L))) throw DomainError("exp-series covers gamma_1(1) only");
      return gamma1_exp_series_value(plan.digits);
  }
  throw DomainError("unknown method");
}

}  // namespace stieltjes
