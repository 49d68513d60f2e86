#pragma once

#include <functional>

#include "stieltjes/mp/real.hpp"
#include "stieltjes/mp/summation.hpp"

namespace stieltjes {

enum class Domain { finite, half_line, full_line };

using RealFn = std::function<Real(const Real&)>;

struct QuadOptions {
  int max_levels = 12;
  /// Initial step of the transformed variable is 2^-initial_level.
  int initial_level = 0;
};

/// Double-exponential quadrature.
///
/// finite: tanh-sinh on [lo, hi]. half_line: exp-sinh on [lo, inf).
/// full_line: sinh-sinh on (-inf, inf); lo and hi are ignored except that
/// lo shifts the centre of the full-line map.
///
/// The step is halved until successive estimates agree; tail_bound is the
/// quadratic-convergence estimate d_k^2 / d_{k-1} once that regime is
/// visible, otherwise the last difference d_k. eps is absolute.
SumReport quadrature(const RealFn& f, Domain domain, const Real& lo, const Real& hi, const ErrMag& eps,
                     const QuadOptions& opt = {});

inline SumReport integrate(const RealFn& f, const Real& lo, const Real& hi, const ErrMag& eps) {
  return quadrature(f, Domain::finite, lo, hi, eps);
}
inline SumReport integrate_to_infinity(const RealFn& f, const Real& lo, const ErrMag& eps) {
  return quadrature(f, Domain::half_line, lo, Real(0L), eps);
}
inline SumReport integrate_full_line(const RealFn& f, const ErrMag& eps, const Real& centre = Real(0L)) {
  return quadrature(f, Domain::full_line, centre, Real(0L), eps);
}

}  // namespace stieltjes
