#include "stieltjes/mp/quadrature.hpp"

#include <cmath>

namespace stieltjes {

namespace {

struct Node {
  Real x;
  Real w;  // without the factor h
};

// u = (pi/2) sinh t and the derived abscissa/weight for each map.
Node make_node(Domain d, const Real& t, const Real& lo, const Real& hi, const Real& half_pi) {
  Real u = half_pi * sinh(t);
  Real ct = half_pi * cosh(t);
  switch (d) {
    case Domain::finite: {
      Real len = hi - lo;
      Real e2 = exp(ldexp(abs(u), 1));  // e^{2|u|}
      Real near = len / (Real(1L) + e2);  // distance to the closer endpoint
      Real x = u.sign() < 0 ? lo + near : hi - near;
      Real ch = cosh(u);
      Real w = ldexp(len, -1) * ct / (ch * ch);
      return {x, w};
    }
    case Domain::half_line: {
      Real eu = exp(u);
      return {lo + eu, ct * eu};
    }
    case Domain::full_line:
    default:
      return {lo + sinh(u), ct * cosh(u)};
  }
}

}  // namespace

SumReport quadrature(const RealFn& f, Domain domain, const Real& lo, const Real& hi, const ErrMag& eps,
                     const QuadOptions& opt) {
  if (domain == Domain::finite && !(lo < hi)) {
    if (lo == hi) {
      SumReport z;
      z.value = Real(0L);
      z.converged = true;
      z.tail_bound = Real(0L);
      return z;
    }
    SumReport r = quadrature(f, domain, hi, lo, eps, opt);
    r.value = -r.value;
    return r;
  }
  const long p = WorkingPrecision::bits();
  const Real half_pi = ldexp(const_pi(), -1);
  const double umax = static_cast<double>(p) * std::log(2.0) + 10.0;
  const double tmax = std::asinh(2.0 * umax / M_PI);
  const ErrMag tiny = ErrMag::pow2(-p - 8);

  // Per-side cut points discovered at the coarsest level.
  double cut_neg = tmax;
  double cut_pos = tmax;

  auto eval = [&](const Real& t, Real& sum) -> ErrMag {
    Node nd = make_node(domain, t, lo, hi, half_pi);
    Real fx = f(nd.x);
    if (!fx.is_finite()) throw ConvergenceError("quadrature: non-finite integrand value");
    Real term = nd.w * fx;
    sum += term;
    return term.magnitude();
  };

  Real sum;  // sum of w*f over all nodes so far, weights without h
  long evals = 0;
  int level = opt.initial_level;
  Real h = ldexp(Real(1L), -level);

  // Coarsest level: walk out from t=0 in each direction.
  {
    eval(Real(0L), sum);
    ++evals;
    for (int side = -1; side <= 1; side += 2) {
      int quiet = 0;
      long k = 1;
      for (;; ++k) {
        double tv = std::ldexp(static_cast<double>(k), -level);
        if (tv > tmax) break;
        Real t = h * (side * k);
        ErrMag m = eval(t, sum);
        ++evals;
        ErrMag scale = max(sum.magnitude(), ErrMag::pow2(-4 * p));
        quiet = (m <= tiny * scale) ? quiet + 1 : 0;
        if (quiet >= 2) break;
      }
      double cut = std::ldexp(static_cast<double>(k), -level);
      (side < 0 ? cut_neg : cut_pos) = std::min(cut, tmax);
    }
  }

  Real est = h * sum;
  Real prev_diff;
  bool have_prev = false;
  SumReport out;
  out.value = est;
  out.converged = false;
  out.tail_bound = Real(0L);

  for (int lv = level + 1; lv <= level + opt.max_levels; ++lv) {
    h = ldexp(h, -1);
    // New nodes are the odd multiples of the halved step.
    for (int side = -1; side <= 1; side += 2) {
      double cut = side < 0 ? cut_neg : cut_pos;
      for (long k = 1;; k += 2) {
        double tv = std::ldexp(static_cast<double>(k), -lv);
        if (tv > cut) break;
        Real t = ldexp(Real(side * k), -lv);
        eval(t, sum);
        ++evals;
      }
    }
    Real next = h * sum;
    Real diff = abs(next - est);
    diff.set_err({});
    Real bound = diff;
    if (have_prev && !prev_diff.is_zero() && diff.magnitude().log2() < 1.5 * prev_diff.magnitude().log2() + 0.0 &&
        prev_diff < Real(1L)) {
      bound = diff * diff / prev_diff;
    }
    est = next;
    out.value = est;
    out.terms_used = evals;
    out.tail_bound = bound;
    if (bound.magnitude() <= eps || diff.is_zero()) {
      out.converged = true;
      break;
    }
    prev_diff = diff;
    have_prev = true;
  }
  out.terms_used = evals;
  out.value.add_err(out.tail_bound.magnitude());
  return out;
}

}  // namespace stieltjes
