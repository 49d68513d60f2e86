#pragma once

#include <string>
#include <vector>

#include "stieltjes/mp/jet.hpp"
#include "stieltjes/mp/real.hpp"

namespace stieltjes {

enum class Method { reference, prop2i, prop2ii, prop2iii, prop4, addition, asymptotic, exp_series };

std::string method_name(Method m);
/// Inverse of method_name; throws DomainError on an unknown name.
Method method_from_name(const std::string& name);

/// A computed gamma_k(a).
struct StieltjesValue {
  unsigned k = 0;
  Real a;
  Real value;
  Real err_est;
  Method method = Method::reference;
  long terms = 0;
  bool converged = true;
};

/// zeta(s,a) = pole_coeff/(s-1) + sum (-1)^k gamma_k(a) (s-1)^k / k!.
struct LaurentExpansion {
  Real a;
  Real pole_coeff;
  std::vector<StieltjesValue> gammas;
};

struct EmOptions {
  long N = 0;  // direct terms; 0 picks max(10, 0.7 digits)
  long M = 0;  // Bernoulli corrections; 0 grows until the next one is negligible
};

struct HurwitzJet {
  Jet jet;  // in Laurent mode (s0 = 1) the regular part only
  bool laurent = false;
  long N = 0;
  long M = 0;
  bool converged = false;
  ErrMag truncation;  // size of the first omitted correction, in derivative norm
};

/// zeta(s,a) about s0 through order K by Euler-Maclaurin in jet arithmetic,
/// at the current working precision. s0 = 1 returns the regular part.
HurwitzJet hurwitz_zeta_jet_detailed(const Real& s0, std::size_t K, const Real& a, const EmOptions& opt = {});
Jet hurwitz_zeta_jet(const Real& s0, std::size_t K, const Real& a, const EmOptions& opt = {});

/// Cached variant keyed by (s0, a, precision); a stored jet of higher order
/// is truncated on the way out. Safe for concurrent use.
Jet hurwitz_zeta_jet_cached(const Real& s0, std::size_t K, const Real& a);
void clear_hurwitz_cache();

Real hurwitz_zeta(const Real& s, const Real& a);
/// d^m/ds^m zeta(s,a).
Real hurwitz_zeta_deriv(unsigned m, const Real& s, const Real& a);

/// gamma_k(a) at `digits` decimal digits; the oracle for everything else.
StieltjesValue stieltjes_reference(unsigned k, const Real& a, int digits);
/// gamma_k(a) at the current working precision.
Real stieltjes_gamma(unsigned k, const Real& a);
LaurentExpansion laurent_expansion(const Real& a, unsigned K, int digits);
/// gamma_0..gamma_K at the current working precision.
std::vector<Real> stieltjes_gammas(const Real& a, unsigned K);

/// zeta^(j)(0,a) for j >= 1 from the P1 integral representation.
Real zeta_deriv_at_zero(unsigned j, const Real& a);

struct AuxConstants {
  Real zeta_prime_2;
  Real zeta_prime_minus1;
  Real log_glaisher;
};
AuxConstants aux_constants(int digits);

/// gamma_k(a) from the real-axis integral with the complex logarithm
/// ln^k(a - iy); validation path only.
Real gamma_hermite_integral(unsigned k, const Real& a);

struct MarichevSum {
  Real sum;       // sum_k gamma_{k+n}(a)/k!
  Real expected;  // (-1)^n [zeta^(n)(0,a) + n!]
  long terms = 0;
};
/// Truncates the k-sum once gamma_{k+n}(a)/k! falls below 2^-prec.
MarichevSum marichev_sum(unsigned n, const Real& a);

struct Prop6Result {
  Real lhs;
  Real rhs;            // (-1)^j / z
  Real smooth_part;    // integral of the shifted, entire-in-a part
  Real singular_part;  // integral of (z ln a)^j a^(z-1) / j!
  long terms = 0;
};
/// (1/j!) sum_k z^k/(k-j)! int_0^1 gamma_k(a) da, with the k-sum taken
/// inside the integral so the endpoint behaviour can be handled exactly.
Prop6Result prop6_integral(unsigned j, const Real& z);

}  // namespace stieltjes
