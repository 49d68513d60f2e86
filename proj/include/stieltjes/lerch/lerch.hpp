#pragma once

#include <string>
#include <vector>

#include "stieltjes/mp/jet.hpp"
#include "stieltjes/mp/real.hpp"

namespace stieltjes {

struct Complex {
  Real re;
  Real im;
};

/// x = p/q reduced with 0 < p < q.
struct RationalPhase {
  long p = 1;
  long q = 2;
  /// Reduces p/q into (0,1); throws DomainError for integral x or q <= 0.
  static RationalPhase make(long p, long q);
};

/// L(x,s,a) = sum e^(2 pi i n x) (n+a)^-s about integer s0 >= 1, as real
/// and imaginary jets of order K.
struct LerchJet {
  Jet re;
  Jet im;
};
LerchJet lerch_jet(const RationalPhase& x, long s0, std::size_t K, const Real& a);

/// L(x,s,a) at a real s > 0, s != 1 allowed as well as s = 1.
Complex lerch_value(const RationalPhase& x, const Real& s, const Real& a);

/// ell_n(x,a): L(x,s,a) = sum (-1)^n ell_n (s-1)^n / n!.
Complex ell_coeff(unsigned n, const RationalPhase& x, const Real& a);
/// x = 1/2 through psi and gamma_1, gamma_2 (n <= 2).
Real ell_half_closed_form(unsigned n, const Real& a);
/// x = 1/4 through differences of gamma_k at a/4, (a+1)/4, (a+2)/4, (a+3)/4.
Complex ell_quarter_from_gammas(unsigned n, const Real& a);

/// a-derivative of order k >= 1 through Stirling-weighted jets of L(x,s+k,a).
Complex ell_derivative(unsigned k, unsigned n, const RationalPhase& x, const Real& a);

struct EllAddition {
  Complex value;
  long terms = 0;
  bool converged = false;
};
/// ell_n(x, a+xi) for |xi| < a, at `digits`.
EllAddition ell_addition(unsigned n, const RationalPhase& x, const Real& a, const Real& xi, int digits,
                         long max_terms = 4000);

/// Character table chi(1..m).
class DirichletCharacter {
 public:
  /// Validates the table: zero exactly off the units, unit modulus on
  /// them, and multiplicative to `tol_digits`.
  DirichletCharacter(long modulus, std::vector<Complex> values, int tol_digits = 20);

  static DirichletCharacter principal(long modulus);
  /// The real character mod 4 (chi(1)=1, chi(3)=-1).
  static DirichletCharacter mod4();
  /// The real character mod 3 (chi(1)=1, chi(2)=-1).
  static DirichletCharacter mod3();

  long modulus() const { return m_; }
  bool is_principal() const { return principal_; }
  /// chi(k) for any integer k >= 1 (periodic).
  const Complex& operator()(long k) const { return values_[static_cast<std::size_t>((k - 1) % m_)]; }

 private:
  long m_;
  std::vector<Complex> values_;
  bool principal_ = false;
};

/// L(s,chi) = pole/(s-1) + sum coeffs[j] (s-1)^j.
struct DirichletLaurent {
  Complex pole;
  std::vector<Complex> coeffs;
};
DirichletLaurent dirichlet_L_laurent(const DirichletCharacter& chi, std::size_t K, int digits);

enum class Prop10Part { i, ii };
struct Prop10Result {
  Real lhs;
  Real rhs;
  bool agree = false;
};
/// Both sides of the reflection identity for 0 < a < 1.
Prop10Result prop10_check(const Real& a, Prop10Part part, int digits);
/// s-derivatives of Li_s(e^(2 pi i a)) + Li_s(e^(-2 pi i a)) at s = 0,
/// orders 0..K, from the functional equation.
std::vector<Real> polylog_pair_derivs_at_zero(const Real& a, std::size_t K);

}  // namespace stieltjes
