#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "stieltjes/mp/real.hpp"

namespace stieltjes {

/// Truncated Taylor series sum_{m<=K} c_m (s - s0)^m.
///
/// Binary operations require equal order and truncate at that order; they
/// do not compare centers (callers build all operands around one s0).
class Jet {
 public:
  Jet() = default;
  Jet(Real center, std::size_t order);
  Jet(Real center, std::vector<Real> coeffs);

  /// s itself: s0 + 1*(s - s0).
  static Jet variable(const Real& center, std::size_t order);
  static Jet constant(const Real& center, std::size_t order, const Real& value);

  std::size_t order() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const Real& center() const { return center_; }
  const Real& operator[](std::size_t m) const { return coeffs_[m]; }
  Real& operator[](std::size_t m) { return coeffs_[m]; }
  const std::vector<Real>& coeffs() const { return coeffs_; }

  /// m-th derivative at the center: m! c_m.
  Real derivative(std::size_t m) const;
  /// Sum c_m h^m (Horner).
  Real evaluate(const Real& h) const;
  /// Copy truncated to a lower order.
  Jet truncated(std::size_t order) const;
  /// max_m |c_m| * m!, the size of the derivatives.
  ErrMag derivative_norm() const;
  /// max_m |c_m|.
  ErrMag coefficient_norm() const;

  Jet operator-() const;
  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const Jet& o);
  Jet& operator/=(const Jet& o);
  Jet& operator+=(const Real& c);
  Jet& operator*=(const Real& c);

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);
  friend Jet operator+(Jet a, const Real& c) { return a += c; }
  friend Jet operator-(Jet a, const Real& c) { return a += -c; }
  friend Jet operator*(Jet a, const Real& c) { return a *= c; }
  friend Jet operator*(const Real& c, Jet a) { return a *= c; }

  /// Multiplies in place by the linear factor (alpha + (s - s0)).
  void mul_linear(const Real& alpha);

 private:
  Real center_;
  std::vector<Real> coeffs_;
};

Jet reciprocal(const Jet& j);
Jet exp(const Jet& j);
Jet log(const Jet& j);
/// j^r for a real exponent; requires c_0 > 0.
Jet pow(const Jet& j, const Real& r);
/// base^j for a positive real base.
Jet pow(const Real& base, const Jet& j);

/// Coefficients of base^(-(s0 + t)) = base^(-s0) * exp(-t ln base), order K.
/// `log_base` is ln(base), passed in so callers reuse it.
Jet inverse_power_jet(const Real& center, std::size_t order, const Real& base, const Real& log_base);

/// Thrown when a pole split is asked of a jet whose linear term vanishes.
class DegeneratePoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

struct LaurentSplit {
  Real pole_coeff;
  Jet regular;  // order K-2 for an input of order K
};

/// 1/j for j with c_0 = 0: pole_coeff/(s-s0) + regular part.
LaurentSplit jet_reciprocal_pole(const Jet& j);

}  // namespace stieltjes
