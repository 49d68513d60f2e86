#include "stieltjes/mp/jet.hpp"

#include <stdexcept>

namespace stieltjes {

Jet::Jet(Real center, std::size_t order) : center_(std::move(center)), coeffs_(order + 1) {}

Jet::Jet(Real center, std::vector<Real> coeffs) : center_(std::move(center)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.resize(1);
}

Jet Jet::variable(const Real& center, std::size_t order) {
  Jet j(center, order);
  j.coeffs_[0] = center;
  if (order >= 1) j.coeffs_[1] = Real(1L);
  return j;
}

Jet Jet::constant(const Real& center, std::size_t order, const Real& value) {
  Jet j(center, order);
  j.coeffs_[0] = value;
  return j;
}

Real Jet::derivative(std::size_t m) const {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), m);
  return coeffs_[m] * Real(f);
}

Real Jet::evaluate(const Real& h) const {
  Real acc = coeffs_.back();
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * h + coeffs_[i];
  return acc;
}

Jet Jet::truncated(std::size_t order) const {
  if (order >= this->order()) return *this;
  return Jet(center_, std::vector<Real>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1));
}

ErrMag Jet::derivative_norm() const {
  ErrMag best;
  ErrMag fact = ErrMag::from_double(1.0);
  for (std::size_t m = 0; m < coeffs_.size(); ++m) {
    if (m > 1) fact *= ErrMag::from_double(static_cast<double>(m));
    best = max(best, coeffs_[m].magnitude() * fact);
  }
  return best;
}

ErrMag Jet::coefficient_norm() const {
  ErrMag best;
  for (const auto& c : coeffs_) best = max(best, c.magnitude());
  return best;
}

Jet Jet::operator-() const {
  Jet r(center_, order());
  for (std::size_t m = 0; m < coeffs_.size(); ++m) r.coeffs_[m] = -coeffs_[m];
  return r;
}

Jet& Jet::operator+=(const Jet& o) {
  if (o.coeffs_.size() != coeffs_.size()) throw std::invalid_argument("jet order mismatch");
  for (std::size_t m = 0; m < coeffs_.size(); ++m) coeffs_[m] += o.coeffs_[m];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  if (o.coeffs_.size() != coeffs_.size()) throw std::invalid_argument("jet order mismatch");
  for (std::size_t m = 0; m < coeffs_.size(); ++m) coeffs_[m] -= o.coeffs_[m];
  return *this;
}

Jet& Jet::operator*=(const Jet& o) { return *this = *this * o; }
Jet& Jet::operator/=(const Jet& o) { return *this = *this / o; }

Jet& Jet::operator+=(const Real& c) {
  coeffs_[0] += c;
  return *this;
}

Jet& Jet::operator*=(const Real& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

void Jet::mul_linear(const Real& alpha) {
  // (alpha + t) * sum c_m t^m, truncated: c'_m = alpha c_m + c_{m-1}.
  for (std::size_t m = coeffs_.size(); m-- > 0;) {
    Real v = alpha * coeffs_[m];
    if (m > 0) v += coeffs_[m - 1];
    coeffs_[m] = std::move(v);
  }
}

Jet operator*(const Jet& a, const Jet& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) throw std::invalid_argument("jet order mismatch");
  const std::size_t n = a.coeffs_.size();
  Jet r(a.center_, n - 1);
  for (std::size_t m = 0; m < n; ++m) {
    Real acc;
    for (std::size_t i = 0; i <= m; ++i) {
      if (a.coeffs_[i].is_zero() || b.coeffs_[m - i].is_zero()) continue;
      acc += a.coeffs_[i] * b.coeffs_[m - i];
    }
    r.coeffs_[m] = std::move(acc);
  }
  return r;
}

Jet operator/(const Jet& a, const Jet& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) throw std::invalid_argument("jet order mismatch");
  if (b.coeffs_[0].is_zero()) throw DomainError("jet division by a series with zero constant term");
  const std::size_t n = a.coeffs_.size();
  Jet q(a.center_, n - 1);
  for (std::size_t m = 0; m < n; ++m) {
    Real acc = a.coeffs_[m];
    for (std::size_t i = 1; i <= m; ++i) acc -= b.coeffs_[i] * q.coeffs_[m - i];
    q.coeffs_[m] = acc / b.coeffs_[0];
  }
  return q;
}

Jet reciprocal(const Jet& j) { return Jet::constant(j.center(), j.order(), Real(1L)) / j; }

Jet exp(const Jet& j) {
  const std::size_t n = j.order() + 1;
  Jet r(j.center(), j.order());
  r[0] = exp(j[0]);
  // e' = j' e  =>  m e_m = sum_{i=1}^m i j_i e_{m-i}
  for (std::size_t m = 1; m < n; ++m) {
    Real acc;
    for (std::size_t i = 1; i <= m; ++i) acc += (j[i] * static_cast<long>(i)) * r[m - i];
    r[m] = acc / static_cast<long>(m);
  }
  return r;
}

Jet log(const Jet& j) {
  if (j[0].sign() <= 0) throw DomainError("jet log needs a positive constant term");
  const std::size_t n = j.order() + 1;
  Jet r(j.center(), j.order());
  r[0] = log(j[0]);
  // j l' = j'  =>  m l_m j_0 = m j_m - sum_{i=1}^{m-1} i l_i j_{m-i}
  for (std::size_t m = 1; m < n; ++m) {
    Real acc = j[m] * static_cast<long>(m);
    for (std::size_t i = 1; i < m; ++i) acc -= (r[i] * static_cast<long>(i)) * j[m - i];
    r[m] = acc / (j[0] * static_cast<long>(m));
  }
  return r;
}

Jet pow(const Jet& j, const Real& r) {
  Jet l = log(j);
  l *= r;
  return exp(l);
}

Jet pow(const Real& base, const Jet& j) {
  if (base.sign() <= 0) throw DomainError("jet pow needs a positive base");
  Jet e = j;
  e *= log(base);
  return exp(e);
}

Jet inverse_power_jet(const Real& center, std::size_t order, const Real& base, const Real& log_base) {
  Jet r(center, order);
  r[0] = exp(-(center * log_base));
  Real neg_l = -log_base;
  for (std::size_t m = 1; m <= order; ++m) r[m] = (r[m - 1] * neg_l) / static_cast<long>(m);
  (void)base;
  return r;
}

LaurentSplit jet_reciprocal_pole(const Jet& j) {
  if (j.order() < 1) throw DegeneratePoleError("pole split needs order >= 1");
  if (!j[0].is_zero()) throw DomainError("pole split needs c_0 = 0");
  if (j[1].is_zero()) throw DegeneratePoleError("degenerate pole: linear coefficient is zero");
  // j = t q(t) with q_m = c_{m+1}; 1/j = (1/t) (1/q).
  const std::size_t qn = j.order();  // q has coefficients 0..K-1
  Jet q(j.center(), qn - 1);
  for (std::size_t m = 0; m < qn; ++m) q[m] = j[m + 1];
  Jet inv = reciprocal(q);
  LaurentSplit out{inv[0], Jet(j.center(), qn >= 2 ? qn - 2 : 0)};
  if (qn >= 2) {
    for (std::size_t m = 0; m + 1 < qn; ++m) out.regular[m] = inv[m + 1];
  }
  return out;
}

}  // namespace stieltjes
