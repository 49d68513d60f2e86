#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "stieltjes/mp/real.hpp"

namespace testutil {

using stieltjes::Real;

/// True when |a - b| <= 10^-digits * max(1, |b|).
inline bool close(const Real& a, const Real& b, int digits) {
  Real d = stieltjes::abs(a - b);
  Real scale = stieltjes::max(Real(1L), stieltjes::abs(b));
  Real tol = scale * stieltjes::pow(Real(10L), Real(static_cast<long>(-digits)));
  return d <= tol;
}

inline bool close_abs(const Real& a, const Real& b, const Real& tol) { return stieltjes::abs(a - b) <= tol; }

inline Real tenpow(long e) { return stieltjes::pow(Real(10L), Real(e)); }

inline std::string show(const Real& a, const Real& b) {
  return a.to_decimal(40) + " vs " + b.to_decimal(40);
}

/// Fixed-seed generator so property tests replay identically.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  /// A rational p/q in (lo, hi) with q <= qmax, returned exactly.
  Real rational(long lo, long hi, long qmax) {
    long q = integer(1, qmax);
    long p = integer(lo * q + 1, hi * q - 1);
    return Real(mpq_class(p, q));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace testutil
