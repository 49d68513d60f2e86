#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace stieltjes {

/// Nonnegative magnitude m * 2^e kept outside the double exponent range.
///
/// Used for error bounds, which at thousands of digits underflow a double.
/// All arithmetic rounds upward so a bound never shrinks by accident.
class ErrMag {
 public:
  constexpr ErrMag() = default;

  static ErrMag from_mpfr(mpfr_srcptr x);
  static ErrMag pow2(long e);          // 2^e
  static ErrMag from_double(double d);

  bool is_zero() const { return m_ == 0.0; }
  double mantissa() const { return m_; }
  long exponent() const { return e_; }

  /// floor(log2(value)); meaningless for zero.
  long log2_floor() const { return e_ - 1; }
  double log2() const;
  double to_double() const;

  void to_mpfr(mpfr_ptr out) const;

  ErrMag& operator+=(const ErrMag& o);
  ErrMag& operator*=(const ErrMag& o);
  ErrMag& scale2(long k);
  friend ErrMag operator+(ErrMag a, const ErrMag& b) { return a += b; }
  friend ErrMag operator*(ErrMag a, const ErrMag& b) { return a *= b; }

  friend bool operator<(const ErrMag& a, const ErrMag& b);
  friend bool operator<=(const ErrMag& a, const ErrMag& b) { return !(b < a); }
  friend bool operator>(const ErrMag& a, const ErrMag& b) { return b < a; }
  friend bool operator==(const ErrMag& a, const ErrMag& b) {
    return a.m_ == b.m_ && (a.m_ == 0.0 || a.e_ == b.e_);
  }
  friend ErrMag max(const ErrMag& a, const ErrMag& b) { return a < b ? b : a; }

 private:
  ErrMag(double m, long e);
  void normalize();
  double m_ = 0.0;  // 0 or in [0.5, 1)
  long e_ = 0;
};

/// Thread-local working precision in bits. Every Real produced by an
/// arithmetic operation is rounded to the precision current at the call.
class WorkingPrecision {
 public:
  explicit WorkingPrecision(mpfr_prec_t bits);
  ~WorkingPrecision();
  WorkingPrecision(const WorkingPrecision&) = delete;
  WorkingPrecision& operator=(const WorkingPrecision&) = delete;

  static mpfr_prec_t bits();
  /// Scope that raises the current precision by `extra` bits.
  static WorkingPrecision raised(mpfr_prec_t extra) { return WorkingPrecision(bits() + extra); }

 private:
  mpfr_prec_t saved_;
};

/// Guard bits added on top of the decimal request everywhere.
inline constexpr int kGuardBits = 32;

/// ceil(digits * log2(10)) + kGuardBits.
mpfr_prec_t bits_for_digits(int digits);
/// Decimal digits supported by a precision, the inverse of bits_for_digits.
int digits_for_bits(mpfr_prec_t bits);

/// Arbitrary-precision real with a running error bound.
///
/// The bound follows first-order interval propagation of operand errors
/// plus half an ulp of rounding per operation; it is an estimate of the
/// distance to the exact result of the same expression on exact inputs.
class Real {
 public:
  Real();
  Real(long v);  // NOLINT(google-explicit-constructor)
  Real(int v) : Real(static_cast<long>(v)) {}  // NOLINT
  Real(unsigned v) : Real(static_cast<long>(v)) {}  // NOLINT
  Real(unsigned long v);  // NOLINT
  Real(double v);  // NOLINT
  explicit Real(const mpz_class& v);
  explicit Real(const mpq_class& v);
  explicit Real(mpfr_srcptr v, ErrMag err = {});

  /// Parses a decimal ("1.25", "-3e-4") or rational ("3/4") string.
  static Real parse(std::string_view text);

  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr raw() { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  const ErrMag& err() const { return err_; }
  void set_err(const ErrMag& e) { err_ = e; }
  void add_err(const ErrMag& e) { err_ += e; }
  Real err_as_real() const;

  ErrMag magnitude() const { return ErrMag::from_mpfr(v_); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  /// Binary exponent e with |x| in [2^(e-1), 2^e); LONG_MIN for zero.
  long exponent2() const;

  /// `digits` significant decimal digits, round to nearest.
  std::string to_decimal(int digits) const;

  Real operator-() const;
  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(const Real& a, long b);

  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  void init();
  mpfr_t v_;
  ErrMag err_;
};

// Elementary functions, each rounded at the working precision with the
// operand error pushed through a local Lipschitz bound.
Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real cot(const Real& x);
Real atan(const Real& x);
Real atan2(const Real& y, const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real tanh(const Real& x);
Real floor(const Real& x);
Real ldexp(const Real& x, long e);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);

/// Copy of x rounded to the current working precision.
Real round_to_working(const Real& x);

Real const_pi();
Real const_euler();
Real const_log2();

/// ulp-scale rounding error 2^(exponent(x) - prec) of a value.
ErrMag rounding_error(mpfr_srcptr x);

/// Thrown for out-of-domain arguments.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when a series or iteration fails in a way the caller cannot use.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Widens the MPFR exponent range once per process.
void init_mpfr_range();

}  // namespace stieltjes
