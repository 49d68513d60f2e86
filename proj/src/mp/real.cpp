#include "stieltjes/mp/real.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <string>

namespace stieltjes {

namespace {

constexpr double kRoundUp = 1.0 + 0x1p-50;
constexpr long kInfiniteExp = LONG_MAX / 4;

struct RangeInit {
  RangeInit() {
    mpfr_set_emin(mpfr_get_emin_min());
    mpfr_set_emax(mpfr_get_emax_max());
  }
};

thread_local mpfr_prec_t tl_bits = 128;

void ensure_range() {
  thread_local RangeInit init;
  (void)init;
}

}  // namespace

void init_mpfr_range() { ensure_range(); }

// ---------------------------------------------------------------- ErrMag

ErrMag::ErrMag(double m, long e) : m_(m), e_(e) { normalize(); }

void ErrMag::normalize() {
  if (m_ == 0.0 || !std::isfinite(m_)) {
    if (m_ != 0.0) {
      m_ = 0.5;
      e_ = kInfiniteExp;
    } else {
      e_ = 0;
    }
    return;
  }
  int k = 0;
  m_ = std::frexp(std::fabs(m_), &k);
  e_ = std::min(e_ + k, kInfiniteExp);
}

ErrMag ErrMag::from_mpfr(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return {};
  if (!mpfr_number_p(x)) return ErrMag(0.5, kInfiniteExp);
  long e = 0;
  double d = mpfr_get_d_2exp(&e, x, MPFR_RNDA);
  return ErrMag(std::fabs(d) * kRoundUp, e);
}

ErrMag ErrMag::pow2(long e) { return ErrMag(0.5, e + 1); }

ErrMag ErrMag::from_double(double d) { return ErrMag(std::fabs(d) * kRoundUp, 0); }

double ErrMag::log2() const {
  if (m_ == 0.0) return -HUGE_VAL;
  return std::log2(m_) + static_cast<double>(e_);
}

double ErrMag::to_double() const {
  if (m_ == 0.0) return 0.0;
  if (e_ > 1100) return HUGE_VAL;
  if (e_ < -1100) return 0.0;
  return std::ldexp(m_, static_cast<int>(e_));
}

void ErrMag::to_mpfr(mpfr_ptr out) const {
  mpfr_set_d(out, m_, MPFR_RNDU);
  if (m_ != 0.0) mpfr_mul_2si(out, out, e_, MPFR_RNDU);
}

ErrMag& ErrMag::operator+=(const ErrMag& o) {
  if (o.m_ == 0.0) return *this;
  if (m_ == 0.0) return *this = o;
  const ErrMag& big = (e_ >= o.e_) ? *this : o;
  const ErrMag& small = (e_ >= o.e_) ? o : *this;
  long shift = small.e_ - big.e_;
  double m = big.m_;
  long e = big.e_;
  if (shift > -1000) {
    m += std::ldexp(small.m_, static_cast<int>(shift));
  } else {
    m += 0x1p-1000;
  }
  *this = ErrMag(m * kRoundUp, e);
  return *this;
}

ErrMag& ErrMag::operator*=(const ErrMag& o) {
  if (m_ == 0.0 || o.m_ == 0.0) return *this = ErrMag{};
  long e = (e_ >= kInfiniteExp || o.e_ >= kInfiniteExp) ? kInfiniteExp : e_ + o.e_;
  *this = ErrMag(m_ * o.m_ * kRoundUp, e);
  return *this;
}

ErrMag& ErrMag::scale2(long k) {
  if (m_ != 0.0 && e_ < kInfiniteExp) e_ += k;
  return *this;
}

bool operator<(const ErrMag& a, const ErrMag& b) {
  if (b.m_ == 0.0) return false;
  if (a.m_ == 0.0) return true;
  if (a.e_ != b.e_) return a.e_ < b.e_;
  return a.m_ < b.m_;
}

// ------------------------------------------------------ WorkingPrecision

WorkingPrecision::WorkingPrecision(mpfr_prec_t bits) : saved_(tl_bits) {
  ensure_range();
  if (bits < MPFR_PREC_MIN) bits = MPFR_PREC_MIN;
  tl_bits = bits;
}

WorkingPrecision::~WorkingPrecision() { tl_bits = saved_; }

mpfr_prec_t WorkingPrecision::bits() { return tl_bits; }

mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + kGuardBits;
}

int digits_for_bits(mpfr_prec_t bits) {
  return static_cast<int>(std::floor(static_cast<double>(bits - kGuardBits) / 3.3219280948873623));
}

ErrMag rounding_error(mpfr_srcptr x) {
  if (mpfr_zero_p(x) || !mpfr_number_p(x)) return {};
  return ErrMag::pow2(mpfr_get_exp(x) - static_cast<long>(mpfr_get_prec(x)));
}

// ------------------------------------------------------------------ Real

namespace {

inline ErrMag rnd_if(int ternary, mpfr_srcptr r) {
  return ternary == 0 ? ErrMag{} : rounding_error(r);
}

inline ErrMag mag(mpfr_srcptr x) { return ErrMag::from_mpfr(x); }

}  // namespace

void Real::init() {
  ensure_range();
  mpfr_init2(v_, tl_bits);
}

Real::Real() {
  init();
  mpfr_set_zero(v_, 1);
}

Real::Real(long v) {
  init();
  err_ = rnd_if(mpfr_set_si(v_, v, MPFR_RNDN), v_);
}

Real::Real(unsigned long v) {
  init();
  err_ = rnd_if(mpfr_set_ui(v_, v, MPFR_RNDN), v_);
}

Real::Real(double v) {
  init();
  err_ = rnd_if(mpfr_set_d(v_, v, MPFR_RNDN), v_);
}

Real::Real(const mpz_class& v) {
  init();
  err_ = rnd_if(mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN), v_);
}

Real::Real(const mpq_class& v) {
  init();
  err_ = rnd_if(mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN), v_);
}

Real::Real(mpfr_srcptr v, ErrMag err) {
  init();
  err_ = err + rnd_if(mpfr_set(v_, v, MPFR_RNDN), v_);
}

Real Real::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw DomainError("malformed rational: " + s);
    q.canonicalize();
    return Real(q);
  }
  Real r;
  char* end = nullptr;
  int t = mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end == nullptr || *end != '\0') throw DomainError("malformed number: " + s);
  r.err_ = rnd_if(t, r.v_);
  return r;
}

Real::Real(const Real& o) : err_(o.err_) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept : err_(o.err_) {
  v_[0] = o.v_[0];
  o.v_[0]._mpfr_d = nullptr;
}

Real& Real::operator=(const Real& o) {
  if (this == &o) return *this;
  if (v_[0]._mpfr_d == nullptr) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
  } else {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
  }
  mpfr_set(v_, o.v_, MPFR_RNDN);
  err_ = o.err_;
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  std::swap(v_[0], o.v_[0]);
  std::swap(err_, o.err_);
  return *this;
}

Real::~Real() {
  if (v_[0]._mpfr_d != nullptr) mpfr_clear(v_);
}

Real Real::err_as_real() const {
  Real r;
  err_.to_mpfr(r.v_);
  return r;
}

long Real::exponent2() const {
  if (mpfr_zero_p(v_) || !mpfr_number_p(v_)) return LONG_MIN;
  return mpfr_get_exp(v_);
}

std::string Real::to_decimal(int digits) const {
  if (digits < 1) digits = 1;
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(v_)) return digits == 1 ? "0" : "0." + std::string(digits - 1, '0');
  mpfr_exp_t e10 = 0;
  char* raw = mpfr_get_str(nullptr, &e10, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
  std::string m(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (!m.empty() && m[0] == '-') {
    sign = "-";
    m.erase(0, 1);
  }
  const long n = static_cast<long>(m.size());
  const long e = static_cast<long>(e10);
  std::string out;
  if (e <= 0 && e > -6) {
    out = "0." + std::string(static_cast<size_t>(-e), '0') + m;
  } else if (e > 0 && e < n) {
    out = m.substr(0, static_cast<size_t>(e)) + "." + m.substr(static_cast<size_t>(e));
  } else if (e >= n && e <= 21) {
    out = m + std::string(static_cast<size_t>(e - n), '0');
  } else {
    out = m.substr(0, 1);
    if (n > 1) out += "." + m.substr(1);
    out += "e" + std::to_string(e - 1);
  }
  return sign + out;
}

Real Real::operator-() const {
  Real r;
  r.err_ = err_ + rnd_if(mpfr_neg(r.v_, v_, MPFR_RNDN), r.v_);
  return r;
}

Real& Real::operator+=(const Real& o) { return *this = *this + o; }
Real& Real::operator-=(const Real& o) { return *this = *this - o; }
Real& Real::operator*=(const Real& o) { return *this = *this * o; }
Real& Real::operator/=(const Real& o) { return *this = *this / o; }

Real operator+(const Real& a, const Real& b) {
  Real r;
  int t = mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  r.err_ = a.err_ + b.err_ + rnd_if(t, r.v_);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r;
  int t = mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  r.err_ = a.err_ + b.err_ + rnd_if(t, r.v_);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r;
  int t = mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  r.err_ = mag(a.v_) * b.err_ + mag(b.v_) * a.err_ + a.err_ * b.err_ + rnd_if(t, r.v_);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  if (mpfr_zero_p(b.v_)) throw DomainError("division by zero");
  Real r;
  int t = mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  // (ea + |r| eb) / |b|
  ErrMag num = a.err_ + mag(r.v_) * b.err_;
  Real nb;
  num.to_mpfr(nb.v_);
  mpfr_div(nb.v_, nb.v_, b.v_, MPFR_RNDU);
  mpfr_abs(nb.v_, nb.v_, MPFR_RNDU);
  r.err_ = mag(nb.v_) + rnd_if(t, r.v_);
  return r;
}

Real operator*(const Real& a, long b) {
  Real r;
  int t = mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  ErrMag eb = ErrMag::from_double(static_cast<double>(b));
  r.err_ = a.err_ * eb + rnd_if(t, r.v_);
  return r;
}

Real operator/(const Real& a, long b) {
  if (b == 0) throw DomainError("division by zero");
  Real r;
  int t = mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  ErrMag inv = ErrMag::from_double(1.0 / static_cast<double>(b));
  r.err_ = a.err_ * inv + rnd_if(t, r.v_);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

// ------------------------------------------------------------- functions

namespace {

using Unary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

// Applies f and sets err = lipschitz * err(x) + rounding.
Real apply(Unary f, const Real& x, const ErrMag& lipschitz) {
  Real r;
  int t = f(r.raw(), x.get(), MPFR_RNDN);
  r.set_err(lipschitz * x.err() + rnd_if(t, r.get()));
  return r;
}

}  // namespace

Real abs(const Real& x) {
  Real r;
  mpfr_abs(r.raw(), x.get(), MPFR_RNDN);
  r.set_err(x.err() + rounding_error(r.get()));
  return r;
}

Real sqrt(const Real& x) {
  if (x.sign() < 0) throw DomainError("sqrt of negative value");
  Real r;
  int t = mpfr_sqrt(r.raw(), x.get(), MPFR_RNDN);
  ErrMag lip = ErrMag::pow2(64);
  if (!r.is_zero()) {
    Real inv;
    mpfr_ui_div(inv.raw(), 1, r.get(), MPFR_RNDU);
    lip = ErrMag::from_double(0.5) * ErrMag::from_mpfr(inv.get());
  }
  r.set_err(lip * x.err() + rnd_if(t, r.get()));
  return r;
}

Real exp(const Real& x) {
  Real r;
  int t = mpfr_exp(r.raw(), x.get(), MPFR_RNDN);
  ErrMag ex = x.err();
  ErrMag growth = ex < ErrMag::pow2(-2) ? ErrMag::from_double(1.5) : ErrMag::pow2(64);
  r.set_err(mag(r.get()) * ex * growth + rnd_if(t, r.get()));
  return r;
}

Real expm1(const Real& x) {
  Real r;
  int t = mpfr_expm1(r.raw(), x.get(), MPFR_RNDN);
  Real e;
  mpfr_exp(e.raw(), x.get(), MPFR_RNDU);
  r.set_err(mag(e.get()) * x.err() * ErrMag::from_double(1.5) + rnd_if(t, r.get()));
  return r;
}

Real log(const Real& x) {
  if (x.sign() <= 0) throw DomainError("log of nonpositive value");
  Real inv;
  mpfr_ui_div(inv.raw(), 1, x.get(), MPFR_RNDU);
  return apply(mpfr_log, x, mag(inv.get()));
}

Real log1p(const Real& x) {
  Real one_plus;
  mpfr_add_ui(one_plus.raw(), x.get(), 1, MPFR_RNDD);
  if (one_plus.sign() <= 0) throw DomainError("log1p argument <= -1");
  Real inv;
  mpfr_ui_div(inv.raw(), 1, one_plus.get(), MPFR_RNDU);
  return apply(mpfr_log1p, x, mag(inv.get()));
}

Real pow(const Real& x, const Real& y) {
  if (x.sign() < 0 && !y.is_integer()) throw DomainError("pow of negative base");
  if (x.is_zero()) {
    if (y.sign() <= 0) throw DomainError("pow(0, y<=0)");
    return Real(0L);
  }
  Real r;
  int t = mpfr_pow(r.raw(), x.get(), y.get(), MPFR_RNDN);
  // |r| (|y| ex / |x| + |ln x| ey)
  Real lx;
  mpfr_abs(lx.raw(), x.get(), MPFR_RNDN);
  mpfr_log(lx.raw(), lx.get(), MPFR_RNDU);
  Real yx;
  mpfr_div(yx.raw(), y.get(), x.get(), MPFR_RNDU);
  ErrMag prop = mag(yx.get()) * x.err() + mag(lx.get()) * y.err();
  r.set_err(mag(r.get()) * prop + rnd_if(t, r.get()));
  return r;
}

Real pow(const Real& x, long n) {
  if (n == 0) return Real(1L);
  if (x.is_zero()) {
    if (n <= 0) throw DomainError("pow(0, n<=0)");
    return Real(0L);
  }
  Real r;
  int t = mpfr_pow_si(r.raw(), x.get(), n, MPFR_RNDN);
  Real q;
  mpfr_div(q.raw(), r.get(), x.get(), MPFR_RNDU);
  ErrMag prop = mag(q.get()) * ErrMag::from_double(static_cast<double>(n)) * x.err();
  r.set_err(prop + rnd_if(t, r.get()));
  return r;
}

Real sin(const Real& x) { return apply(mpfr_sin, x, ErrMag::from_double(1.0)); }
Real cos(const Real& x) { return apply(mpfr_cos, x, ErrMag::from_double(1.0)); }

Real tan(const Real& x) {
  Real t;
  mpfr_tan(t.raw(), x.get(), MPFR_RNDN);
  Real sec2;
  mpfr_sqr(sec2.raw(), t.get(), MPFR_RNDU);
  mpfr_add_ui(sec2.raw(), sec2.get(), 1, MPFR_RNDU);
  return apply(mpfr_tan, x, mag(sec2.get()));
}

Real cot(const Real& x) {
  Real c;
  mpfr_cot(c.raw(), x.get(), MPFR_RNDN);
  Real csc2;
  mpfr_sqr(csc2.raw(), c.get(), MPFR_RNDU);
  mpfr_add_ui(csc2.raw(), csc2.get(), 1, MPFR_RNDU);
  return apply(mpfr_cot, x, mag(csc2.get()));
}

Real atan(const Real& x) { return apply(mpfr_atan, x, ErrMag::from_double(1.0)); }

Real atan2(const Real& y, const Real& x) {
  Real r;
  int t = mpfr_atan2(r.raw(), y.get(), x.get(), MPFR_RNDN);
  Real r2;
  mpfr_hypot(r2.raw(), x.get(), y.get(), MPFR_RNDD);
  ErrMag inv = r2.is_zero() ? ErrMag::pow2(64) : mag((Real(1L) / r2).get());
  r.set_err(inv * (x.err() + y.err()) + rnd_if(t, r.get()));
  return r;
}

Real sinh(const Real& x) {
  Real c;
  mpfr_cosh(c.raw(), x.get(), MPFR_RNDU);
  return apply(mpfr_sinh, x, mag(c.get()));
}

Real cosh(const Real& x) {
  Real c;
  mpfr_cosh(c.raw(), x.get(), MPFR_RNDU);
  return apply(mpfr_cosh, x, mag(c.get()));
}

Real tanh(const Real& x) { return apply(mpfr_tanh, x, ErrMag::from_double(1.0)); }

Real floor(const Real& x) {
  Real r;
  mpfr_floor(r.raw(), x.get());
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r;
  int t = mpfr_mul_2si(r.raw(), x.get(), e, MPFR_RNDN);
  ErrMag err = x.err();
  err.scale2(e);
  r.set_err(err + rnd_if(t, r.get()));
  return r;
}

Real min(const Real& a, const Real& b) { return b < a ? b : a; }
Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real round_to_working(const Real& x) { return Real(x.get(), x.err()); }

Real const_pi() {
  Real r;
  r.set_err(rnd_if(mpfr_const_pi(r.raw(), MPFR_RNDN), r.get()));
  return r;
}

Real const_euler() {
  Real r;
  r.set_err(rnd_if(mpfr_const_euler(r.raw(), MPFR_RNDN), r.get()));
  return r;
}

Real const_log2() {
  Real r;
  r.set_err(rnd_if(mpfr_const_log2(r.raw(), MPFR_RNDN), r.get()));
  return r;
}

}  // namespace stieltjes
