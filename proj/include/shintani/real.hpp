#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "shintani/rational.hpp"

namespace shintani {

// Arbitrary-precision real backed by mpfr_t. Every value carries its own
// precision; arithmetic results are produced at the thread-local working
// precision, which callers adjust with PrecisionGuard around a block.
class Real {
 public:
  static long working_prec();
  static void set_working_prec(long bits);

  Real() { mpfr_init2(v_, working_prec()); mpfr_set_nan(v_); }
  explicit Real(long x) : Real() { mpfr_set_si(v_, x, MPFR_RNDN); }
  explicit Real(int x) : Real(static_cast<long>(x)) {}
  explicit Real(double x) : Real() { mpfr_set_d(v_, x, MPFR_RNDN); }
  explicit Real(const Rat& q) : Real() {
    mpfr_set_q(v_, q.backend().data(), MPFR_RNDN);
  }
  explicit Real(const Int& z) : Real() {
    mpfr_set_z(v_, z.backend().data(), MPFR_RNDN);
  }

  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  long prec() const { return mpfr_get_prec(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_nan() const { return mpfr_nan_p(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_integer() const { return mpfr_integer_p(v_); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  // Decimal rendering, round-trippable at the given digit count.
  std::string str(int digits = 0) const;

  friend Real operator-(const Real& a) { Real r = make(); mpfr_neg(r.v_, a.v_, MPFR_RNDN); return r; }
#define SHINTANI_REAL_BINOP(op, fn)                                        \
  friend Real operator op(const Real& a, const Real& b) {                  \
    Real r = make(); fn(r.v_, a.v_, b.v_, MPFR_RNDN); return r;            \
  }
  SHINTANI_REAL_BINOP(+, mpfr_add)
  SHINTANI_REAL_BINOP(-, mpfr_sub)
  SHINTANI_REAL_BINOP(*, mpfr_mul)
  SHINTANI_REAL_BINOP(/, mpfr_div)
#undef SHINTANI_REAL_BINOP
  Real& operator+=(const Real& b) { *this = *this + b; return *this; }
  Real& operator-=(const Real& b) { *this = *this - b; return *this; }
  Real& operator*=(const Real& b) { *this = *this * b; return *this; }
  Real& operator/=(const Real& b) { *this = *this / b; return *this; }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_); }
  friend bool operator!=(const Real& a, const Real& b) { return !mpfr_equal_p(a.v_, b.v_); }

  static Real make() { Real r; return r; }

 private:
  mpfr_t v_;
};

class PrecisionGuard {
 public:
  explicit PrecisionGuard(long bits) : saved_(Real::working_prec()) { Real::set_working_prec(bits); }
  ~PrecisionGuard() { Real::set_working_prec(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  long saved_;
};

#define SHINTANI_REAL_FN1(name, fn) \
  inline Real name(const Real& a) { Real r = Real::make(); fn(r.raw(), a.raw(), MPFR_RNDN); return r; }
SHINTANI_REAL_FN1(exp, mpfr_exp)
SHINTANI_REAL_FN1(expm1, mpfr_expm1)
SHINTANI_REAL_FN1(log, mpfr_log)
SHINTANI_REAL_FN1(log1p, mpfr_log1p)
SHINTANI_REAL_FN1(sqrt, mpfr_sqrt)
SHINTANI_REAL_FN1(abs, mpfr_abs)
SHINTANI_REAL_FN1(sin, mpfr_sin)
SHINTANI_REAL_FN1(cos, mpfr_cos)
SHINTANI_REAL_FN1(sinh, mpfr_sinh)
SHINTANI_REAL_FN1(cosh, mpfr_cosh)
SHINTANI_REAL_FN1(real_gamma, mpfr_gamma)
#undef SHINTANI_REAL_FN1

inline Real pow(const Real& a, const Real& b) {
  Real r = Real::make();
  mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

inline Real atan2(const Real& y, const Real& x) {
  Real r = Real::make();
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real const_pi();
Real const_log2();

// e(q) phase pair for rational q: (cos 2*pi*q, sin 2*pi*q), with exact
// values at quarter-integer q so root-of-unity tables cancel exactly.
std::pair<Real, Real> cos_sin_2pi(const Rat& q);

}  // namespace shintani
