#pragma once

#include "shintani/real.hpp"

namespace shintani {

struct Complex {
  Real re, im;

  Complex() : re(0L), im(0L) {}
  explicit Complex(long x) : re(x), im(0L) {}
  explicit Complex(const Real& r) : re(r), im(0L) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(const Rat& q) : re(q), im(0L) {}

  bool is_real() const { return im.is_zero(); }

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Real& a, const Complex& b) { return {a * b.re, a * b.im}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  Complex& operator+=(const Complex& b) { re += b.re; im += b.im; return *this; }
  Complex& operator-=(const Complex& b) { re -= b.re; im -= b.im; return *this; }
  Complex& operator*=(const Complex& b) { *this = *this * b; return *this; }

  Complex conj() const { return {re, -im}; }
};

inline Real abs(const Complex& z) {
  Real r = Real::make();
  mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
  return r;
}

inline Complex exp(const Complex& z) {
  Real m = exp(z.re);
  Real c = Real::make(), s = Real::make();
  mpfr_sin_cos(s.raw(), c.raw(), z.im.raw(), MPFR_RNDN);
  return {m * c, m * s};
}

inline Complex sin(const Complex& z) {
  return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

inline Complex log(const Complex& z) {
  Real m = abs(z);
  return {log(m), atan2(z.im, z.re)};
}

// b^z for real b > 0
inline Complex pow(const Real& b, const Complex& z) {
  Real lb = log(b);
  return exp(Complex{z.re * lb, z.im * lb});
}

inline Complex pow(const Rat& b, const Complex& z) { return pow(Real(b), z); }

// e(q) = exp(2*pi*i*q) for rational q
inline Complex unit_phase(const Rat& q) {
  auto [c, s] = cos_sin_2pi(q);
  return {c, s};
}

inline Complex i_times(const Complex& z) { return {-z.im, z.re}; }

// i^k for integer k
inline Complex i_power(long k) {
  long m = ((k % 4) + 4) % 4;
  switch (m) {
    case 0: return Complex(1);
    case 1: return {Real(0), Real(1)};
    case 2: return Complex(-1);
    default: return {Real(0), Real(-1)};
  }
}

}  // namespace shintani
