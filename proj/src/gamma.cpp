#include "shintani/gamma.hpp"

#include <map>
#include <mutex>

namespace shintani {

namespace {

// Spouge coefficients for a given parameter a, computed once at high
// precision and cached. Relative error of the series is below
// a^{-1/2} (2 pi)^{-(a+1/2)}, i.e. about 2.65*a bits.
struct SpougeTable {
  long a = 0;
  long prec = 0;
  std::vector<Real> c;  // c[0] = sqrt(2 pi), c[k] for 1 <= k < a
};

std::mutex g_spouge_mutex;
std::map<std::pair<long, long>, SpougeTable> g_spouge_cache;

const SpougeTable& spouge_table(long a, long prec) {
  std::lock_guard<std::mutex> lock(g_spouge_mutex);
  auto key = std::make_pair(a, prec);
  auto it = g_spouge_cache.find(key);
  if (it != g_spouge_cache.end()) return it->second;

  PrecisionGuard g(prec);
  SpougeTable t;
  t.a = a;
  t.prec = prec;
  t.c.reserve(a);
  Real two_pi = Real(2) * const_pi();
  t.c.push_back(sqrt(two_pi));
  Real fact(1);  // (k-1)!
  for (long k = 1; k < a; ++k) {
    if (k > 1) fact *= Real(k - 1);
    Real ak(a - k);
    // (a-k)^{k-1/2} e^{a-k} / (k-1)!, alternating sign
    Real term = pow(ak, Real(k) - Real(1) / Real(2)) * exp(ak) / fact;
    t.c.push_back((k % 2 == 0) ? -term : term);
  }
  auto [pos, _] = g_spouge_cache.emplace(key, std::move(t));
  return pos->second;
}

Complex spouge_gamma_pos(const Complex& z) {
  // valid for Re(z) >= 1/2
  long prec = Real::working_prec();
  long a = prec / 2 + 12;  // ~2.65 bits per unit of a: generous margin
  long cprec = ((prec + 64 + a) / 64 + 1) * 64;
  const SpougeTable& t = spouge_table(a, cprec);

  PrecisionGuard g(prec + 32 + a / 8);
  Complex zm1 = z - Complex(1);
  Complex acc(t.c[0]);
  for (long k = 1; k < t.a; ++k) acc += Complex(t.c[k]) / (zm1 + Complex(k));
  Complex za = zm1 + Complex(Real(t.a));
  // (z-1+a)^{z-1/2} e^{-(z-1+a)} * acc
  Complex p = exp((zm1 + Complex(Real(Rat(1, 2)))) * log(za));
  return p * exp(-za) * acc;
}

}  // namespace

Complex complex_gamma(const Complex& z) {
  if (z.im.is_zero() && z.re.is_integer() && z.re.sign() <= 0) {
    // pole
    Real inf = Real::make();
    mpfr_set_inf(inf.raw(), 1);
    return Complex(inf);
  }
  if (z.re >= Real(Rat(1, 2))) return spouge_gamma_pos(z);
  // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1-z))
  PrecisionGuard g(Real::working_prec() + 32);
  Real pi = const_pi();
  Complex s = sin(Complex{pi * z.re, pi * z.im});
  return Complex(pi) / (s * spouge_gamma_pos(Complex(1) - z));
}

Complex recip_gamma(const Complex& z) {
  if (z.im.is_zero() && z.re.is_integer() && z.re.sign() <= 0) return Complex(0);
  if (z.re >= Real(Rat(1, 2))) return Complex(1) / spouge_gamma_pos(z);
  // 1/Gamma(z) = sin(pi z) Gamma(1-z) / pi
  PrecisionGuard g(Real::working_prec() + 32);
  Real pi = const_pi();
  Complex s = sin(Complex{pi * z.re, pi * z.im});
  return s * spouge_gamma_pos(Complex(1) - z) / Complex(pi);
}

Complex gamma_r(const Complex& s) {
  Complex half_s{s.re / Real(2), s.im / Real(2)};
  return pow(const_pi(), -half_s) * complex_gamma(half_s);
}

Complex recip_gamma_r(const Complex& s) {
  Complex half_s{s.re / Real(2), s.im / Real(2)};
  return pow(const_pi(), half_s) * recip_gamma(half_s);
}

Complex gamma_c(const Complex& s) {
  return Real(2) * (pow(Real(2) * const_pi(), -s) * complex_gamma(s));
}

Complex gamma_sigma(const std::vector<int>& sigma, const std::vector<Complex>& s) {
  Complex r(1);
  for (size_t mu = 0; mu < sigma.size(); ++mu) r *= gamma_r(s[mu] + Complex(long(sigma[mu])));
  return r;
}

Complex recip_gamma_sigma(const std::vector<int>& sigma, const std::vector<Complex>& s) {
  Complex r(1);
  for (size_t mu = 0; mu < sigma.size(); ++mu) r *= recip_gamma_r(s[mu] + Complex(long(sigma[mu])));
  return r;
}

Complex i_sigma(const std::vector<int>& sigma) {
  long k = 0;
  for (int v : sigma) k += v;
  return i_power(k);
}

}  // namespace shintani
