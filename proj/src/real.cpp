#include "shintani/real.hpp"

#include <cstdio>
#include <cstring>

namespace shintani {

namespace {
thread_local long g_working_prec = 192;
}

long Real::working_prec() { return g_working_prec; }
void Real::set_working_prec(long bits) { g_working_prec = bits < 16 ? 16 : bits; }

std::string Real::str(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (digits <= 0) digits = static_cast<int>(mpfr_get_prec(v_) * 0.30103) + 2;
  char* s = nullptr;
  // %.*Rg gives shortest-ish fixed/scientific form at the requested digits
  if (mpfr_asprintf(&s, "%.*Rg", digits, v_) < 0) return "nan";
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

Real const_pi() {
  Real r = Real::make();
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

Real const_log2() {
  Real r = Real::make();
  mpfr_const_log2(r.raw(), MPFR_RNDN);
  return r;
}

std::pair<Real, Real> cos_sin_2pi(const Rat& q) {
  Rat f = rat_frac(q);  // [0,1)
  // quarter turns are exact
  if (rat_den(f) == 1) return {Real(1), Real(0)};
  if (rat_den(f) == 2) return {Real(-1), Real(0)};
  if (rat_den(f) == 4) return rat_num(f) == 1 ? std::pair<Real, Real>{Real(0), Real(1)}
                                              : std::pair<Real, Real>{Real(0), Real(-1)};
  PrecisionGuard g(Real::working_prec() + 8);
  Real ang = Real(f) * Real(2) * const_pi();
  Real c = Real::make(), s = Real::make();
  mpfr_sin_cos(s.raw(), c.raw(), ang.raw(), MPFR_RNDN);
  return {c, s};
}

}  // namespace shintani
