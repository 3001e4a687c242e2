#include "doctest.h"

#include "shintani/complexnum.hpp"
#include "shintani/gamma.hpp"
#include "shintani/real.hpp"

using namespace shintani;

namespace {
double dabs(const Real& x) { return std::abs(x.to_double()); }
}

TEST_CASE("real basics") {
  PrecisionGuard g(128);
  Real a(2);
  CHECK(sqrt(a).to_double() == doctest::Approx(1.4142135623730951));
  CHECK((Real(1) / Real(3)).to_double() == doctest::Approx(1.0 / 3));
  CHECK(Real(Rat(1, 3)).to_double() == doctest::Approx(1.0 / 3));
  CHECK(expm1(Real(0)).is_zero());
  Real pi = const_pi();
  CHECK(pi.to_double() == doctest::Approx(3.14159265358979));
}

TEST_CASE("precision guard escalation") {
  PrecisionGuard g(64);
  Real x(0);
  {
    PrecisionGuard g2(256);
    x = sqrt(Real(2));
    CHECK(x.prec() == 256);
  }
  // value keeps its precision after the guard expires
  CHECK(x.prec() == 256);
  Real y = x * x - Real(2);
  CHECK(dabs(y) < 1e-18);
}

TEST_CASE("unit phases") {
  PrecisionGuard g(128);
  Complex z = unit_phase(Rat(1, 4));
  CHECK(z.re.is_zero());
  CHECK(z.im.to_double() == doctest::Approx(1.0));
  Complex w = unit_phase(Rat(1, 3));
  CHECK(w.re.to_double() == doctest::Approx(-0.5));
  CHECK(w.im.to_double() == doctest::Approx(std::sqrt(3) / 2));
  // exact cancellation of equal phases
  Complex d = unit_phase(Rat(5, 7)) - unit_phase(Rat(-2, 7));
  CHECK(d.re.is_zero());
  CHECK(d.im.is_zero());
}

TEST_CASE("complex gamma against known values") {
  PrecisionGuard g(192);
  // Gamma(1/2) = sqrt(pi)
  Complex ghalf = complex_gamma(Complex(Rat(1, 2)));
  Real err = abs(ghalf - Complex(sqrt(const_pi())));
  CHECK(err.to_double() < 1e-50);
  // Gamma(5) = 24
  CHECK(dabs(complex_gamma(Complex(5)).re - Real(24)) < 1e-45);
  // Gamma(1+i) known value 0.49801566811835604 - 0.15494982830181069 i
  Complex g1i = complex_gamma(Complex{Real(1), Real(1)});
  CHECK(g1i.re.to_double() == doctest::Approx(0.49801566811835604).epsilon(1e-12));
  CHECK(g1i.im.to_double() == doctest::Approx(-0.15494982830181069).epsilon(1e-12));
  // reflection: Gamma(-1.5) = 4 sqrt(pi)/3
  Complex gm = complex_gamma(Complex(Rat(-3, 2)));
  CHECK(gm.re.to_double() == doctest::Approx(4 * std::sqrt(M_PI) / 3).epsilon(1e-12));
  // functional identity Gamma(z+1) = z Gamma(z) at z = 0.3 + 2i
  Complex z{Real(Rat(3, 10)), Real(2)};
  Complex lhs = complex_gamma(z + Complex(1));
  Complex rhs = z * complex_gamma(z);
  CHECK(abs(lhs - rhs).to_double() < 1e-50);
}

TEST_CASE("reciprocal gamma zeros and consistency") {
  PrecisionGuard g(160);
  CHECK(recip_gamma(Complex(0)).re.is_zero());
  CHECK(recip_gamma(Complex(-3)).re.is_zero());
  Complex z{Real(Rat(7, 5)), Real(Rat(-1, 3))};
  Complex prod = recip_gamma(z) * complex_gamma(z);
  CHECK(abs(prod - Complex(1)).to_double() < 1e-40);
}

TEST_CASE("gamma_r and gamma_c normalizations") {
  PrecisionGuard g(160);
  // Gamma_R(1) = 1
  CHECK(abs(gamma_r(Complex(1)) - Complex(1)).to_double() < 1e-40);
  // Gamma_C(1) = 1/pi
  Complex gc = gamma_c(Complex(1));
  CHECK(abs(gc - Complex(Real(1) / const_pi())).to_double() < 1e-40);
  // Legendre-style: Gamma_R(s) Gamma_R(s+1) = Gamma_C(s)
  Complex s{Real(Rat(7, 10)), Real(Rat(1, 2))};
  Complex lhs = gamma_r(s) * gamma_r(s + Complex(1));
  Complex rhs = gamma_c(s);
  CHECK(abs(lhs - rhs).to_double() / abs(rhs).to_double() < 1e-40);
  // i_sigma
  CHECK(abs(i_sigma({1, 1}) - Complex(-1)).to_double() == 0.0);
  CHECK(i_sigma({1, 0}).im.to_double() == 1.0);
}
