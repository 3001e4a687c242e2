#include "doctest.h"

#include <random>

#include "shintani/numberfield.hpp"

using namespace shintani;

namespace {

NumberField sqrt2_field() { return NumberField({Int(-2), Int(0), Int(1)}); }

FieldElem el(const NumberField& k, long a, long b) {
  (void)k;
  return FieldElem{RatVec{Rat(a), Rat(b)}};
}

}  // namespace

TEST_CASE("make_field basics") {
  NumberField k = sqrt2_field();
  CHECK(k.degree() == 2);
  // roots sorted increasingly: rho_1 ~ -1.414, rho_2 ~ +1.414
  auto iv1 = k.embed(k.theta(), 1, 40);
  auto iv2 = k.embed(k.theta(), 2, 40);
  CHECK(static_cast<double>(iv1.mid()) == doctest::Approx(-1.41421356).epsilon(1e-6));
  CHECK(static_cast<double>(iv2.mid()) == doctest::Approx(1.41421356).epsilon(1e-6));

  CHECK_THROWS_AS(NumberField({Int(1), Int(0), Int(1)}), NotTotallyReal);  // x^2+1
  CHECK_THROWS_AS(NumberField({Int(-4), Int(0), Int(1)}), NotIrreducible); // x^2-4
  // x^3 - 3x - 1: cyclic cubic, three real roots
  NumberField cubic({Int(-1), Int(-3), Int(0), Int(1)});
  CHECK(cubic.degree() == 3);
}

TEST_CASE("embed refinement narrows and is certified") {
  NumberField k = sqrt2_field();
  FieldElem x = el(k, 3, -2);  // 3 - 2*sqrt(2) at rho_2
  auto iv = k.embed(x, 2, 80);
  CHECK(iv.width() <= Rat(1, Int(1) << 80));
  double v = static_cast<double>(iv.mid());
  CHECK(v == doctest::Approx(3 - 2 * 1.4142135623730951).epsilon(1e-12));
  // refining only narrows
  auto iv2 = k.embed(x, 2, 200);
  CHECK(iv2.lo >= iv.lo);
  CHECK(iv2.hi <= iv.hi);
  // exact for rationals
  auto iv3 = k.embed(k.one(), 1, 10);
  CHECK(iv3.lo == 1);
  CHECK(iv3.hi == 1);
}

TEST_CASE("trace and norm") {
  NumberField k = sqrt2_field();
  CHECK(k.trace(el(k, 0, 1)) == 0);
  CHECK(k.norm(el(k, 0, 1)) == -2);
  CHECK(k.trace(el(k, 1, 1)) == 2);
  CHECK(k.norm(el(k, 1, 1)) == -1);
  CHECK(k.trace(el(k, 3, 2)) == 6);
  CHECK(k.norm(el(k, 3, 2)) == 1);
  // trace agrees with the numeric sum of embeddings
  FieldElem x = el(k, 5, -3);
  double num = static_cast<double>(k.embed(x, 1, 60).mid()) +
               static_cast<double>(k.embed(x, 2, 60).mid());
  CHECK(static_cast<double>(k.trace(x)) == doctest::Approx(num).epsilon(1e-12));
}

TEST_CASE("dual basis") {
  NumberField k = sqrt2_field();
  // paper display: dual of (1, 3-2*sqrt2) is ((4+3*sqrt2)/8, -sqrt2/8)
  std::vector<FieldElem> a = {k.one(), el(k, 3, -2)};
  auto b = k.dual_basis(a);
  CHECK(b[0] == FieldElem{RatVec{Rat(1, 2), Rat(3, 8)}});
  CHECK(b[1] == FieldElem{RatVec{Rat(0), Rat(-1, 8)}});
  // Tr(a_i b_j) = delta_ij exactly
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(k.trace(k.mul(a[i], b[j])) == (i == j ? 1 : 0));
  // involution
  auto bb = k.dual_basis(b);
  CHECK(bb[0] == a[0]);
  CHECK(bb[1] == a[1]);
  CHECK_THROWS_AS(k.dual_basis({k.one(), k.from_rat(Rat(2))}), LinearlyDependent);
}

TEST_CASE("lattice arithmetic") {
  NumberField k = sqrt2_field();
  QLattice o = k.standard_lattice();  // O_K = Z[sqrt2]
  CHECK(k.ring_of_integers() == o);   // disc -8 fundamental

  // trace dual of O_K is (1/(2 sqrt2)) O_K; different = (2 sqrt2)
  QLattice dual = k.trace_dual(o);
  QLattice expected = k.scale_lattice(o, k.inv(el(k, 0, 2)));  // 1/(2 sqrt2)
  CHECK(dual == expected);
  QLattice diff = k.different();
  CHECK(diff == k.principal_ideal(el(k, 0, 2)));
  CHECK(k.ideal_norm(diff) == 8);

  // dual(dual(L)) == L
  QLattice l(RatMat{{Rat(2), Rat(1)}, {Rat(0), Rat(3)}});
  CHECK(k.trace_dual(k.trace_dual(l)) == l);

  // index and quotient
  QLattice two_o = lattice_scale(o, Rat(2));
  CHECK(lattice_index(o, two_o) == 4);
  auto reps = lattice_quotient_reps(o, two_o);
  CHECK(reps.size() == 4);
  // index multiplicativity on a chain
  QLattice four_o = lattice_scale(o, Rat(4));
  CHECK(lattice_index(o, four_o) == lattice_index(o, two_o) * lattice_index(two_o, four_o));

  CHECK_THROWS_AS(lattice_index(two_o, o), NotSublattice);

  // sum and intersection
  QLattice half = lattice_scale(o, Rat(1, 2));
  CHECK(lattice_sum(o, half) == half);
  CHECK(lattice_intersect(o, half) == o);
  QLattice p7 = k.principal_ideal(el(k, 3, 1));
  CHECK(lattice_intersect(o, p7) == p7);
  CHECK(lattice_sum(o, p7) == o);

  // ideal inverse
  QLattice p7inv = k.ideal_inverse(p7);
  CHECK(k.ideal_mul(p7, p7inv) == o);
  CHECK(k.ideal_norm(p7) == 7);
  CHECK(k.ideal_norm(p7inv) == Rat(1, 7));
  // a non-ideal lattice is rejected
  QLattice notideal(RatMat{{Rat(1), Rat(0)}, {Rat(0), Rat(2)}});
  CHECK_THROWS_AS(k.ideal_inverse(notideal), NotAnIdeal);
}

TEST_CASE("lattice reduce") {
  NumberField k = sqrt2_field();
  QLattice two_o = lattice_scale(k.standard_lattice(), Rat(2));
  FieldElem x = el(k, 7, 3);
  FieldElem r = lattice_reduce(two_o, x);
  CHECK(r == el(k, 1, 1));
}

TEST_CASE("quadratic units") {
  NumberField k = sqrt2_field();
  const UnitData& u = k.units();
  CHECK(u.unit_group_index == 4);
  CHECK(u.totally_positive_generators.size() == 1);
  CHECK(u.totally_positive_generators[0] == el(k, 3, 2));  // 3 + 2 sqrt2

  NumberField k3({Int(-3), Int(0), Int(1)});
  const UnitData& u3 = k3.units();
  CHECK(u3.unit_group_index == 2);
  CHECK(u3.totally_positive_generators[0] == FieldElem{RatVec{Rat(2), Rat(1)}});  // 2 + sqrt3

  // Q(sqrt5): fundamental unit (1+sqrt5)/2 has norm -1
  NumberField k5({Int(-5), Int(0), Int(1)});
  const UnitData& u5 = k5.units();
  CHECK(u5.unit_group_index == 4);
  CHECK(k5.norm(u5.totally_positive_generators[0]) == 1);
  // (3+sqrt5)/2 = ((1+sqrt5)/2)^2
  CHECK(u5.totally_positive_generators[0] == FieldElem{RatVec{Rat(3, 2), Rat(1, 2)}});

  NumberField cubic({Int(-1), Int(-3), Int(0), Int(1)});
  CHECK_THROWS_AS(cubic.units(), HigherDegreeNeedsExplicitFan);
}

TEST_CASE("principal degree one primes") {
  NumberField k = sqrt2_field();
  auto primes = k.find_principal_degree_one_primes({Int(2)}, 4);
  REQUIRE(primes.size() == 4);
  bool found_7 = false;
  for (auto& pp : primes)
    if (pp.p == 7 && pp.generator == el(k, 3, 1)) found_7 = true;
  CHECK(found_7);
  // increasing p
  for (size_t i = 1; i < primes.size(); ++i) CHECK(primes[i - 1].p <= primes[i].p);

  auto primes2 = k.find_principal_degree_one_primes({Int(2), Int(7)}, 2);
  bool found_17 = false;
  for (auto& pp : primes2)
    if (pp.p == 17 && pp.generator == el(k, 5, 2)) found_17 = true;
  CHECK(found_17);
  for (auto& pp : primes2) CHECK(pp.p != 7);

  // degree 1 field: the primes themselves
  NumberField q({Int(0), Int(1)});
  auto qp = q.find_principal_degree_one_primes({}, 3);
  REQUIRE(qp.size() == 3);
  CHECK(qp[0].p == 2);
  CHECK(qp[1].p == 3);
  CHECK(qp[2].p == 5);
}

TEST_CASE("prime support of fractional ideals") {
  NumberField k = sqrt2_field();
  QLattice p7 = k.principal_ideal(el(k, 3, 1));
  auto s = k.ideal_prime_support(p7);
  CHECK(s == std::set<Int>{Int(7)});
  // p * conj(p)^-1 has norm 1 but support {7}
  QLattice p7c = k.principal_ideal(el(k, 3, -1));
  QLattice mixed = k.ideal_mul(p7, k.ideal_inverse(p7c));
  CHECK(k.ideal_norm(mixed) == 1);
  auto s2 = k.ideal_prime_support(mixed);
  CHECK(s2 == std::set<Int>{Int(7)});
}

TEST_CASE("field element arithmetic is exact") {
  NumberField k = sqrt2_field();
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int trial = 0; trial < 20; ++trial) {
    FieldElem a = el(k, d(rng), d(rng));
    if (a.is_zero()) continue;
    FieldElem b = k.mul(a, k.inv(a));
    CHECK(b == k.one());
    // norm is multiplicative
    FieldElem c = el(k, d(rng), d(rng));
    CHECK(k.norm(k.mul(a, c)) == k.norm(a) * k.norm(c));
  }
}
