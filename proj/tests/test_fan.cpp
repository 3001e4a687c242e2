#include "doctest.h"

#include <random>

#include "shintani/fan.hpp"

using namespace shintani;

namespace {

NumberField sqrt2_field() { return NumberField({Int(-2), Int(0), Int(1)}); }

FieldElem el(long a, long b) { return FieldElem{RatVec{Rat(a), Rat(b)}}; }

Fan random_fan(std::mt19937& rng, int terms, int dim) {
  std::uniform_int_distribution<long> d(-4, 4);
  Fan f;
  for (int t = 0; t < terms; ++t) {
    std::vector<FieldElem> gens;
    for (int i = 0; i < dim; ++i) {
      FieldElem g = el(d(rng), d(rng));
      if (g.is_zero()) g = el(1, 0);
      gens.push_back(g);
    }
    f.add(Cone(gens), Int(d(rng)));
  }
  return f;
}

}  // namespace

TEST_CASE("boundary of cones") {
  FieldElem a = el(1, 0), b = el(0, 1), c = el(1, 1);
  Fan lab = Fan::single(Cone({a, b}));
  Fan d = boundary(lab);
  Fan expect = Fan::single(Cone({b})) - Fan::single(Cone({a}));
  CHECK(d == expect);

  Fan labc = Fan::single(Cone({a, b, c}));
  Fan d2 = boundary(labc);
  Fan expect2 = Fan::single(Cone({b, c})) - Fan::single(Cone({a, c})) + Fan::single(Cone({a, b}));
  CHECK(d2 == expect2);
}

TEST_CASE("boundary squared vanishes") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    Fan f = random_fan(rng, 4, 3);
    CHECK(boundary(boundary(f)).is_zero());
  }
  // the chain complex ends in C_0: d(Lambda(a)) = empty cone
  Fan one_cone = Fan::single(Cone({el(2, 1)}));
  Fan d = boundary(one_cone);
  CHECK(d == unit_fan());
}

TEST_CASE("group action") {
  NumberField k = sqrt2_field();
  FieldElem eps = el(3, 2);
  Fan f = Fan::single(Cone({el(1, 0), eps}));
  Fan g = act(k, eps, f);
  CHECK(g == Fan::single(Cone({eps, k.mul(eps, eps)})));
  CHECK(act(k, k.one(), f) == f);
  CHECK(act(k, k.inv(eps), act(k, eps, f)) == f);
  std::mt19937 rng(3);
  Fan h = random_fan(rng, 5, 2);
  CHECK(act(k, k.inv(eps), act(k, eps, h)) == h);
}

TEST_CASE("orientation and simplicity") {
  CHECK(is_simple(Cone({el(1, 0), el(0, 1)})));
  CHECK(!is_simple(Cone({el(1, 0), el(2, 0)})));
  // lower-dimensional cones: simplicity is rank in C_m
  CHECK(is_simple(Cone({el(1, 1)})));
  // ascending embeddings: r(1, 3+2sqrt2) = +1, r(2+sqrt2, 2-sqrt2) = -1
  CHECK(orientation(Cone({el(1, 0), el(3, 2)})) == 1);
  CHECK(orientation(Cone({el(2, 1), el(2, -1)})) == -1);
  CHECK(orientation(Cone({el(2, -1), el(2, 1)})) == 1);
}

TEST_CASE("dual fan matches the worked example") {
  NumberField k = sqrt2_field();
  // phi(Lambda(1, 3-2sqrt2)) = Lambda((4+3sqrt2)/8, -sqrt2/8)
  Fan f = Fan::single(Cone({el(1, 0), el(3, -2)}));
  Fan d = dual_fan(k, f);
  Cone expect({FieldElem{RatVec{Rat(1, 2), Rat(3, 8)}}, FieldElem{RatVec{Rat(0), Rat(-1, 8)}}});
  CHECK(d == Fan::single(expect));
  // -sqrt2/8 = -x * eps with x = (4+3sqrt2)/8, eps = 3-2sqrt2
  FieldElem x{RatVec{Rat(1, 2), Rat(3, 8)}};
  CHECK(k.mul(x, el(3, -2)) == FieldElem{RatVec{Rat(0), Rat(1, 8)}});

  // non-simple cones die
  CHECK(dual_fan(k, Fan::single(Cone({el(1, 1), el(2, 2)}))).is_zero());

  // involution on random simple cones
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> dist(-5, 5);
  for (int trial = 0; trial < 10; ++trial) {
    Cone c({el(dist(rng), dist(rng)), el(dist(rng), dist(rng))});
    if (!is_simple(c)) continue;
    Fan ff = Fan::single(c, Int(2));
    CHECK(dual_fan(k, dual_fan(k, ff)) == ff);
  }
}

TEST_CASE("positivize") {
  Fan f = Fan::single(Cone({el(-1, 0), el(0, 1)}));
  CHECK(positivize(f) == Fan::single(Cone({el(1, 0), el(0, 1)})));
  Fan g = Fan::single(Cone({el(2, -1)}));
  CHECK(positivize(g) == g);
  // idempotent
  std::mt19937 rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    Fan h = random_fan(rng, 4, 2);
    CHECK(positivize(positivize(h)) == positivize(h));
  }
}

TEST_CASE("characteristic value") {
  NumberField k = sqrt2_field();
  // our embedding order gives r(2-sqrt2, 2+sqrt2) = +1
  Fan f = Fan::single(Cone({el(2, -1), el(2, 1)}));
  CHECK(characteristic_value(f, k.from_rat(Rat(4))) == 1);
  CHECK(characteristic_value(f, el(0, 1)) == 0);   // t = (1/2, -1/2)
  CHECK(characteristic_value(f, el(2, 1)) == 0);   // boundary ray: t has a zero
  // reversed generator order flips the sign
  Fan frev = Fan::single(Cone({el(2, 1), el(2, -1)}));
  CHECK(characteristic_value(frev, k.from_rat(Rat(4))) == -1);
  // non-simple cones contribute nothing
  Fan ns = Fan::single(Cone({el(1, 1), el(2, 2)}));
  CHECK(characteristic_value(ns, el(3, 2)) == 0);
}

TEST_CASE("characteristic function is unit-action equivariant") {
  NumberField k = sqrt2_field();
  FieldElem eps = el(3, 2);  // totally positive
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> dist(-6, 6);
  Fan f = Fan::single(Cone({el(2, -1), el(2, 1)})) + Fan::single(Cone({el(1, 0), el(3, 2)}), Int(2));
  for (int trial = 0; trial < 30; ++trial) {
    FieldElem v = el(dist(rng), dist(rng));
    if (v.is_zero()) continue;
    CHECK(characteristic_value(act(k, eps, f), k.mul(eps, v)) == characteristic_value(f, v));
  }
}

TEST_CASE("constant-multiply keeps the open cone and orientation") {
  NumberField k = sqrt2_field();
  Cone c({el(2, -1), el(2, 1)});
  Cone scaled({k.mul_rat(c.gens[0], Rat(3, 7)), k.mul_rat(c.gens[1], Rat(5, 2))});
  Fan f = Fan::single(c), g = Fan::single(scaled);
  std::mt19937 rng(29);
  std::uniform_int_distribution<long> dist(-8, 8);
  for (int trial = 0; trial < 40; ++trial) {
    FieldElem v{RatVec{Rat(dist(rng)), Rat(dist(rng))}};
    if (v.is_zero()) continue;
    CHECK(characteristic_value(f, v) == characteristic_value(g, v));
  }
}

TEST_CASE("thin support of positivized boundaries") {
  // B = d(Lambda(u0..un)): c(P(B)) vanishes off the union of subspaces
  // spanned by (n-1)-subsets of the generators
  NumberField k = sqrt2_field();
  std::mt19937 rng(41);
  std::uniform_int_distribution<long> dist(-5, 5);
  int checked = 0;
  for (int inst = 0; inst < 20; ++inst) {
    std::vector<FieldElem> u;
    for (int i = 0; i < 3; ++i) {
      FieldElem g = el(dist(rng), dist(rng));
      if (g.is_zero()) g = el(1, 1);
      u.push_back(g);
    }
    Fan b = boundary(Fan::single(Cone(u)));
    Fan pb = positivize(b);
    for (int s = 0; s < 50; ++s) {
      FieldElem v = el(dist(rng), dist(rng));
      if (v.is_zero()) continue;
      bool on_subspace = false;
      for (const auto& ui : u)
        if (v.c[0] * ui.c[1] == v.c[1] * ui.c[0]) on_subspace = true;
      if (on_subspace) continue;
      CHECK(characteristic_value(pb, v) == 0);
      ++checked;
    }
  }
  CHECK(checked > 300);
}
