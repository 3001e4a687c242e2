#include "doctest.h"

#include <random>

#include "shintani/conical.hpp"

using namespace shintani;

namespace {

NumberField sqrt2_field() { return NumberField({Int(-2), Int(0), Int(1)}); }

FieldElem el(long a, long b) { return FieldElem{RatVec{Rat(a), Rat(b)}}; }

// injective map from small integer vectors to nonzero field elements
FieldElem encode(const std::vector<int>& v) {
  long a = 1, b = 0;
  long w = 1;
  for (int x : v) {
    a += (x + 2) * w;
    b += (x + 1) * 3 * w;
    w *= 7;
  }
  return el(a, b);
}

FieldElem encode_subset(const std::vector<CubeVertex>& u) {
  std::vector<int> flat;
  flat.push_back(static_cast<int>(u.size()));
  for (const auto& v : u)
    for (int x : v) flat.push_back(x);
  return encode(flat);
}

// boundary compatibility law checked by direct evaluation
template <class T>
bool conical_law_holds(const System<T>& f, const std::vector<T>& chain) {
  Fan lhs = boundary(f(chain));
  Fan rhs;
  for (size_t j = 1; j <= chain.size(); ++j) {
    std::vector<T> face;
    for (size_t i = 0; i < chain.size(); ++i)
      if (i != j - 1) face.push_back(chain[i]);
    Fan term = f(face);
    rhs = rhs + Int(j % 2 == 1 ? 1 : -1) * term;
  }
  return lhs == rhs;
}

}  // namespace

TEST_CASE("standard system basics and law") {
  System<CubeVertex> s = standard_system<CubeVertex>([](const CubeVertex& v) { return encode(v); });
  CHECK(s({}) == unit_fan());
  CubeVertex y = {1, 0};
  CHECK(s({y}) == Fan::single(Cone({encode(y)})));

  // law on all chains of B(2) of length <= 3
  auto verts = cube_vertices(2);
  std::function<bool(const CubeVertex&, const CubeVertex&)> leq = cube_leq;
  for (int m = 1; m <= 3; ++m)
    for (const auto& chain : all_chains<CubeVertex>(verts, leq, m))
      CHECK(conical_law_holds(s, chain));
}

TEST_CASE("t1 matches the six-term display and is a conical system") {
  // F = standard system on P(Y) for Y = {1,2,3} as 1-element cube vectors
  System<std::vector<CubeVertex>> f =
      standard_system<std::vector<CubeVertex>>([](const std::vector<CubeVertex>& u) { return encode_subset(u); });

  auto sv = [](int i) { return CubeVertex{i}; };
  std::vector<CubeVertex> h = {sv(1), sv(2), sv(3)};

  // m = 0 and m = 1
  CHECK(t1(f, {}) == unit_fan());
  Fan t1_single = t1(f, {sv(1)});
  CHECK(t1_single == f({{sv(1)}}));

  Fan got = t1(f, h);
  auto set = [&](std::initializer_list<int> xs) {
    std::vector<CubeVertex> u;
    for (int x : xs) u.push_back(sv(x));
    return u;
  };
  Fan expect;
  auto term = [&](std::vector<std::vector<CubeVertex>> chain, int sign) {
    expect = expect + Int(sign) * f(chain);
  };
  term({set({1}), set({1, 2}), set({1, 2, 3})}, 1);
  term({set({2}), set({2, 3}), set({1, 2, 3})}, 1);
  term({set({3}), set({1, 3}), set({1, 2, 3})}, 1);
  term({set({1}), set({1, 3}), set({1, 2, 3})}, -1);
  term({set({2}), set({1, 2}), set({1, 2, 3})}, -1);
  term({set({3}), set({2, 3}), set({1, 2, 3})}, -1);
  CHECK(got == expect);

  // G(h) = T_1(F, h) is itself a conical system: law on B(2) and B(3) chains
  for (int n = 2; n <= 3; ++n) {
    System<CubeVertex> g = [&f](const std::vector<CubeVertex>& chain) { return t1(f, chain); };
    auto verts = cube_vertices(n);
    std::function<bool(const CubeVertex&, const CubeVertex&)> leq = cube_leq;
    for (int m = 1; m <= (n == 2 ? 3 : 4); ++m)
      for (const auto& chain : all_chains<CubeVertex>(verts, leq, m))
        CHECK(conical_law_holds(g, chain));
  }
}

TEST_CASE("t_top expansions") {
  System<CubeVertex> s = standard_system<CubeVertex>([](const CubeVertex& v) { return encode(v); });
  // n = 1
  Fan t1d = t_top(s, 1);
  CHECK(t1d == s({{0}, {1}}));
  // n = 2: two signed path terms
  Fan t2 = t_top(s, 2);
  Fan expect2 = s({{0, 0}, {1, 0}, {1, 1}}) - s({{0, 0}, {0, 1}, {1, 1}});
  CHECK(t2 == expect2);
  // n = 3: the six-path display over the cube
  Fan t3 = t_top(s, 3);
  Fan expect3;
  auto path = [&](CubeVertex a, CubeVertex b, CubeVertex c, CubeVertex d, int sign) {
    expect3 = expect3 + Int(sign) * s({a, b, c, d});
  };
  path({0,0,0}, {1,0,0}, {1,1,0}, {1,1,1}, 1);
  path({0,0,0}, {0,1,0}, {0,1,1}, {1,1,1}, 1);
  path({0,0,0}, {0,0,1}, {1,0,1}, {1,1,1}, 1);
  path({0,0,0}, {1,0,0}, {1,0,1}, {1,1,1}, -1);
  path({0,0,0}, {0,1,0}, {1,1,0}, {1,1,1}, -1);
  path({0,0,0}, {0,0,1}, {0,1,1}, {1,1,1}, -1);
  CHECK(t3 == expect3);
}

TEST_CASE("boundary of t_top") {
  // d T(F) = sum_i (-1)^{i+1} (T(alpha_1^i F) - T(alpha_0^i F))
  for (int n = 1; n <= 3; ++n) {
    System<CubeVertex> s = standard_system<CubeVertex>([](const CubeVertex& v) { return encode(v); });
    Fan lhs = boundary(t_top(s, n));
    Fan rhs;
    for (int i = 1; i <= n; ++i) {
      for (int b = 0; b <= 1; ++b) {
        // alpha_b^i F: evaluate F on the chain with b inserted at position i
        System<CubeVertex> fb = [i, b](const std::vector<CubeVertex>& chain) {
          std::vector<CubeVertex> lifted;
          for (const auto& v : chain) {
            CubeVertex w = v;
            w.insert(w.begin() + (i - 1), b);
            lifted.push_back(std::move(w));
          }
          System<CubeVertex> s2 = standard_system<CubeVertex>([](const CubeVertex& u) { return encode(u); });
          return s2(lifted);
        };
        Fan term = t_top(fb, n - 1);
        rhs = rhs + Int((i % 2 == 1 ? 1 : -1) * (b == 1 ? 1 : -1)) * term;
      }
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("cubic fundamental domain fans") {
  NumberField k = sqrt2_field();
  FieldElem eps = el(3, 2);
  // k = 1: F(x; g) = Lambda(x, gx)
  FieldElem x = el(1, 1);
  Fan f1 = cubic_fd_fan(k, x, {eps});
  CHECK(f1 == Fan::single(Cone({x, k.mul(eps, x)})));
  // F(1; eps) = Lambda(1, eps)
  CHECK(cubic_fd_fan(k, k.one(), {eps}) == Fan::single(Cone({k.one(), eps})));
  // k = 2 expansion
  FieldElem g1 = el(3, 2), g2 = el(2, 1);
  Fan f2 = cubic_fd_fan(k, x, {g1, g2});
  FieldElem g1x = k.mul(g1, x), g2x = k.mul(g2, x), g12x = k.mul(g1, k.mul(g2, x));
  Fan expect = Fan::single(Cone({x, g1x, g12x})) - Fan::single(Cone({x, g2x, g12x}));
  CHECK(f2 == expect);
}

TEST_CASE("fusion kernel lies in the kernel of the boundary") {
  System<int> f = standard_system<int>([](const int& i) { return encode({i, 9}); });
  System<int> g = standard_system<int>([](const int& i) { return encode({i, 5}); });
  // n = 1: x = G([1]) - F([1])
  Fan x1 = fusion_kernel(f, g, 1);
  CHECK(x1 == g({1}) - f({1}));
  CHECK(boundary(x1).is_zero());
  for (int n = 2; n <= 3; ++n) {
    Fan x = fusion_kernel(f, g, n);
    CHECK(!x.is_zero());
    CHECK(boundary(x).is_zero());
  }
}

TEST_CASE("fundamental domain fan for quadratic fields") {
  NumberField k = sqrt2_field();
  auto fd = fundamental_domain_fan(k);
  CHECK(fd.fan == Fan::single(Cone({k.one(), el(3, 2)})));
  CHECK(fd.generators.size() == 1);
  CHECK(fd.generators[0] == el(3, 2));
  CHECK(orientation(Cone({k.one(), el(3, 2)})) == 1);

  NumberField k3({Int(-3), Int(0), Int(1)});
  auto fd3 = fundamental_domain_fan(k3);
  CHECK(fd3.fan == Fan::single(Cone({k3.one(), FieldElem{RatVec{Rat(2), Rat(1)}}})));

  NumberField cubic({Int(-1), Int(-3), Int(0), Int(1)});
  CHECK_THROWS_AS(fundamental_domain_fan(cubic), HigherDegreeNeedsExplicitFan);
}

TEST_CASE("yoshida indicator and tiling at n=2") {
  NumberField k = sqrt2_field();
  auto fd = fundamental_domain_fan(k);
  FieldElem eps = fd.generators[0];
  // interior points of C(1, eps) have indicator 1
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      FieldElem v = k.add(k.mul_rat(k.one(), Rat(a)), k.mul_rat(eps, Rat(b)));
      CHECK(characteristic_value(fd.fan, v) == 1);
    }
  // totally positive points: exactly one unit translate lands in the open
  // cone, unless the point sits on a boundary ray
  std::mt19937 rng(59);
  std::uniform_int_distribution<long> dist(-20, 20);
  int tiled = 0, outside_seen = 0;
  for (int trial = 0; trial < 2000 && tiled < 200; ++trial) {
    FieldElem v = el(dist(rng), dist(rng));
    if (v.is_zero() || !k.totally_positive(v)) continue;
    // boundary rays are the rational multiples of eps powers
    bool on_ray = false;
    FieldElem u = k.mul(v, k.power(eps, -12));
    for (int s = -12; s <= 12; ++s) {
      if (u.c[1] == 0) on_ray = true;
      u = k.mul(u, eps);
    }
    if (on_ray) continue;
    int hits = 0;
    FieldElem w = k.mul(v, k.power(eps, -12));
    for (int s = -12; s <= 12; ++s) {
      if (characteristic_value(fd.fan, w) == 1) ++hits;
      w = k.mul(w, eps);
    }
    CHECK(hits == 1);
    if (characteristic_value(fd.fan, v) == 0) ++outside_seen;
    ++tiled;
  }
  CHECK(tiled >= 200);
  CHECK(outside_seen >= 50);
}
