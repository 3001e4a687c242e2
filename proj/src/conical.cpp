#include "shintani/conical.hpp"

namespace shintani {

Fan t_top(const System<CubeVertex>& f, int n) {
  Fan out;
  for (const auto& perm : detail::all_permutations(n)) {
    // f_sigma(j) = sum_{k<j} e_{sigma(k)}: path from 0 to (1,..,1)
    std::vector<CubeVertex> chain;
    CubeVertex cur(n, 0);
    chain.push_back(cur);
    for (int j = 0; j < n; ++j) {
      cur[perm[j]] = 1;
      chain.push_back(cur);
    }
    out = out + Int(detail::perm_sign(perm)) * f(chain);
  }
  return out;
}

Fan cubic_fd_fan(const NumberField& k, const FieldElem& x, const std::vector<FieldElem>& g) {
  if (x.is_zero()) throw ZeroValue("cubic_fd_fan: x = 0");
  for (const auto& gi : g)
    if (gi.is_zero()) throw ZeroValue("cubic_fd_fan: zero unit");
  int m = static_cast<int>(g.size());
  Fan out;
  for (const auto& perm : detail::all_permutations(m)) {
    std::vector<FieldElem> gens;
    gens.reserve(m + 1);
    FieldElem cur = x;
    gens.push_back(cur);
    for (int j = 0; j < m; ++j) {
      cur = k.mul(g[perm[j]], cur);
      gens.push_back(cur);
    }
    out.add(Cone(std::move(gens)), Int(detail::perm_sign(perm)));
  }
  return out;
}

Fan fusion_kernel(const System<int>& f, const System<int>& g, int n) {
  std::vector<int> elems(n);
  std::iota(elems.begin(), elems.end(), 1);
  auto leq = [](const int& a, const int& b) { return a <= b; };
  Fan out;
  for (int k = 0; k <= n; ++k) {
    auto fs = all_chains<int>(elems, leq, k);
    auto gs = all_chains<int>(elems, leq, n - k);
    for (const auto& fc : fs) {
      for (const auto& gc : gs) {
        bool disjoint = true;
        for (int a : fc)
          for (int b : gc)
            if (a == b) { disjoint = false; break; }
        if (!disjoint) continue;
        long t = 0;
        for (int a : fc)
          for (int b : gc)
            if (a > b) ++t;
        Int sign = ((k + t) % 2 == 0) ? 1 : -1;
        out = out + sign * tensor(f(fc), g(gc));
      }
    }
  }
  return out;
}

FundamentalDomainFan fundamental_domain_fan(const NumberField& k) {
  if (k.degree() >= 3 && !k.has_units())
    throw HigherDegreeNeedsExplicitFan("degree >= 3 needs supplied units/fan");
  const UnitData& u = k.units();
  if (u.totally_positive_generators.size() + 1 != k.degree())
    throw HigherDegreeNeedsExplicitFan("unit rank mismatch");
  FundamentalDomainFan out;
  out.generators = u.totally_positive_generators;
  out.fan = cubic_fd_fan(k, k.one(), out.generators);
  return out;
}

}  // namespace shintani
