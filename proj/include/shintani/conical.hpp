#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "shintani/fan.hpp"

namespace shintani {

// A conical system is an evaluation contract: strictly increasing chains of
// a poset map to fans, subject to the boundary compatibility law. Systems
// are consumed lazily (the power-set posets are exponentially large).
// T is the poset element type; chains are vectors of T.
template <class T>
using System = std::function<Fan(const std::vector<T>&)>;

// standard conical system S_h attached to h: Y -> K^*
template <class T>
System<T> standard_system(std::function<FieldElem(const T&)> h) {
  return [h](const std::vector<T>& chain) -> Fan {
    std::vector<FieldElem> gens;
    gens.reserve(chain.size());
    for (const auto& y : chain) {
      FieldElem v = h(y);
      if (v.is_zero()) throw ZeroValue("standard system value is zero");
      gens.push_back(std::move(v));
    }
    return Fan::single(Cone(std::move(gens)));
  };
}

namespace detail {
inline int perm_sign(const std::vector<int>& p) {
  int s = 1;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

inline std::vector<std::vector<int>> all_permutations(int m) {
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(idx);
  while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}
}  // namespace detail

// T_1(F, h) for F a conical system on P(Y): a poset element of P(Y) is a
// nonempty totally ordered subset of Y, represented as a sorted vector.
template <class T>
Fan t1(const System<std::vector<T>>& f_on_py, const std::vector<T>& h) {
  int m = static_cast<int>(h.size());
  if (m == 0) return unit_fan();
  Fan out;
  for (const auto& perm : detail::all_permutations(m)) {
    std::vector<std::vector<T>> chain;  // g_{sigma,h}(j) = {h(sigma(k)) | k <= j}
    std::vector<T> cur;
    for (int j = 0; j < m; ++j) {
      cur.push_back(h[perm[j]]);
      std::vector<T> sorted = cur;
      std::sort(sorted.begin(), sorted.end());
      chain.push_back(std::move(sorted));
    }
    Fan val = f_on_py(chain);
    out = out + Int(detail::perm_sign(perm)) * val;
  }
  return out;
}

// hypercube poset B(n) = {0,1}^n ordered componentwise
using CubeVertex = std::vector<int>;

inline std::vector<CubeVertex> cube_vertices(int n) {
  std::vector<CubeVertex> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    CubeVertex v(n);
    for (int i = 0; i < n; ++i) v[i] = (mask >> i) & 1;
    out.push_back(std::move(v));
  }
  return out;
}

inline bool cube_leq(const CubeVertex& a, const CubeVertex& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// T(F) for a conical system on B(n): signed sum over monotone lattice paths
Fan t_top(const System<CubeVertex>& f, int n);

// cubic fundamental domain fan F(x; g_1..g_k)
Fan cubic_fd_fan(const NumberField& k, const FieldElem& x, const std::vector<FieldElem>& g);

// fusion-product kernel element for two conical systems on {1..n}
Fan fusion_kernel(const System<int>& f, const System<int>& g, int n);

struct FundamentalDomainFan {
  Fan fan;
  std::vector<FieldElem> generators;  // the E_K generators used
};

// F(1; eps) for the field's unit data; degree >= 3 requires supplied data
FundamentalDomainFan fundamental_domain_fan(const NumberField& k);

// all strictly increasing chains of length m in a finite poset given by
// elements and a leq predicate
template <class T>
std::vector<std::vector<T>> all_chains(const std::vector<T>& elems,
                                       std::function<bool(const T&, const T&)> leq, int m) {
  std::vector<std::vector<T>> out;
  std::vector<T> cur;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == m) {
      out.push_back(cur);
      return;
    }
    for (const auto& e : elems) {
      if (!cur.empty() && !(leq(cur.back(), e) && !(e == cur.back()))) continue;
      cur.push_back(e);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

}  // namespace shintani
