#include "shintani/fan.hpp"

namespace shintani {

bool Cone::operator<(const Cone& o) const {
  if (gens.size() != o.gens.size()) return gens.size() < o.gens.size();
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].c < o.gens[i].c) return true;
    if (o.gens[i].c < gens[i].c) return false;
  }
  return false;
}

Fan Fan::single(Cone c, Int coeff) {
  Fan f;
  f.add(c, coeff);
  return f;
}

void Fan::add(const Cone& c, const Int& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(c);
  if (it == terms_.end()) {
    terms_.emplace(c, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Fan operator+(const Fan& a, const Fan& b) {
  Fan r = a;
  for (const auto& [c, k] : b.terms_) r.add(c, k);
  return r;
}

Fan operator-(const Fan& a, const Fan& b) {
  Fan r = a;
  for (const auto& [c, k] : b.terms_) r.add(c, -k);
  return r;
}

Fan operator*(const Int& k, const Fan& a) {
  Fan r;
  if (k == 0) return r;
  for (const auto& [c, v] : a.terms_) r.add(c, k * v);
  return r;
}

Fan tensor(const Fan& a, const Fan& b) {
  Fan r;
  for (const auto& [ca, ka] : a.terms_)
    for (const auto& [cb, kb] : b.terms_) {
      std::vector<FieldElem> gens = ca.gens;
      gens.insert(gens.end(), cb.gens.begin(), cb.gens.end());
      r.add(Cone(std::move(gens)), ka * kb);
    }
  return r;
}

Fan boundary(const Fan& f) {
  Fan r;
  for (const auto& [c, k] : f.terms()) {
    size_t m = c.dim();
    for (size_t i = 0; i < m; ++i) {
      std::vector<FieldElem> gens;
      gens.reserve(m - 1);
      for (size_t j = 0; j < m; ++j)
        if (j != i) gens.push_back(c.gens[j]);
      r.add(Cone(std::move(gens)), (i % 2 == 0) ? k : -k);
    }
  }
  return r;
}

Fan act(const NumberField& k, const FieldElem& eps, const Fan& f) {
  if (eps.is_zero()) throw ZeroValue("act by zero");
  Fan r;
  for (const auto& [c, coeff] : f.terms()) {
    std::vector<FieldElem> gens;
    gens.reserve(c.dim());
    for (const auto& g : c.gens) gens.push_back(k.mul(eps, g));
    r.add(Cone(std::move(gens)), coeff);
  }
  return r;
}

bool is_simple(const Cone& c) {
  if (c.dim() == 0) return true;
  RatMat m;
  for (const auto& g : c.gens) m.push_back(g.c);
  return rat_rank(std::move(m)) == c.dim();
}

int orientation(const Cone& c) {
  size_t n = c.dim();
  if (n == 0) return 1;
  if (c.gens[0].c.size() != n) return 0;  // orientation is a top-dimension notion
  RatMat m;
  for (const auto& g : c.gens) m.push_back(g.c);
  Rat d = rat_det(std::move(m));
  return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

Fan dual_fan(const NumberField& k, const Fan& f) {
  Fan r;
  for (const auto& [c, coeff] : f.terms()) {
    if (c.dim() != k.degree()) throw ValidationError("dual_fan needs top-dimensional cones");
    if (!is_simple(c)) continue;
    r.add(Cone(k.dual_basis(c.gens)), coeff);
  }
  return r;
}

FieldElem lex_positivize(const FieldElem& v) {
  for (const auto& x : v.c) {
    if (x > 0) return v;
    if (x < 0) {
      RatVec neg(v.c.size());
      for (size_t i = 0; i < neg.size(); ++i) neg[i] = -v.c[i];
      return FieldElem{neg};
    }
  }
  return v;  // zero
}

Fan positivize(const Fan& f) {
  Fan r;
  for (const auto& [c, coeff] : f.terms()) {
    std::vector<FieldElem> gens;
    gens.reserve(c.dim());
    for (const auto& g : c.gens) gens.push_back(lex_positivize(g));
    r.add(Cone(std::move(gens)), coeff);
  }
  return r;
}

Int characteristic_value(const Fan& f, const FieldElem& v) {
  Int total = 0;
  size_t n = v.c.size();
  for (const auto& [c, coeff] : f.terms()) {
    if (c.dim() != n || !is_simple(c)) continue;
    // solve v = sum t_i u_i over Q; columns of the system are the generators
    RatMat a(n, RatVec(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) a[j][i] = c.gens[i].c[j];
    RatVec t = rat_solve(a, v.c);
    bool inside = true;
    for (const auto& ti : t)
      if (ti <= 0) { inside = false; break; }
    if (inside) total += coeff * orientation(c);
  }
  return total;
}

}  // namespace shintani
