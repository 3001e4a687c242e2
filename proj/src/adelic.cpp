#include "shintani/adelic.hpp"

namespace shintani {

namespace {

// zero threshold for table values built at working precision
bool below_threshold(const Complex& v, long bits) {
  Real t = Real::make();
  mpfr_set_ui_2exp(t.raw(), 1, -(bits / 2), MPFR_RNDN);
  return abs(v) < t;
}

}  // namespace

bool LatticeFunction::effectively_zero(const Complex& v) const {
  return below_threshold(v, Real::working_prec());
}

Complex LatticeFunction::eval(const FieldElem& x) const {
  if (!supp.contains(x)) return Complex(0);
  auto it = table.find(lattice_reduce(per, x));
  return it == table.end() ? Complex(0) : it->second;
}

LatticeFunction make_lattice_function(const NumberField& k, QLattice supp, QLattice per,
                                      const std::map<FieldElem, Complex>& values) {
  if (!lattice_subset(per, supp)) throw NotSublattice("per must be a sublattice of supp");
  LatticeFunction f;
  f.field = &k;
  f.supp = std::move(supp);
  f.per = std::move(per);
  for (const auto& [key, val] : values) {
    if (!f.supp.contains(key)) throw ValidationError("table key outside support lattice");
    if (below_threshold(val, Real::working_prec())) continue;
    f.table.emplace(lattice_reduce(f.per, key), val);
  }
  return f;
}

LatticeFunction indicator(const NumberField& k, const QLattice& l) {
  LatticeFunction f;
  f.field = &k;
  f.supp = l;
  f.per = l;
  f.table.emplace(k.zero(), Complex(1));
  return f;
}

LatticeFunction combine(const std::vector<Complex>& scalars,
                        const std::vector<LatticeFunction>& funcs) {
  if (funcs.empty() || scalars.size() != funcs.size())
    throw ValidationError("combine: length mismatch");
  const NumberField& k = *funcs[0].field;
  QLattice supp = funcs[0].supp;
  QLattice per = funcs[0].per;
  for (size_t i = 1; i < funcs.size(); ++i) {
    supp = lattice_sum(supp, funcs[i].supp);
    per = lattice_intersect(per, funcs[i].per);
  }
  LatticeFunction out;
  out.field = &k;
  out.supp = supp;
  out.per = per;
  for (const auto& rep : lattice_quotient_reps(supp, per)) {
    Complex v(0);
    for (size_t i = 0; i < funcs.size(); ++i) v += scalars[i] * funcs[i].eval(rep);
    if (!below_threshold(v, Real::working_prec())) out.table.emplace(rep, v);
  }
  // retain the decomposition, flattened through the operands
  for (size_t i = 0; i < funcs.size(); ++i) {
    if (funcs[i].parts.empty()) {
      LatticeFunction atom = funcs[i];
      out.parts.emplace_back(scalars[i], std::move(atom));
    } else {
      for (const auto& [c, piece] : funcs[i].parts)
        out.parts.emplace_back(scalars[i] * c, piece);
    }
  }
  return out;
}

LatticeFunction scale_argument(const LatticeFunction& phi, const FieldElem& beta) {
  if (beta.is_zero()) throw ZeroScale();
  const NumberField& k = *phi.field;
  FieldElem binv = k.inv(beta);
  LatticeFunction out;
  out.field = phi.field;
  out.supp = k.scale_lattice(phi.supp, binv);
  out.per = k.scale_lattice(phi.per, binv);
  for (const auto& [key, val] : phi.table)
    out.table.emplace(lattice_reduce(out.per, k.mul(binv, key)), val);
  for (const auto& [c, piece] : phi.parts)
    out.parts.emplace_back(c, scale_argument(piece, beta));
  return out;
}

Real covolume(const NumberField& k, const QLattice& l) {
  Real root_disc = sqrt(Real(abs(k.poly_disc())));
  return Real(l.det_abs()) * root_disc;
}

LatticeFunction fourier(const LatticeFunction& phi) {
  const NumberField& k = *phi.field;
  LatticeFunction out;
  out.field = phi.field;
  out.supp = k.trace_dual(phi.per);
  out.per = k.trace_dual(phi.supp);
  PrecisionGuard g(Real::working_prec() + 32);
  Real inv_covol = Real(1) / covolume(k, phi.per);
  for (const auto& yrep : lattice_quotient_reps(out.supp, out.per)) {
    Complex acc(0);
    for (const auto& [x, v] : phi.table) {
      Rat tr = k.trace(k.mul(x, yrep));
      acc += v * unit_phase(tr);
    }
    acc = inv_covol * acc;
    if (!below_threshold(acc, Real::working_prec() - 32)) out.table.emplace(yrep, acc);
  }
  for (const auto& [c, piece] : phi.parts) out.parts.emplace_back(c, fourier(piece));
  return out;
}

bool p1_check(const LatticeFunction& phi, const Cone& cone) {
  size_t n = phi.field->degree();
  if (cone.dim() != n || !is_simple(cone)) throw NotSimple();
  // coordinates with respect to the cone basis
  RatMat a(n, RatVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[j][i] = cone.gens[i].c[j];
  RatMat ainv = rat_inverse(a);
  auto cone_coords = [&](const FieldElem& x) {
    RatVec t(n, Rat(0));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) t[i] += ainv[i][j] * x.c[j];
    return t;
  };
  // t_j(M) is a cyclic subgroup g_j Z of Q
  std::vector<Rat> gj(n, Rat(0));
  for (const auto& mrow : phi.per.basis()) {
    RatVec t = cone_coords(FieldElem{mrow});
    for (size_t j = 0; j < n; ++j) gj[j] = rat_gcd(gj[j], t[j]);
  }
  for (const auto& [c, v] : phi.table) {
    RatVec t = cone_coords(c);
    for (size_t j = 0; j < n; ++j) {
      // c in V_j + M  <=>  t_j(c) in g_j Z
      if (gj[j] == 0) {
        if (t[j] == 0) return false;
      } else if (rat_is_integer(t[j] / gj[j])) {
        return false;
      }
    }
  }
  return true;
}

bool p2_check(const LatticeFunction& phi, const Cone& cone) {
  if (cone.dim() != phi.field->degree() || !is_simple(cone)) throw NotSimple();
  Fan dual = dual_fan(*phi.field, Fan::single(cone));
  const Cone& dual_cone = dual.terms().begin()->first;
  return p1_check(fourier(phi), dual_cone);
}

bool regular(const LatticeFunction& phi, const Fan& fan) {
  for (const auto& [cone, coeff] : fan.terms()) {
    if (!is_simple(cone) || cone.dim() != phi.field->degree()) continue;
    if (!p1_check(phi, cone) || !p2_check(phi, cone)) return false;
  }
  return true;
}

// ---- Hecke characters ----

bool HeckeCharacter::is_trivial_modulus() const {
  return modulus == field->ring_of_integers();
}

Rat HeckeCharacter::finite_phase(const FieldElem& x) const {
  auto it = table.find(lattice_reduce(modulus, x));
  if (it == table.end()) throw ValidationError("residue not coprime to the modulus");
  return it->second;
}

int HeckeCharacter::infinity_sign(const FieldElem& x) const {
  int s = 1;
  for (size_t mu = 0; mu < sigma.size(); ++mu)
    if (sigma[mu] && field->embed_sign(x, static_cast<int>(mu) + 1) < 0) s = -s;
  return s;
}

Complex HeckeCharacter::ideal_value(const FieldElem& generator) const {
  // chi_I((a)) = table(a)^{-1} chi_infty(a)^{-1}, finite order
  Rat phase = is_trivial_modulus() ? Rat(0) : -finite_phase(generator);
  if (infinity_sign(generator) < 0) phase += Rat(1, 2);
  return unit_phase(phase);
}

HeckeCharacter HeckeCharacter::inverse() const {
  HeckeCharacter inv = *this;
  for (auto& [key, phase] : inv.table) phase = rat_frac(-phase);
  for (auto& h : inv.h_im) h = -h;
  return inv;
}

HeckeCharacter make_hecke_character(const NumberField& k, QLattice modulus,
                                    std::map<FieldElem, Rat> phases, std::vector<int> sigma,
                                    std::vector<Rat> h_im) {
  if (sigma.size() != k.degree()) throw InconsistentCharacter("sigma length mismatch");
  if (h_im.empty()) h_im.assign(k.degree(), Rat(0));
  const QLattice& o = k.ring_of_integers();
  if (!lattice_subset(modulus, o)) throw InconsistentCharacter("modulus must be integral");

  HeckeCharacter chi;
  chi.field = &k;
  chi.modulus = std::move(modulus);
  chi.sigma = std::move(sigma);
  chi.h_im = std::move(h_im);
  bool trivial_mod = chi.modulus == o;
  for (const auto& [key, phase] : phases)
    chi.table.emplace(lattice_reduce(chi.modulus, key), rat_frac(phase));

  // the table must cover exactly the coprime residues
  for (const auto& rep : lattice_quotient_reps(o, chi.modulus)) {
    bool coprime;
    if (trivial_mod) {
      coprime = true;  // single residue class
    } else {
      coprime = !rep.is_zero() && lattice_sum(k.principal_ideal(rep), chi.modulus) == o;
    }
    if (coprime && !chi.table.count(rep))
      throw InconsistentCharacter("missing table value for a coprime residue");
    if (!coprime && chi.table.count(rep))
      throw InconsistentCharacter("table value on a non-coprime residue");
  }

  // multiplicativity on the unit group of O/m
  for (const auto& [x, px] : chi.table)
    for (const auto& [y, py] : chi.table) {
      FieldElem xy = lattice_reduce(chi.modulus, k.mul(x, y));
      if (!chi.table.count(xy)) throw InconsistentCharacter("unit group not closed");
      if (rat_frac(px + py) != chi.table.at(xy))
        throw InconsistentCharacter("finite table not multiplicative");
    }

  // consistency on global units: table(u) * chi_infty(u) = 1, checked on
  // generators of O^x (-1 together with the fundamental unit)
  std::vector<FieldElem> unit_gens = {k.neg(k.one())};
  if (k.degree() == 2) {
    unit_gens.push_back(quadratic_fundamental_unit(k));
  } else if (k.degree() >= 3 && k.has_units()) {
    for (const auto& g : k.units().totally_positive_generators) unit_gens.push_back(g);
  }
  for (const auto& u : unit_gens) {
    Rat p = trivial_mod ? Rat(0) : chi.table.at(lattice_reduce(chi.modulus, u));
    int s = chi.infinity_sign(u);
    Rat total = rat_frac(p + (s < 0 ? Rat(1, 2) : Rat(0)));
    if (total != 0) throw InconsistentCharacter("character not trivial on units");
  }
  return chi;
}

HeckeCharacter trivial_character(const NumberField& k) {
  std::map<FieldElem, Rat> phases;
  phases.emplace(k.zero(), Rat(0));
  return make_hecke_character(k, k.ring_of_integers(), std::move(phases),
                              std::vector<int>(k.degree(), 0));
}

// ---- group ring ----

GroupRingElement groupring_normalize(GroupRingElement z) {
  GroupRingElement out;
  for (auto& t : z) {
    if (t.scale == 0) continue;
    t.phase = rat_frac(t.phase);
    // fold a half-turn into the sign so equal ideals merge more often
    if (t.phase >= Rat(1, 2)) {
      t.phase -= Rat(1, 2);
      t.scale = -t.scale;
    }
    bool merged = false;
    for (auto& o : out) {
      if (o.ideal == t.ideal && o.phase == t.phase) {
        o.scale += t.scale;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(t);
  }
  GroupRingElement clean;
  for (auto& t : out)
    if (t.scale != 0) clean.push_back(t);
  return clean;
}

GroupRingElement groupring_mul(const NumberField& k, const GroupRingElement& a,
                               const GroupRingElement& b) {
  GroupRingElement out;
  for (const auto& ta : a)
    for (const auto& tb : b)
      out.push_back({ta.scale * tb.scale, rat_frac(ta.phase + tb.phase),
                     k.ideal_mul(ta.ideal, tb.ideal)});
  return groupring_normalize(std::move(out));
}

GroupRingElement groupring_dual(const NumberField& k, const GroupRingElement& z) {
  GroupRingElement out;
  for (const auto& t : z) {
    Rat nb = k.ideal_norm(t.ideal);
    out.push_back({t.scale * nb, t.phase, k.ideal_inverse(t.ideal)});
  }
  return groupring_normalize(std::move(out));
}

GroupRingElement groupring_scale_ideal(const NumberField& k, const GroupRingElement& z,
                                       const QLattice& ideal) {
  GroupRingElement out;
  for (const auto& t : z) out.push_back({t.scale, t.phase, k.ideal_mul(t.ideal, ideal)});
  return out;
}

// ---- standard and twisted functions ----

LatticeFunction standard_function(const HeckeCharacter& chi, const QLattice& b_ideal) {
  const NumberField& k = *chi.field;
  const QLattice& o = k.ring_of_integers();
  auto beta = k.find_generator(b_ideal);
  if (!beta) throw ValidationError("standard_function: no generator found (class number 1 expected)");
  QLattice binv = k.ideal_inverse(b_ideal);
  QLattice per = k.scale_lattice(chi.modulus, k.inv(*beta));  // m b^{-1}

  // global constant chi_infty(beta)^{-1} (finite order: a sign; the plumbed
  // h contributes a unimodular factor computed numerically)
  Complex cinf(long(chi.infinity_sign(*beta)));
  bool h_zero = true;
  for (const auto& h : chi.h_im)
    if (h != 0) h_zero = false;
  if (!h_zero) {
    Complex lg(0);
    for (size_t mu = 0; mu < k.degree(); ++mu) {
      Real lr = log(abs(k.embed_real(*beta, static_cast<int>(mu) + 1, Real::working_prec())));
      lg += Complex{Real(0), Real(chi.h_im[mu]) * lr};
    }
    cinf = cinf * exp(lg);
  }

  LatticeFunction out;
  out.field = &k;
  out.supp = binv;
  out.per = per;
  bool trivial_mod = chi.is_trivial_modulus();
  for (const auto& rep : lattice_quotient_reps(binv, per)) {
    if (rep.is_zero()) {
      if (trivial_mod) out.table.emplace(rep, cinf);
      continue;
    }
    FieldElem rb = k.mul(rep, *beta);
    if (!trivial_mod && !(lattice_sum(k.principal_ideal(rb), chi.modulus) == o)) continue;
    Rat ph = trivial_mod ? Rat(0) : chi.finite_phase(rb);
    out.table.emplace(rep, cinf * unit_phase(-ph));
  }
  return out;
}

LatticeFunction twisted_function(const HeckeCharacter& chi, const GroupRingElement& gamma) {
  if (gamma.empty()) throw ValidationError("empty group ring element");
  std::vector<Complex> scalars;
  std::vector<LatticeFunction> funcs;
  for (const auto& t : gamma) {
    scalars.push_back(Real(t.scale) * unit_phase(t.phase));
    funcs.push_back(standard_function(chi, t.ideal));
  }
  if (funcs.size() == 1) {
    LatticeFunction out = funcs[0];
    for (auto& [key, v] : out.table) v = scalars[0] * v;
    return out;
  }
  return combine(scalars, funcs);
}

Complex gauss_constant(const HeckeCharacter& chi) {
  const NumberField& k = *chi.field;
  const QLattice& o = k.ring_of_integers();
  LatticeFunction phi = standard_function(chi, o);
  LatticeFunction phi_hat = fourier(phi);
  QLattice md = k.ideal_mul(chi.modulus, k.different());
  LatticeFunction ref = standard_function(chi.inverse(), md);
  Complex ratio(0);
  bool found = false;
  for (const auto& [y, v] : ref.table) {
    Complex num = phi_hat.eval(y);
    if (!found) {
      ratio = num / v;
      found = true;
    } else {
      Complex alt = num / v;
      Real diff = abs(alt - ratio);
      Real tol = Real::make();
      mpfr_set_ui_2exp(tol.raw(), 1, -(Real::working_prec() / 2), MPFR_RNDN);
      if (diff > tol * (abs(ratio) + Real(1)))
        throw NoNonzeroPoint("gauss constant depends on the base point");
    }
  }
  if (!found) throw NoNonzeroPoint();
  return ratio;
}

}  // namespace shintani
