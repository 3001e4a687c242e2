#pragma once

#include "shintani/complexnum.hpp"
#include "shintani/fan.hpp"

namespace shintani {

// Schwartz-Bruhat function on K(A_f) of lattice-coset type: supported on
// supp, periodic modulo per, values given on a transversal of supp/per.
// Only nonzero values are stored; keys are canonical representatives
// (lattice_reduce against per). The field reference must outlive the value.
struct LatticeFunction {
  const NumberField* field = nullptr;
  QLattice supp;  // L
  QLattice per;   // M, a sublattice of L
  std::map<FieldElem, Complex> table;
  // optional decomposition into atomic summands (coefficient, summand),
  // kept by combine/twisted_function: each summand has coarser periodicity
  // than the merged table, which keeps rational-exponential forms small
  std::vector<std::pair<Complex, LatticeFunction>> parts;

  Complex eval(const FieldElem& x) const;
  bool effectively_zero(const Complex& v) const;
};

LatticeFunction make_lattice_function(const NumberField& k, QLattice supp, QLattice per,
                                      const std::map<FieldElem, Complex>& values);

// indicator of a lattice
LatticeFunction indicator(const NumberField& k, const QLattice& l);

LatticeFunction combine(const std::vector<Complex>& scalars,
                        const std::vector<LatticeFunction>& funcs);
// x -> phi(beta x)
LatticeFunction scale_argument(const LatticeFunction& phi, const FieldElem& beta);

// adelic Fourier transform with the rho-compatible measure:
// phi_hat(y) = covol(per)^{-1} sum_{x in supp/per} phi(x) e(Tr(x y)),
// supported on dual(per), periodic modulo dual(supp)
LatticeFunction fourier(const LatticeFunction& phi);

// covolume of a lattice under rho: |det basis| * sqrt(disc of the power basis)
Real covolume(const NumberField& k, const QLattice& l);

bool p1_check(const LatticeFunction& phi, const Cone& cone);
bool p2_check(const LatticeFunction& phi, const Cone& cone);
bool regular(const LatticeFunction& phi, const Fan& fan);

// finite-order narrow ray class character: finite table stored as exact
// phases (value at x is e(phase)), sign pattern sigma, imaginary part h
// (plumbed through, not exercised by the verified surface).
struct HeckeCharacter {
  const NumberField* field = nullptr;
  QLattice modulus;                // integral ideal m
  std::map<FieldElem, Rat> table;  // coprime residues mod m -> phase
  std::vector<int> sigma;
  std::vector<Rat> h_im;           // h_mu = i * h_im[mu]

  bool is_trivial_modulus() const;
  // phase of the finite table at x (x coprime to m)
  Rat finite_phase(const FieldElem& x) const;
  // chi_infty(x) for finite order: product of sign(rho_mu x)^{sigma(mu)}
  int infinity_sign(const FieldElem& x) const;
  // chi_I on a principal ideal given by a generator coprime to m
  Complex ideal_value(const FieldElem& generator) const;
  HeckeCharacter inverse() const;
};

HeckeCharacter make_hecke_character(const NumberField& k, QLattice modulus,
                                    std::map<FieldElem, Rat> phases, std::vector<int> sigma,
                                    std::vector<Rat> h_im = {});
HeckeCharacter trivial_character(const NumberField& k);

// element of C[I_K]: sum of scale * e(phase) * [ideal]; ideals distinct
struct GroupRingTerm {
  Rat scale;
  Rat phase;
  QLattice ideal;
};
using GroupRingElement = std::vector<GroupRingTerm>;

GroupRingElement groupring_normalize(GroupRingElement z);
GroupRingElement groupring_mul(const NumberField& k, const GroupRingElement& a,
                               const GroupRingElement& b);
// gamma_hat = sum n_j N(b_j) b_j^{-1}
GroupRingElement groupring_dual(const NumberField& k, const GroupRingElement& z);
GroupRingElement groupring_scale_ideal(const NumberField& k, const GroupRingElement& z,
                                       const QLattice& ideal);

// standard function Phi_{chi,b}; b must be a principal fractional ideal
LatticeFunction standard_function(const HeckeCharacter& chi, const QLattice& b);
LatticeFunction twisted_function(const HeckeCharacter& chi, const GroupRingElement& gamma);

// k(chi), computed as fourier(Phi_{chi,O})(y) / Phi_{chi^{-1},md}(y)
Complex gauss_constant(const HeckeCharacter& chi);

}  // namespace shintani
