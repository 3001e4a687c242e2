#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "shintani/errors.hpp"
#include "shintani/intmat.hpp"
#include "shintani/rational.hpp"
#include "shintani/real.hpp"

namespace shintani {

// Element of K in exact power-basis coordinates (1, theta, ..., theta^{n-1}).
struct FieldElem {
  RatVec c;

  FieldElem() = default;
  explicit FieldElem(RatVec coords) : c(std::move(coords)) {}

  bool operator==(const FieldElem& o) const { return c == o.c; }
  bool operator<(const FieldElem& o) const { return c < o.c; }  // lex, for map keys
  bool is_zero() const {
    for (const auto& x : c) if (x != 0) return false;
    return true;
  }
};

struct RatInterval {
  Rat lo, hi;
  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
};

// Full-rank lattice in K, stored as a canonical (Hermite-reduced) basis:
// rows are basis vectors in power-basis coordinates; the scaled integer
// matrix d*B is in row HNF with positive pivots, d minimal. Equality of
// lattices is equality of the stored matrices.
class QLattice {
 public:
  QLattice() = default;
  explicit QLattice(RatMat basis_rows);

  const RatMat& basis() const { return b_; }
  size_t dim() const { return b_.size(); }
  Rat det_abs() const;

  bool contains(const FieldElem& x) const;
  bool operator==(const QLattice& o) const { return b_ == o.b_; }
  bool operator!=(const QLattice& o) const { return b_ != o.b_; }
  bool operator<(const QLattice& o) const { return b_ < o.b_; }

  // coordinates of x with respect to this basis (exact)
  RatVec coords_of(const FieldElem& x) const;

 private:
  RatMat b_;
  mutable std::shared_ptr<const RatMat> binv_;  // lazily computed inverse
  const RatMat& basis_inverse() const;
};

QLattice lattice_sum(const QLattice& a, const QLattice& b);
QLattice lattice_intersect(const QLattice& a, const QLattice& b);
// index [a : b] for b subset of a; throws NotSublattice
Int lattice_index(const QLattice& a, const QLattice& b);
bool lattice_subset(const QLattice& sub, const QLattice& sup);
QLattice lattice_scale(const QLattice& a, const Rat& q);
// representatives of a/b, deterministic order; throws NotSublattice
std::vector<FieldElem> lattice_quotient_reps(const QLattice& a, const QLattice& b);
// canonical representative of x modulo the lattice m (x need not lie in any
// particular lattice); result has all m-coordinates in [0,1)
FieldElem lattice_reduce(const QLattice& m, const FieldElem& x);

struct UnitData {
  std::vector<FieldElem> totally_positive_generators;  // n-1 generators of E_K
  long unit_group_index = 0;                           // #(O_K^x / E_K)
};

// Totally real field K = Q[x]/(min_poly), embeddings ordered by increasing
// real root. Construction certifies irreducibility and total realness.
class NumberField {
 public:
  explicit NumberField(std::vector<Int> min_poly);

  size_t degree() const { return n_; }
  const std::vector<Int>& min_poly() const { return poly_; }
  Rat poly_disc() const { return disc_; }
  const RatMat& trace_form() const { return trace_form_; }

  FieldElem zero() const { return FieldElem(RatVec(n_, Rat(0))); }
  FieldElem one() const;
  FieldElem theta() const;
  FieldElem from_rat(const Rat& q) const;
  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem mul_rat(const FieldElem& a, const Rat& q) const;
  FieldElem inv(const FieldElem& a) const;
  FieldElem power(const FieldElem& a, long k) const;  // k may be negative

  // multiplication-by-x matrix: row i = coords of x * theta^i
  RatMat mult_matrix(const FieldElem& x) const;
  Rat trace(const FieldElem& x) const;
  Rat norm(const FieldElem& x) const;

  // certified enclosure of rho_mu(x), width <= 2^-bits; mu is 1-based
  RatInterval embed(const FieldElem& x, int mu, long bits) const;
  Real embed_real(const FieldElem& x, int mu, long bits) const;
  int embed_sign(const FieldElem& x, int mu) const;  // exact sign of rho_mu(x)
  bool totally_positive(const FieldElem& x) const;

  // dual basis under <x,y> = Tr(xy); throws LinearlyDependent
  std::vector<FieldElem> dual_basis(const std::vector<FieldElem>& a) const;

  QLattice standard_lattice() const;  // Z[theta]
  const QLattice& ring_of_integers() const;
  void set_ring_of_integers(QLattice o);  // for degree >= 3 configuration

  QLattice trace_dual(const QLattice& l) const;
  QLattice scale_lattice(const QLattice& l, const FieldElem& c) const;
  QLattice principal_ideal(const FieldElem& g) const;  // g * O_K
  QLattice ideal_inverse(const QLattice& ideal) const;
  QLattice ideal_mul(const QLattice& a, const QLattice& b) const;
  Rat ideal_norm(const QLattice& ideal) const;  // relative to O_K
  QLattice different() const;
  // rational primes p with nontrivial local component of the fractional ideal
  std::set<Int> ideal_prime_support(const QLattice& ideal) const;
  // search for a generator of a fractional ideal (class number 1 expected)
  std::optional<FieldElem> find_generator(const QLattice& ideal, long radius = 24) const;

  const UnitData& units() const;           // degree 2: computed; else must be set
  void set_units(UnitData u);
  bool has_units() const;

  struct PrincipalPrime {
    FieldElem generator;
    Int p;
  };
  std::vector<PrincipalPrime> find_principal_degree_one_primes(const std::set<Int>& avoid,
                                                               size_t count,
                                                               long max_radius = 64) const;

 private:
  size_t n_ = 0;
  std::vector<Int> poly_;        // monic: poly_[n] = 1
  RatVec poly_rat_;              // same, as rationals
  std::vector<RatVec> theta_pow_;  // theta^k reduced, k = 0..2n-2
  RatMat trace_form_;            // Tr(theta^i theta^j)
  Rat disc_;
  std::vector<RatInterval> isolation_;  // sorted increasing
  mutable std::optional<QLattice> ring_;
  mutable std::optional<UnitData> units_;
  struct RefineCache;
  std::unique_ptr<RefineCache> cache_;

  void isolate_roots();
  void refine_root(int idx, const Rat& target_width) const;
  RatInterval root_enclosure(int idx, const Rat& target_width) const;
  friend class NumberFieldTestAccess;

 public:
  ~NumberField();
  NumberField(NumberField&&) noexcept;
  NumberField& operator=(NumberField&&) noexcept;
  NumberField(const NumberField&) = delete;
  NumberField& operator=(const NumberField&) = delete;
};

UnitData quadratic_units(const NumberField& k);
// fundamental unit > 1 of the maximal order (degree 2); norm may be -1
FieldElem quadratic_fundamental_unit(const NumberField& k);

}  // namespace shintani
