#pragma once

#include <map>

#include "shintani/numberfield.hpp"

namespace shintani {

// Ordered tuple of nonzero field elements; order is significant as a symbol.
struct Cone {
  std::vector<FieldElem> gens;

  Cone() = default;
  explicit Cone(std::vector<FieldElem> g) : gens(std::move(g)) {}
  size_t dim() const { return gens.size(); }
  bool operator<(const Cone& o) const;
  bool operator==(const Cone& o) const { return gens == o.gens; }
};

// Formal integer combination of cones; zero coefficients are never stored.
class Fan {
 public:
  Fan() = default;
  static Fan single(Cone c, Int coeff = Int(1));

  void add(const Cone& c, const Int& coeff);
  const std::map<Cone, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  friend Fan operator+(const Fan& a, const Fan& b);
  friend Fan operator-(const Fan& a, const Fan& b);
  friend Fan operator*(const Int& k, const Fan& a);
  // concatenation product Lambda(a...) (x) Lambda(b...) = Lambda(a...,b...)
  friend Fan tensor(const Fan& a, const Fan& b);
  bool operator==(const Fan& o) const { return terms_ == o.terms_; }

 private:
  std::map<Cone, Int> terms_;
};

// the generator of C_0 (empty cone), identified with 1 in Z
inline Fan unit_fan() { return Fan::single(Cone(std::vector<FieldElem>{})); }

// boundary homomorphism: sum_i (-1)^{i+1} of the i-th face
Fan boundary(const Fan& f);

// group action by a nonzero element: generators multiplied coordinatewise
Fan act(const NumberField& k, const FieldElem& eps, const Fan& f);

bool is_simple(const Cone& c);

// orientation r(u_1..u_n): sign of det of the coordinate matrix. With
// embeddings ordered by increasing root this equals the sign of
// det(rho_mu(u_i)), since the Vandermonde of the ordered roots is positive.
int orientation(const Cone& c);

// duality map: simple cones to the trace-dual basis cone, others to 0
Fan dual_fan(const NumberField& k, const Fan& f);

// each generator replaced by its lex-positive representative
Fan positivize(const Fan& f);
FieldElem lex_positivize(const FieldElem& v);

// signed characteristic function evaluated at v
Int characteristic_value(const Fan& f, const FieldElem& v);

}  // namespace shintani
