#pragma once

#include <vector>

#include "shintani/rational.hpp"

namespace shintani {

using IntMat = std::vector<std::vector<Int>>;

// Row-style Hermite normal form: echelon, positive pivots, entries above a
// pivot reduced into [0, pivot). Zero rows are dropped.
IntMat hnf(IntMat a);

// As hnf(), additionally returns a unimodular U with U*A = (H padded with
// zero rows); rows of U opposite the zero rows span the left kernel of A.
struct HnfResult {
  IntMat h;        // nonzero rows only
  IntMat u;        // full m x m transform
  size_t rank = 0;
};
HnfResult hnf_with_transform(IntMat a);

// Smith form of a square nonsingular matrix: U*A*V = diag(d), d_i > 0,
// d_i | d_{i+1}. Returns the diagonal and V^{-1} (enough to enumerate
// Z^n / rowspace(A): representatives are (r_1..r_n)*V^{-1}, 0 <= r_i < d_i).
struct SmithResult {
  std::vector<Int> d;
  IntMat vinv;
};
SmithResult smith_vinv(IntMat a);

// Exact rational linear algebra (dense, small sizes).
Rat rat_det(RatMat a);
RatMat rat_inverse(const RatMat& a);                    // throws if singular
RatVec rat_solve(const RatMat& a, const RatVec& b);     // a * x = b, throws if singular
size_t rat_rank(RatMat a);
RatMat rat_matmul(const RatMat& a, const RatMat& b);
RatVec rat_vecmat(const RatVec& v, const RatMat& m);    // row vector * matrix

}  // namespace shintani
