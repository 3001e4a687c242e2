#include "shintani/intmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace shintani {

namespace {

void row_axpy(std::vector<Int>& dst, const std::vector<Int>& src, const Int& q) {
  for (size_t j = 0; j < dst.size(); ++j) dst[j] -= q * src[j];
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

}  // namespace

static void hnf_inplace(IntMat& a, IntMat* u) {
  size_t m = a.size();
  if (m == 0) return;
  size_t n = a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < n && r < m; ++c) {
    // clear column c below row r down to one nonzero entry
    while (true) {
      size_t best = m;
      for (size_t i = r; i < m; ++i)
        if (a[i][c] != 0 && (best == m || abs(a[i][c]) < abs(a[best][c]))) best = i;
      if (best == m) break;  // column all zero
      std::swap(a[r], a[best]);
      if (u) std::swap((*u)[r], (*u)[best]);
      bool cleared = true;
      for (size_t i = r + 1; i < m; ++i) {
        if (a[i][c] == 0) continue;
        Int q = a[i][c] / a[r][c];
        row_axpy(a[i], a[r], q);
        if (u) row_axpy((*u)[i], (*u)[r], q);
        if (a[i][c] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0) {
      for (auto& x : a[r]) x = -x;
      if (u) for (auto& x : (*u)[r]) x = -x;
    }
    for (size_t i = 0; i < r; ++i) {
      Int q = floor_div(a[i][c], a[r][c]);
      if (q != 0) {
        row_axpy(a[i], a[r], q);
        if (u) row_axpy((*u)[i], (*u)[r], q);
      }
    }
    ++r;
  }
}

IntMat hnf(IntMat a) {
  hnf_inplace(a, nullptr);
  IntMat out;
  for (auto& row : a) {
    bool nz = false;
    for (auto& x : row) if (x != 0) { nz = true; break; }
    if (nz) out.push_back(std::move(row));
  }
  return out;
}

HnfResult hnf_with_transform(IntMat a) {
  size_t m = a.size();
  IntMat u(m, std::vector<Int>(m, 0));
  for (size_t i = 0; i < m; ++i) u[i][i] = 1;
  hnf_inplace(a, &u);
  HnfResult res;
  res.u = std::move(u);
  for (auto& row : a) {
    bool nz = false;
    for (auto& x : row) if (x != 0) { nz = true; break; }
    if (nz) res.h.push_back(std::move(row));
  }
  res.rank = res.h.size();
  return res;
}

SmithResult smith_vinv(IntMat a) {
  size_t n = a.size();
  if (n == 0 || a[0].size() != n) throw std::invalid_argument("smith: square matrix required");
  IntMat vinv(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; ++i) vinv[i][i] = 1;

  auto col_axpy = [&](size_t dst, size_t src, const Int& q) {
    for (size_t i = 0; i < n; ++i) a[i][dst] -= q * a[i][src];
    // V := V * E  (E subtracts q * col src from col dst), so
    // V^{-1} := E^{-1} * V^{-1} adds q * row dst to row src
    for (size_t j = 0; j < n; ++j) vinv[src][j] += q * vinv[dst][j];
  };
  auto col_swap = [&](size_t c1, size_t c2) {
    for (size_t i = 0; i < n; ++i) std::swap(a[i][c1], a[i][c2]);
    std::swap(vinv[c1], vinv[c2]);
  };
  auto col_neg = [&](size_t c) {
    for (size_t i = 0; i < n; ++i) a[i][c] = -a[i][c];
    for (size_t j = 0; j < n; ++j) vinv[c][j] = -vinv[c][j];
  };

  for (size_t k = 0; k < n; ++k) {
    while (true) {
      // find pivot: smallest |nonzero| in the (k..) submatrix
      size_t pi = n, pj = n;
      for (size_t i = k; i < n; ++i)
        for (size_t j = k; j < n; ++j)
          if (a[i][j] != 0 && (pi == n || abs(a[i][j]) < abs(a[pi][pj]))) { pi = i; pj = j; }
      if (pi == n) throw std::invalid_argument("smith: singular matrix");
      std::swap(a[k], a[pi]);
      if (pj != k) col_swap(k, pj);
      if (a[k][k] < 0) col_neg(k);
      bool clean = true;
      for (size_t i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          Int q = a[i][k] / a[k][k];
          row_axpy(a[i], a[k], q);
          if (a[i][k] != 0) clean = false;
        }
      for (size_t j = k + 1; j < n; ++j)
        if (a[k][j] != 0) {
          Int q = a[k][j] / a[k][k];
          col_axpy(j, k, q);
          if (a[k][j] != 0) clean = false;
        }
      if (!clean) continue;
      // enforce divisibility d_k | a[i][j]
      bool divides = true;
      for (size_t i = k + 1; i < n && divides; ++i)
        for (size_t j = k + 1; j < n && divides; ++j)
          if (a[i][j] % a[k][k] != 0) {
            // add row i to row k and restart the reduction
            for (size_t c = 0; c < n; ++c) a[k][c] += a[i][c];
            divides = false;
          }
      if (divides) break;
    }
  }
  SmithResult res;
  res.d.resize(n);
  for (size_t i = 0; i < n; ++i) res.d[i] = a[i][i];
  res.vinv = std::move(vinv);
  return res;
}

Rat rat_det(RatMat a) {
  size_t n = a.size();
  Rat det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return Rat(0);
    if (p != c) { std::swap(a[p], a[c]); det = -det; }
    det *= a[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[c][c];
      for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

RatMat rat_inverse(const RatMat& a) {
  size_t n = a.size();
  RatMat w(n, std::vector<Rat>(2 * n, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) w[i][j] = a[i][j];
    w[i][n + i] = 1;
  }
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && w[p][c] == 0) ++p;
    if (p == n) throw std::invalid_argument("rat_inverse: singular");
    std::swap(w[p], w[c]);
    Rat piv = w[c][c];
    for (size_t j = 0; j < 2 * n; ++j) w[c][j] /= piv;
    for (size_t i = 0; i < n; ++i) {
      if (i == c || w[i][c] == 0) continue;
      Rat f = w[i][c];
      for (size_t j = 0; j < 2 * n; ++j) w[i][j] -= f * w[c][j];
    }
  }
  RatMat inv(n, std::vector<Rat>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = w[i][n + j];
  return inv;
}

RatVec rat_solve(const RatMat& a, const RatVec& b) {
  size_t n = a.size();
  RatMat w(n, std::vector<Rat>(n + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) w[i][j] = a[i][j];
    w[i][n] = b[i];
  }
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && w[p][c] == 0) ++p;
    if (p == n) throw std::invalid_argument("rat_solve: singular");
    std::swap(w[p], w[c]);
    Rat piv = w[c][c];
    for (size_t j = c; j <= n; ++j) w[c][j] /= piv;
    for (size_t i = 0; i < n; ++i) {
      if (i == c || w[i][c] == 0) continue;
      Rat f = w[i][c];
      for (size_t j = c; j <= n; ++j) w[i][j] -= f * w[c][j];
    }
  }
  RatVec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = w[i][n];
  return x;
}

size_t rat_rank(RatMat a) {
  size_t m = a.size();
  if (m == 0) return 0;
  size_t n = a[0].size(), r = 0;
  for (size_t c = 0; c < n && r < m; ++c) {
    size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    for (size_t i = r + 1; i < m; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[r][c];
      for (size_t j = c; j < n; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

RatMat rat_matmul(const RatMat& a, const RatMat& b) {
  size_t m = a.size(), k = b.size(), n = b[0].size();
  RatMat c(m, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < m; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

RatVec rat_vecmat(const RatVec& v, const RatMat& m) {
  size_t k = m.size(), n = m[0].size();
  RatVec out(n, Rat(0));
  for (size_t l = 0; l < k; ++l) {
    if (v[l] == 0) continue;
    for (size_t j = 0; j < n; ++j) out[j] += v[l] * m[l][j];
  }
  return out;
}

}  // namespace shintani
