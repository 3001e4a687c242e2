#include "shintani/numberfield.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <map>

namespace shintani {

namespace {

// ---- rational polynomial helpers (dense, low degree) ----

RatVec poly_trim(RatVec p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int poly_deg(const RatVec& p) { return static_cast<int>(p.size()) - 1; }

Rat poly_eval(const RatVec& p, const Rat& x) {
  Rat r(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

RatVec poly_deriv(const RatVec& p) {
  RatVec d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(Rat(Int(i)) * p[i]);
  return d;
}

RatVec poly_rem(RatVec a, const RatVec& b) {
  a = poly_trim(std::move(a));
  int db = poly_deg(b);
  while (poly_deg(a) >= db && !a.empty()) {
    Rat f = a.back() / b.back();
    int shift = poly_deg(a) - db;
    for (int i = 0; i <= db; ++i) a[i + shift] -= f * b[i];
    a = poly_trim(std::move(a));
  }
  return a;
}

std::vector<RatVec> sturm_chain(const RatVec& f) {
  std::vector<RatVec> chain;
  chain.push_back(poly_trim(f));
  chain.push_back(poly_trim(poly_deriv(f)));
  while (!chain.back().empty() && poly_deg(chain.back()) > 0) {
    RatVec r = poly_rem(chain[chain.size() - 2], chain.back());
    for (auto& x : r) x = -x;
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_of(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

int sturm_variations_at(const std::vector<RatVec>& chain, const Rat& x) {
  int var = 0, prev = 0;
  for (const auto& p : chain) {
    int s = sign_of(poly_eval(p, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int sturm_variations_at_inf(const std::vector<RatVec>& chain, int dir) {
  int var = 0, prev = 0;
  for (const auto& p : chain) {
    if (p.empty()) continue;
    int s = sign_of(p.back());
    if (dir < 0 && poly_deg(p) % 2 == 1) s = -s;
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

// ---- polynomials over F_p (machine word p), for irreducibility sieving ----

using PolyP = std::vector<long>;

long mod_inv(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    long q = r / nr;
    t -= q * nt; std::swap(t, nt);
    r -= q * nr; std::swap(r, nr);
  }
  return ((t % p) + p) % p;
}

PolyP polyp_trim(PolyP a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

PolyP polyp_mulmod(const PolyP& a, const PolyP& b, const PolyP& f, long p) {
  if (a.empty() || b.empty()) return {};
  PolyP c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + static_cast<__int128>(a[i]) * b[j]) % p;
  // reduce mod f (monic)
  int df = static_cast<int>(f.size()) - 1;
  for (int i = static_cast<int>(c.size()) - 1; i >= df; --i) {
    long q = c[i];
    if (q == 0) continue;
    for (int j = 0; j <= df; ++j)
      c[i - df + j] = ((c[i - df + j] - static_cast<__int128>(q) * f[j]) % p + p) % p;
  }
  c.resize(df);
  return polyp_trim(std::move(c));
}

PolyP polyp_gcd(PolyP a, PolyP b, long p) {
  a = polyp_trim(std::move(a));
  b = polyp_trim(std::move(b));
  while (!b.empty()) {
    // a mod b
    long inv = mod_inv(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
      long q = static_cast<long>(static_cast<__int128>(a.back()) * inv % p);
      size_t shift = a.size() - b.size();
      for (size_t j = 0; j < b.size(); ++j)
        a[shift + j] = ((a[shift + j] - static_cast<__int128>(q) * b[j]) % p + p) % p;
      a = polyp_trim(std::move(a));
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    long inv = mod_inv(a.back(), p);
    for (auto& x : a) x = static_cast<long>(static_cast<__int128>(x) * inv % p);
  }
  return a;
}

PolyP polyp_xpow_pk(const PolyP& f, long p, int k) {
  // x^{p^k} mod f: raise to the p-th power k times by square-and-multiply
  PolyP t = {0, 1};  // x
  for (int i = 0; i < k; ++i) {
    PolyP r = {1};
    PolyP s = t;
    long e = p;
    while (e > 0) {
      if (e & 1) r = polyp_mulmod(r, s, f, p);
      s = polyp_mulmod(s, s, f, p);
      e >>= 1;
    }
    t = std::move(r);
  }
  return t;
}

// multiset of irreducible factor degrees of a squarefree monic f mod p
std::vector<int> factor_degrees_mod_p(PolyP f, long p) {
  std::vector<int> degs;
  int n = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= n / 2; ++d) {
    if (static_cast<int>(f.size()) - 1 < 2 * d) break;
    PolyP xpd = polyp_xpow_pk(f, p, d);
    // gcd(x^{p^d} - x, f)
    PolyP g = xpd;
    if (g.size() < 2) g.resize(2, 0);
    g[1] = ((g[1] - 1) % p + p) % p;
    g = polyp_trim(std::move(g));
    PolyP h = polyp_gcd(g, f, p);
    int dh = static_cast<int>(h.size()) - 1;
    if (dh > 0) {
      for (int i = 0; i < dh / d; ++i) degs.push_back(d);
      // f /= h
      PolyP q(f.size() - h.size() + 1, 0);
      PolyP rem = f;
      long inv = mod_inv(h.back(), p);
      for (int i = static_cast<int>(rem.size()) - 1; i >= static_cast<int>(h.size()) - 1; --i) {
        long c = static_cast<long>(static_cast<__int128>(rem[i]) * inv % p);
        q[i - (h.size() - 1)] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < h.size(); ++j)
          rem[i - (h.size() - 1) + j] =
              ((rem[i - (h.size() - 1) + j] - static_cast<__int128>(c) * h[j]) % p + p) % p;
      }
      f = polyp_trim(std::move(q));
    }
  }
  if (f.size() > 1) degs.push_back(static_cast<int>(f.size()) - 1);
  std::sort(degs.begin(), degs.end());
  return degs;
}

// all achievable proper nonempty subset sums of a degree multiset
std::set<int> proper_subset_sums(const std::vector<int>& degs, int n) {
  std::set<int> sums = {0};
  for (int d : degs) {
    std::set<int> next = sums;
    for (int s : sums) next.insert(s + d);
    sums = std::move(next);
  }
  std::set<int> out;
  for (int s : sums)
    if (s > 0 && s < n) out.insert(s);
  return out;
}

void check_irreducible(const std::vector<Int>& poly) {
  int n = static_cast<int>(poly.size()) - 1;
  if (n == 1) return;
  // rational root test (complete for n <= 3 after no-linear-factor)
  if (poly[0] == 0) throw NotIrreducible("polynomial divisible by x");
  Int a0 = abs(poly[0]);
  for (Int d = 1; d * d <= a0; ++d) {
    if (a0 % d != 0) continue;
    for (const Int& cand : {d, a0 / d}) {
      for (int sgn : {1, -1}) {
        Int x = sgn * cand;
        Int v = 0;
        for (int i = n; i >= 0; --i) v = v * x + poly[i];
        if (v == 0) throw NotIrreducible("rational root " + x.str());
      }
    }
  }
  if (n <= 3) return;
  // degree-pattern sieve mod small primes
  std::set<int> possible;
  bool first = true;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    PolyP fp(n + 1);
    for (int i = 0; i <= n; ++i)
      fp[i] = static_cast<long>(((poly[i] % p) + p) % p);
    if (fp[n] == 0) continue;  // should not happen, monic
    // require squarefree mod p
    PolyP dfp;
    for (int i = 1; i <= n; ++i) dfp.push_back(static_cast<long>((static_cast<__int128>(i) * fp[i]) % p));
    dfp = polyp_trim(std::move(dfp));
    if (polyp_gcd(fp, dfp, p).size() > 1) continue;
    auto degs = factor_degrees_mod_p(fp, p);
    auto sums = proper_subset_sums(degs, n);
    if (sums.empty()) return;  // irreducible mod p
    if (first) {
      possible = sums;
      first = false;
    } else {
      std::set<int> inter;
      std::set_intersection(possible.begin(), possible.end(), sums.begin(), sums.end(),
                            std::inserter(inter, inter.begin()));
      possible = std::move(inter);
    }
    if (!first && possible.empty()) return;
  }
  throw NotIrreducible("could not certify irreducibility at degree " + std::to_string(n));
}

Rat pow2_rat(long e) {
  if (e >= 0) return Rat(Int(1) << e);
  return Rat(1, Int(1) << (-e));
}

}  // namespace

// ---- NumberField ----

struct NumberField::RefineCache {
  std::mutex m;
  std::vector<RatInterval> enclosure;
};

NumberField::~NumberField() = default;
NumberField::NumberField(NumberField&&) noexcept = default;
NumberField& NumberField::operator=(NumberField&&) noexcept = default;

NumberField::NumberField(std::vector<Int> min_poly) : poly_(std::move(min_poly)) {
  if (poly_.size() < 2) throw ValidationError("min_poly must have degree >= 1");
  if (poly_.back() != 1) throw ValidationError("min_poly must be monic");
  n_ = poly_.size() - 1;
  check_irreducible(poly_);
  poly_rat_.resize(n_ + 1);
  for (size_t i = 0; i <= n_; ++i) poly_rat_[i] = Rat(poly_[i]);
  isolate_roots();

  // reduction table theta^k for k = 0..2n-2
  theta_pow_.assign(2 * n_ - 1, RatVec(n_, Rat(0)));
  for (size_t k = 0; k < n_; ++k) theta_pow_[k][k] = 1;
  for (size_t k = n_; k + 1 <= 2 * n_ - 1; ++k) {
    // theta^k = theta * theta^{k-1}, reduced
    RatVec prev = theta_pow_[k - 1];
    RatVec cur(n_, Rat(0));
    Rat top = prev[n_ - 1];
    for (size_t i = n_ - 1; i > 0; --i) cur[i] = prev[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (size_t i = 0; i < n_; ++i) cur[i] -= top * poly_rat_[i];
    theta_pow_[k] = std::move(cur);
  }

  // power sums p_k = Tr(theta^k) via Newton's identities
  RatVec psum(2 * n_ - 1, Rat(0));
  psum[0] = Rat(Int(n_));
  for (size_t k = 1; k <= 2 * n_ - 2; ++k) {
    Rat s(0);
    for (size_t i = 1; i < k && i <= n_; ++i) s += poly_rat_[n_ - i] * psum[k - i];
    if (k <= n_)
      s += Rat(Int(k)) * poly_rat_[n_ - k];
    psum[k] = -s;
  }
  trace_form_.assign(n_, RatVec(n_, Rat(0)));
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j) trace_form_[i][j] = psum[i + j];
  disc_ = rat_det(trace_form_);

  cache_ = std::make_unique<RefineCache>();
  cache_->enclosure = isolation_;
}

void NumberField::isolate_roots() {
  if (n_ == 1) {
    Rat r = -poly_rat_[0];
    isolation_ = {RatInterval{r, r}};
    return;
  }
  auto chain = sturm_chain(poly_rat_);
  int total = sturm_variations_at_inf(chain, -1) - sturm_variations_at_inf(chain, +1);
  if (total != static_cast<int>(n_)) throw NotTotallyReal("real root count " + std::to_string(total));
  // Cauchy bound
  Rat bound(1);
  for (size_t i = 0; i < n_; ++i) bound = std::max(bound, abs(Rat(poly_[i])));
  bound += 1;
  struct Seg { Rat lo, hi; int cnt; };
  std::vector<Seg> work = {{-bound, bound, total}};
  std::vector<RatInterval> found;
  auto count_in = [&](const Rat& a, const Rat& b) {
    return sturm_variations_at(chain, a) - sturm_variations_at(chain, b);
  };
  while (!work.empty()) {
    Seg s = work.back();
    work.pop_back();
    if (s.cnt == 0) continue;
    if (s.cnt == 1 && sign_of(poly_eval(poly_rat_, s.lo)) * sign_of(poly_eval(poly_rat_, s.hi)) < 0) {
      found.push_back({s.lo, s.hi});
      continue;
    }
    Rat mid = (s.lo + s.hi) / 2;
    // irreducible with degree >= 2: no rational roots, so f(mid) != 0
    int left = count_in(s.lo, mid);
    work.push_back({s.lo, mid, left});
    work.push_back({mid, s.hi, s.cnt - left});
  }
  std::sort(found.begin(), found.end(), [](const RatInterval& a, const RatInterval& b) { return a.lo < b.lo; });
  isolation_ = std::move(found);
}

namespace {
// nearest rational with denominator 2^k
Rat round_dyadic(const Rat& x, long k) {
  Int scale = Int(1) << k;
  Rat y = x * Rat(scale);
  Int n = rat_num(y), d = rat_den(y);
  Int q = (2 * n + d) / (2 * d);       // round-half-up for positive
  if (n < 0) q = -((2 * (-n) + d) / (2 * d));
  return Rat(q, scale);
}

long width_exponent(const Rat& w) {
  // smallest k with w >= 2^-k (roughly -log2 w)
  if (w >= 1) return 0;
  long k = 0;
  Rat t = w;
  while (t < 1 && k < (1L << 24)) { t *= 2; ++k; }
  return k;
}
}  // namespace

void NumberField::refine_root(int idx, const Rat& target) const {
  RatInterval& iv = cache_->enclosure[idx];
  if (iv.width() <= target) return;
  if (n_ == 1) return;  // exact already
  RatVec dpoly = poly_deriv(poly_rat_);
  int slo = sign_of(poly_eval(poly_rat_, iv.lo));
  long goal_k = width_exponent(target) + 2;
  while (iv.width() > target) {
    // Newton step from the midpoint, rounded to a dyadic with about twice
    // the current accuracy; certified by sign checks, bisection fallback.
    Rat m = iv.mid();
    Rat fm = poly_eval(poly_rat_, m);
    if (fm == 0) { iv = {m, m}; return; }
    bool stepped = false;
    long cur_k = width_exponent(iv.width());
    if (cur_k >= 8) {
      Rat dm = poly_eval(dpoly, m);
      if (dm != 0) {
        long k = std::min(2 * cur_k + 8, goal_k + 8);
        Rat x = round_dyadic(m - fm / dm, k);
        Rat w = Rat(1, Int(1) << std::min(2 * cur_k - 4, goal_k + 4));
        Rat lo = std::max(iv.lo, x - w), hi = std::min(iv.hi, x + w);
        if (lo < hi && hi - lo < iv.width() / 2) {
          int sl = sign_of(poly_eval(poly_rat_, lo));
          int sh = sign_of(poly_eval(poly_rat_, hi));
          if (sl == 0) { iv = {lo, lo}; return; }
          if (sh == 0) { iv = {hi, hi}; return; }
          if (sl != sh) {
            iv = {lo, hi};
            slo = sl;
            stepped = true;
          }
        }
      }
    }
    if (!stepped) {
      int sm = sign_of(fm);
      if (sm == slo) iv.lo = m;
      else iv.hi = m;
    }
  }
}

RatInterval NumberField::root_enclosure(int idx, const Rat& target) const {
  std::lock_guard<std::mutex> lock(cache_->m);
  refine_root(idx, target);
  return cache_->enclosure[idx];
}

FieldElem NumberField::one() const {
  RatVec v(n_, Rat(0));
  v[0] = 1;
  return FieldElem(std::move(v));
}

FieldElem NumberField::theta() const {
  RatVec v(n_, Rat(0));
  if (n_ == 1) v[0] = -poly_rat_[0];
  else v[1] = 1;
  return FieldElem(std::move(v));
}

FieldElem NumberField::from_rat(const Rat& q) const {
  RatVec v(n_, Rat(0));
  v[0] = q;
  return FieldElem(std::move(v));
}

FieldElem NumberField::add(const FieldElem& a, const FieldElem& b) const {
  RatVec v(n_);
  for (size_t i = 0; i < n_; ++i) v[i] = a.c[i] + b.c[i];
  return FieldElem(std::move(v));
}

FieldElem NumberField::sub(const FieldElem& a, const FieldElem& b) const {
  RatVec v(n_);
  for (size_t i = 0; i < n_; ++i) v[i] = a.c[i] - b.c[i];
  return FieldElem(std::move(v));
}

FieldElem NumberField::neg(const FieldElem& a) const {
  RatVec v(n_);
  for (size_t i = 0; i < n_; ++i) v[i] = -a.c[i];
  return FieldElem(std::move(v));
}

FieldElem NumberField::mul_rat(const FieldElem& a, const Rat& q) const {
  RatVec v(n_);
  for (size_t i = 0; i < n_; ++i) v[i] = a.c[i] * q;
  return FieldElem(std::move(v));
}

FieldElem NumberField::mul(const FieldElem& a, const FieldElem& b) const {
  RatVec v(n_, Rat(0));
  for (size_t i = 0; i < n_; ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < n_; ++j) {
      if (b.c[j] == 0) continue;
      Rat f = a.c[i] * b.c[j];
      const RatVec& pw = theta_pow_[i + j];
      for (size_t k = 0; k < n_; ++k) v[k] += f * pw[k];
    }
  }
  return FieldElem(std::move(v));
}

RatMat NumberField::mult_matrix(const FieldElem& x) const {
  RatMat m(n_, RatVec(n_, Rat(0)));
  FieldElem cur = x;
  for (size_t i = 0; i < n_; ++i) {
    m[i] = cur.c;
    if (i + 1 < n_) {
      // multiply by theta
      RatVec nxt(n_, Rat(0));
      Rat top = cur.c[n_ - 1];
      for (size_t k = n_ - 1; k > 0; --k) nxt[k] = cur.c[k - 1];
      if (top != 0)
        for (size_t k = 0; k < n_; ++k) nxt[k] -= top * poly_rat_[k];
      cur = FieldElem(std::move(nxt));
    }
  }
  return m;
}

FieldElem NumberField::inv(const FieldElem& a) const {
  if (a.is_zero()) throw ValidationError("inverse of zero");
  RatMat m = mult_matrix(a);
  // solve y * M = e_0, i.e. M^T y^T = e_0
  RatMat mt(n_, RatVec(n_));
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j) mt[i][j] = m[j][i];
  RatVec e0(n_, Rat(0));
  e0[0] = 1;
  return FieldElem(rat_solve(mt, e0));
}

FieldElem NumberField::power(const FieldElem& a, long k) const {
  FieldElem base = k < 0 ? inv(a) : a;
  unsigned long e = k < 0 ? -static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
  FieldElem r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Rat NumberField::trace(const FieldElem& x) const {
  // Tr(x) = sum_j x_j * Tr(theta^j)
  Rat t(0);
  for (size_t j = 0; j < n_; ++j)
    if (x.c[j] != 0) t += x.c[j] * trace_form_[0][j];
  return t;
}

Rat NumberField::norm(const FieldElem& x) const { return rat_det(mult_matrix(x)); }

RatInterval NumberField::embed(const FieldElem& x, int mu, long bits) const {
  if (mu < 1 || mu > static_cast<int>(n_)) throw ValidationError("embedding index out of range");
  Rat target = pow2_rat(-bits);
  if (n_ == 1) {
    Rat v = x.c[0];
    return {v, v};
  }
  // bound |x'(theta)| on the isolation interval, refine theta accordingly
  Rat m;
  {
    const RatInterval& iso = isolation_[mu - 1];
    m = std::max(abs(iso.lo), abs(iso.hi)) + 1;
  }
  Rat deriv_bound(0), mpow(1);
  for (size_t i = 1; i < n_; ++i) {
    deriv_bound += Rat(Int(i)) * abs(x.c[i]) * mpow;
    mpow *= m;
  }
  if (deriv_bound < 1) deriv_bound = 1;
  Rat th_target = target / (2 * deriv_bound);
  for (int attempt = 0; attempt < 64; ++attempt) {
    RatInterval th = root_enclosure(mu - 1, th_target);
    // interval Horner
    Rat lo(0), hi(0);
    for (size_t i = n_; i-- > 0;) {
      Rat a = lo * th.lo, b = lo * th.hi, c = hi * th.lo, d = hi * th.hi;
      Rat nlo = std::min(std::min(a, b), std::min(c, d));
      Rat nhi = std::max(std::max(a, b), std::max(c, d));
      lo = nlo + x.c[i];
      hi = nhi + x.c[i];
    }
    if (hi - lo <= target) return {lo, hi};
    th_target /= 16;
  }
  throw ValidationError("embedding refinement failed to converge");
}

Real NumberField::embed_real(const FieldElem& x, int mu, long bits) const {
  RatInterval iv = embed(x, mu, bits + 2);
  return Real(iv.mid());
}

int NumberField::embed_sign(const FieldElem& x, int mu) const {
  if (x.is_zero()) return 0;
  if (n_ == 1) return sign_of(x.c[0]);
  // widths shrink until the sign is determined; x != 0 guarantees termination
  for (long bits = 16;; bits *= 2) {
    RatInterval iv = embed(x, mu, bits);
    if (iv.lo > 0) return 1;
    if (iv.hi < 0) return -1;
    if (bits > 1 << 20) throw ValidationError("sign determination stuck (element may be zero)");
  }
}

bool NumberField::totally_positive(const FieldElem& x) const {
  for (int mu = 1; mu <= static_cast<int>(n_); ++mu)
    if (embed_sign(x, mu) <= 0) return false;
  return true;
}

std::vector<FieldElem> NumberField::dual_basis(const std::vector<FieldElem>& a) const {
  if (a.size() != n_) throw LinearlyDependent("dual_basis needs n elements");
  RatMat gram(n_, RatVec(n_));
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j) gram[i][j] = trace(mul(a[i], a[j]));
  if (rat_det(gram) == 0) throw LinearlyDependent();
  RatMat ginv = rat_inverse(gram);
  // b_j = sum_i (G^{-1})_{ji} a_i
  std::vector<FieldElem> b;
  b.reserve(n_);
  for (size_t j = 0; j < n_; ++j) {
    FieldElem acc = zero();
    for (size_t i = 0; i < n_; ++i)
      if (ginv[j][i] != 0) acc = add(acc, mul_rat(a[i], ginv[j][i]));
    b.push_back(std::move(acc));
  }
  return b;
}

QLattice NumberField::standard_lattice() const {
  RatMat m(n_, RatVec(n_, Rat(0)));
  for (size_t i = 0; i < n_; ++i) m[i][i] = 1;
  return QLattice(std::move(m));
}

const QLattice& NumberField::ring_of_integers() const {
  if (ring_) return *ring_;
  if (n_ == 1) {
    ring_ = standard_lattice();
    return *ring_;
  }
  if (n_ == 2) {
    // theta^2 + b theta + c = 0; Delta = b^2 - 4c = f^2 D with D fundamental
    Int b = poly_[1], c = poly_[0];
    Int delta = b * b - 4 * c;
    Int s = 1, m = delta;
    for (Int d = 2; d * d <= abs(m); ++d) {
      while (m % (d * d) == 0) { m /= d * d; s *= d; }
    }
    Int D = (((m % 4) + 4) % 4 == 1) ? m : 4 * m;
    Int f2 = delta / D;
    Int f = 1;
    while (f * f < f2) ++f;
    // omega = (D + sqrt(D)) / 2 with sqrt(D) = (2 theta + b)/f
    RatMat basis = {{Rat(1), Rat(0)},
                    {Rat(D, 2) + Rat(b, 2 * f), Rat(1, f)}};
    ring_ = QLattice(std::move(basis));
    return *ring_;
  }
  ring_ = standard_lattice();  // degree >= 3 default; override via set_ring_of_integers
  return *ring_;
}

void NumberField::set_ring_of_integers(QLattice o) { ring_ = std::move(o); }

QLattice NumberField::trace_dual(const QLattice& l) const {
  RatMat bt = rat_matmul(l.basis(), trace_form_);
  RatMat inv = rat_inverse(bt);
  RatMat d(n_, RatVec(n_));
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j) d[i][j] = inv[j][i];
  return QLattice(std::move(d));
}

QLattice NumberField::scale_lattice(const QLattice& l, const FieldElem& c) const {
  if (c.is_zero()) throw ZeroScale();
  RatMat m = rat_matmul(l.basis(), mult_matrix(c));
  return QLattice(std::move(m));
}

QLattice NumberField::principal_ideal(const FieldElem& g) const {
  return scale_lattice(ring_of_integers(), g);
}

QLattice NumberField::ideal_inverse(const QLattice& ideal) const {
  const QLattice& o = ring_of_integers();
  // closedness under O-multiplication
  for (const auto& grow : o.basis()) {
    FieldElem g{grow};
    for (const auto& brow : ideal.basis())
      if (!ideal.contains(mul(FieldElem{brow}, g))) throw NotAnIdeal();
  }
  std::optional<QLattice> acc;
  for (const auto& brow : ideal.basis()) {
    FieldElem b{brow};
    RatMat mb = mult_matrix(b);
    RatMat mbinv = rat_inverse(mb);
    QLattice piece(rat_matmul(o.basis(), mbinv));
    acc = acc ? lattice_intersect(*acc, piece) : piece;
  }
  return *acc;
}

QLattice NumberField::ideal_mul(const QLattice& a, const QLattice& b) const {
  RatMat rows;
  for (const auto& ra : a.basis())
    for (const auto& rb : b.basis()) rows.push_back(mul(FieldElem{ra}, FieldElem{rb}).c);
  // products generate the product lattice; HNF of the 'n^2 x n' stack
  return QLattice(std::move(rows));
}

Rat NumberField::ideal_norm(const QLattice& ideal) const {
  return ideal.det_abs() / ring_of_integers().det_abs();
}

QLattice NumberField::different() const { return ideal_inverse(trace_dual(ring_of_integers())); }

std::set<Int> NumberField::ideal_prime_support(const QLattice& ideal) const {
  const QLattice& o = ring_of_integers();
  QLattice s = lattice_sum(ideal, o);
  QLattice t = lattice_intersect(ideal, o);
  Int idx = lattice_index(s, o) * lattice_index(o, t);
  std::set<Int> out;
  for (Int d = 2; d * d <= idx; ++d)
    while (idx % d == 0) { out.insert(d); idx /= d; }
  if (idx > 1) out.insert(idx);
  return out;
}

std::optional<FieldElem> NumberField::find_generator(const QLattice& ideal, long radius) const {
  // small search over coordinate combinations of the ideal basis
  const RatMat& b = ideal.basis();
  std::vector<long> k(n_, 0);
  for (long r = 1; r <= radius; ++r) {
    std::vector<long> vals;
    for (long v = 0; v <= r; ++v) { vals.push_back(v); if (v > 0) vals.push_back(-v); }
    // iterate over the shell max|k| = r
    std::vector<size_t> idx(n_, 0);
    while (true) {
      long mx = 0;
      for (size_t i = 0; i < n_; ++i) mx = std::max(mx, std::abs(vals[idx[i]]));
      if (mx == r) {
        RatVec coords(n_, Rat(0));
        for (size_t i = 0; i < n_; ++i)
          for (size_t j = 0; j < n_; ++j) coords[j] += Rat(vals[idx[i]]) * b[i][j];
        FieldElem g{coords};
        if (!g.is_zero() && principal_ideal(g) == ideal) return g;
      }
      size_t pos = 0;
      while (pos < n_ && ++idx[pos] == vals.size()) { idx[pos] = 0; ++pos; }
      if (pos == n_) break;
    }
  }
  return std::nullopt;
}

const UnitData& NumberField::units() const {
  if (units_) return *units_;
  if (n_ == 1) {
    units_ = UnitData{{}, 2};
    return *units_;
  }
  if (n_ == 2) {
    units_ = quadratic_units(*this);
    return *units_;
  }
  throw HigherDegreeNeedsExplicitFan("units for degree >= 3 must be supplied");
}

void NumberField::set_units(UnitData u) { units_ = std::move(u); }
bool NumberField::has_units() const {
  return units_.has_value() || n_ <= 2;
}

// Fundamental unit > 1 of the maximal order of a real quadratic field, by the
// continued fraction of (u + sqrt(D))/2 (Cohen alg. 5.7.2 flavour). Returns
// the element and the sign of its norm.
static std::pair<FieldElem, int> cf_fundamental_unit(const NumberField& k) {
  Int b = k.min_poly()[1];
  Int delta = b * b - 4 * k.min_poly()[0];
  Int m = delta;
  for (Int d = 2; d * d <= abs(m); ++d)
    while (m % (d * d) == 0) m /= d * d;
  Int D = (((m % 4) + 4) % 4 == 1) ? m : 4 * m;
  Int f = 1;
  while (f * f * D != delta) ++f;

  Int sq = boost::multiprecision::sqrt(D);
  Int u = sq;
  if ((u - D) % 2 != 0) u -= 1;
  Int p0 = u, q0 = 2;
  Int pk = p0, qk = q0;
  Int conv_qm2 = 1, conv_qm1 = 0;  // q_{-2}, q_{-1}
  Int x, y;
  long l = 0;
  while (true) {
    Int a = (pk + sq) / qk;  // floor((P + sqrt D)/Q), Q > 0 while reduced
    Int conv_q = a * conv_qm1 + conv_qm2;
    conv_qm2 = conv_qm1;
    conv_qm1 = conv_q;
    pk = a * qk - pk;
    qk = (D - pk * pk) / qk;
    ++l;
    if (pk == p0 && qk == q0) {
      // epsilon = q_{l-1} * (u + sqrt D)/2 + q_{l-2}
      y = conv_qm1;
      x = conv_qm1 * u + 2 * conv_qm2;
      break;
    }
    if (l > 100000) throw SearchExhausted("continued fraction did not cycle");
  }
  Int norm4 = x * x - D * y * y;  // = +-4
  if (norm4 != 4 && norm4 != -4) throw ValidationError("unit computation failed");
  // epsilon = (x + y sqrt(D))/2, sqrt(D) = (2 theta + b)/f
  FieldElem eps{RatVec{Rat(x, 2) + Rat(y * b, 2 * f), Rat(y, f)}};
  return {eps, norm4 == 4 ? 1 : -1};
}

FieldElem quadratic_fundamental_unit(const NumberField& k) {
  if (k.degree() != 2) throw ValidationError("fundamental unit needs degree 2");
  return cf_fundamental_unit(k).first;
}

UnitData quadratic_units(const NumberField& k) {
  if (k.degree() != 2) throw ValidationError("quadratic_units needs degree 2");
  auto [eps, nsign] = cf_fundamental_unit(k);
  long index = (nsign < 0) ? 4 : 2;
  FieldElem tp = (nsign < 0) ? k.mul(eps, eps) : eps;
  if (!k.totally_positive(tp)) tp = k.neg(tp);
  // normalize: largest-root embedding > 1
  RatInterval last = k.embed(tp, static_cast<int>(k.degree()), 8);
  if (last.hi < 1) tp = k.inv(tp);
  UnitData out;
  out.totally_positive_generators = {tp};
  out.unit_group_index = index;
  return out;
}

std::vector<NumberField::PrincipalPrime> NumberField::find_principal_degree_one_primes(
    const std::set<Int>& avoid, size_t count, long max_radius) const {
  const QLattice& o = ring_of_integers();
  std::set<Int> bad = avoid;
  {
    // ramified-ish primes: divisors of disc(min_poly)
    Int d = rat_num(abs(disc_));
    for (Int p = 2; p * p <= d; ++p)
      while (d % p == 0) { bad.insert(p); d /= p; }
    if (d > 1) bad.insert(d);
  }
  std::map<QLattice, PrincipalPrime> seen;  // ideal -> generator
  std::vector<PrincipalPrime> out;
  auto normalize = [&](FieldElem a) {
    // totally positive representative of the unit orbit with minimal trace
    if (n_ == 2) {
      if (norm(a) < 0) {
        auto [fund, nsign] = cf_fundamental_unit(*this);
        if (nsign < 0) a = mul(a, fund);
      }
      if (norm(a) > 0 && embed_sign(a, 1) < 0) a = neg(a);
      if (norm(a) > 0) {
        const FieldElem& eps = units().totally_positive_generators[0];
        FieldElem inv_eps = inv(eps);
        while (true) {
          FieldElem cand = mul(a, inv_eps);
          if (abs(trace(cand)) < abs(trace(a))) a = cand; else break;
        }
        while (true) {
          FieldElem cand = mul(a, eps);
          if (abs(trace(cand)) < abs(trace(a))) a = cand; else break;
        }
      }
    } else if (n_ == 1) {
      if (a.c[0] < 0) a = neg(a);
    }
    return a;
  };

  for (long r = 1; r <= max_radius && out.size() < count; ++r) {
    std::vector<long> vals;
    for (long v = 0; v <= r; ++v) { vals.push_back(v); if (v > 0) vals.push_back(-v); }
    std::vector<size_t> idx(n_, 0);
    std::vector<PrincipalPrime> shell;
    while (true) {
      long mx = 0;
      for (size_t i = 0; i < n_; ++i) mx = std::max(mx, std::abs(vals[idx[i]]));
      if (mx == r) {
        RatVec coords(n_, Rat(0));
        for (size_t i = 0; i < n_; ++i)
          if (vals[idx[i]] != 0)
            for (size_t j = 0; j < n_; ++j) coords[j] += Rat(vals[idx[i]]) * o.basis()[i][j];
        FieldElem a{coords};
        if (!a.is_zero()) {
          Rat nr = norm(a);
          Int np = rat_num(abs(nr));
          if (rat_den(nr) == 1 && np > 1 &&
              boost::multiprecision::miller_rabin_test(np, 32) && !bad.count(np)) {
            QLattice ideal = principal_ideal(a);
            if (!seen.count(ideal)) {
              PrincipalPrime pp{normalize(a), np};
              seen.emplace(ideal, pp);
              shell.push_back(std::move(pp));
            }
          }
        }
      }
      size_t pos = 0;
      while (pos < n_ && ++idx[pos] == vals.size()) { idx[pos] = 0; ++pos; }
      if (pos == n_) break;
    }
    for (auto& pp : shell) out.push_back(std::move(pp));
  }
  if (out.size() < count) throw SearchExhausted("prime search radius exhausted");
  std::sort(out.begin(), out.end(), [](const PrincipalPrime& a, const PrincipalPrime& b) {
    if (a.p != b.p) return a.p < b.p;
    // within a rational prime, prefer the lexicographically larger coordinates
    return a.generator.c > b.generator.c;
  });
  out.resize(count);
  return out;
}

// ---- QLattice ----

QLattice::QLattice(RatMat basis_rows) {
  size_t m = basis_rows.size();
  if (m == 0) throw ValidationError("empty lattice basis");
  size_t n = basis_rows[0].size();
  Int den = 1;
  for (const auto& row : basis_rows)
    for (const auto& x : row) den = int_lcm(den, rat_den(x));
  IntMat a(m, std::vector<Int>(n));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = rat_num(basis_rows[i][j] * den);
  IntMat h = hnf(std::move(a));
  if (h.size() != n) throw LinearlyDependent("lattice basis not full rank");
  // minimal denominator: d_min = den / gcd(den, all entries of h)
  Int g = den;
  for (const auto& row : h)
    for (const auto& x : row) g = int_gcd(g, x);
  // rebuild at the minimal denominator to make the form basis-independent
  Int dmin = den / g;
  b_.assign(n, RatVec(n));
  if (g != 1) {
    IntMat h2(n, std::vector<Int>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) h2[i][j] = h[i][j] / g;
    h = std::move(h2);
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) b_[i][j] = Rat(h[i][j], dmin);
}

const RatMat& QLattice::basis_inverse() const {
  if (!binv_) binv_ = std::make_shared<const RatMat>(rat_inverse(b_));
  return *binv_;
}

Rat QLattice::det_abs() const { return abs(rat_det(b_)); }

RatVec QLattice::coords_of(const FieldElem& x) const { return rat_vecmat(x.c, basis_inverse()); }

bool QLattice::contains(const FieldElem& x) const {
  for (const auto& c : coords_of(x))
    if (!rat_is_integer(c)) return false;
  return true;
}

QLattice lattice_sum(const QLattice& a, const QLattice& b) {
  RatMat rows = a.basis();
  for (const auto& r : b.basis()) rows.push_back(r);
  return QLattice(std::move(rows));
}

QLattice lattice_intersect(const QLattice& a, const QLattice& b) {
  size_t n = a.dim();
  Int da = 1, db = 1;
  for (const auto& row : a.basis()) for (const auto& x : row) da = int_lcm(da, rat_den(x));
  for (const auto& row : b.basis()) for (const auto& x : row) db = int_lcm(db, rat_den(x));
  // stack [db*da*A; -da*db*B] scaled integrally; left kernel gives x*Aint = y*Bint
  IntMat m(2 * n, std::vector<Int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      m[i][j] = rat_num(a.basis()[i][j] * da) * db;
      m[n + i][j] = -rat_num(b.basis()[i][j] * db) * da;
    }
  HnfResult hr = hnf_with_transform(std::move(m));
  RatMat rows;
  for (size_t i = hr.rank; i < 2 * n; ++i) {
    // kernel row: x-part times a's basis
    RatVec v(n, Rat(0));
    for (size_t k = 0; k < n; ++k)
      if (hr.u[i][k] != 0)
        for (size_t j = 0; j < n; ++j) v[j] += Rat(hr.u[i][k]) * a.basis()[k][j];
    rows.push_back(std::move(v));
  }
  return QLattice(std::move(rows));
}

bool lattice_subset(const QLattice& sub, const QLattice& sup) {
  for (const auto& row : sub.basis())
    if (!sup.contains(FieldElem{row})) return false;
  return true;
}

Int lattice_index(const QLattice& a, const QLattice& b) {
  if (!lattice_subset(b, a)) throw NotSublattice();
  Rat r = b.det_abs() / a.det_abs();
  if (!rat_is_integer(r)) throw NotSublattice("index not integral");
  return rat_num(r);
}

QLattice lattice_scale(const QLattice& a, const Rat& q) {
  if (q == 0) throw ZeroScale();
  RatMat rows = a.basis();
  for (auto& row : rows)
    for (auto& x : row) x *= q;
  return QLattice(std::move(rows));
}

std::vector<FieldElem> lattice_quotient_reps(const QLattice& a, const QLattice& b) {
  if (!lattice_subset(b, a)) throw NotSublattice();
  size_t n = a.dim();
  // rows of b in a-coordinates: integer matrix
  IntMat c(n, std::vector<Int>(n));
  for (size_t i = 0; i < n; ++i) {
    RatVec coords = a.coords_of(FieldElem{b.basis()[i]});
    for (size_t j = 0; j < n; ++j) {
      if (!rat_is_integer(coords[j])) throw NotSublattice();
      c[i][j] = rat_num(coords[j]);
    }
  }
  SmithResult sm = smith_vinv(std::move(c));
  std::vector<FieldElem> reps;
  std::vector<Int> r(n, 0);
  while (true) {
    // x = r * Vinv in a-coordinates
    RatVec v(n, Rat(0));
    for (size_t i = 0; i < n; ++i)
      if (r[i] != 0)
        for (size_t j = 0; j < n; ++j) v[j] += Rat(r[i]) * Rat(sm.vinv[i][j]);
    // to power-basis coordinates
    RatVec coords(n, Rat(0));
    for (size_t i = 0; i < n; ++i)
      if (v[i] != 0)
        for (size_t j = 0; j < n; ++j) coords[j] += v[i] * a.basis()[i][j];
    reps.push_back(lattice_reduce(b, FieldElem{coords}));
    size_t pos = 0;
    while (pos < n && ++r[pos] == sm.d[pos]) { r[pos] = 0; ++pos; }
    if (pos == n) break;
  }
  return reps;
}

FieldElem lattice_reduce(const QLattice& m, const FieldElem& x) {
  RatVec coords = m.coords_of(x);
  RatVec out(x.c.size(), Rat(0));
  for (size_t i = 0; i < coords.size(); ++i) {
    Rat f = rat_frac(coords[i]);
    if (f != 0)
      for (size_t j = 0; j < out.size(); ++j) out[j] += f * m.basis()[i][j];
  }
  return FieldElem{out};
}

}  // namespace shintani
