#include "shintani/shintani_eval.hpp"

#include <cmath>

namespace shintani {

namespace {

// minimal positive rational g with g*x in the lattice m
Rat minimal_period(const QLattice& m, const FieldElem& x) {
  RatVec c = m.coords_of(x);
  Rat g(0);
  for (const auto& ci : c) {
    if (ci == 0) continue;
    Rat gi = Rat(rat_den(ci), abs(rat_num(ci)));
    g = (g == 0) ? gi : rat_lcm(g, gi);
  }
  if (g == 0) throw NoCommonPeriod();
  return g;
}

std::vector<std::pair<Complex, const LatticeFunction*>> pieces_of(const LatticeFunction& phi) {
  std::vector<std::pair<Complex, const LatticeFunction*>> out;
  if (phi.parts.empty()) {
    out.emplace_back(Complex(1), &phi);
  } else {
    for (const auto& [c, piece] : phi.parts) out.emplace_back(c, &piece);
  }
  return out;
}

}  // namespace

RExpForm build_form(const LatticeFunction& phi, const Fan& fan, long m_multiplier) {
  const NumberField& k = *phi.field;
  size_t n = k.degree();
  RExpForm form;
  form.field = &k;
  auto pieces = pieces_of(phi);
  for (const auto& [cone, coeff] : fan.terms()) {
    if (cone.dim() != n || !is_simple(cone)) continue;
    int orient = orientation(cone);
    for (const auto& [pc, piece] : pieces) {
      RExpBlock blk;
      Complex pref = Real(Rat(coeff * orient)) * pc;
      for (const auto& u : cone.gens) {
        Rat g = minimal_period(piece->per, u) * m_multiplier;
        blk.gens.push_back(k.mul_rat(u, g));
        blk.m.push_back(1);
      }
      RatMat urows;
      for (const auto& u : blk.gens) urows.push_back(u.c);
      QLattice box(urows);
      RatMat uinv = rat_inverse(urows);
      blk.min_tau.assign(n, Rat(1));
      for (const auto& rep : lattice_quotient_reps(piece->supp, box)) {
        // box coordinates in the u' generator basis, shifted into (0,1]^n
        RatVec tau = rat_vecmat(rep.c, uinv);
        FieldElem v = rep;
        for (size_t j = 0; j < n; ++j) {
          Rat frac = rat_frac(tau[j]);
          Rat shift = frac == 0 ? Rat(1) - tau[j] : frac - tau[j];
          if (shift != 0) v = k.add(v, k.mul_rat(blk.gens[j], shift));
          tau[j] += shift;  // now in (0,1]
        }
        Complex c_v = piece->eval(v);
        if (piece->effectively_zero(c_v)) continue;
        c_v = pref * c_v;
        for (size_t j = 0; j < n; ++j) blk.min_tau[j] = std::min(blk.min_tau[j], tau[j]);
        blk.numerator.emplace_back(c_v, v);
      }
      if (!blk.numerator.empty()) form.blocks.push_back(std::move(blk));
    }
  }
  return form;
}

Complex eval_F(const RExpForm& form, const std::vector<Real>& t, long bits) {
  const NumberField& k = *form.field;
  size_t n = k.degree();
  if (t.size() != n) throw ValidationError("eval_F: dimension mismatch");
  long terms = static_cast<long>(form.numerator_terms());
  long base = bits + 32 + static_cast<long>(std::log2(terms + 2.0));

  // probe pass: find the denominator smallness escalation
  long extra = 0;
  {
    PrecisionGuard g(base);
    Real two_pi = Real(2) * const_pi();
    for (const auto& blk : form.blocks) {
      for (size_t j = 0; j < n; ++j) {
        Real a(0);
        for (size_t mu = 0; mu < n; ++mu)
          a += t[mu] * k.embed_real(blk.gens[j], static_cast<int>(mu) + 1, base);
        a *= two_pi;
        if (a.is_zero()) throw SingularNode();
        long e = mpfr_get_exp(a.raw());  // |a| in [2^{e-1}, 2^e)
        if (e < 0) extra += -e;
      }
    }
  }

  PrecisionGuard g(base + extra);
  long p = Real::working_prec();
  Real two_pi = Real(2) * const_pi();
  Complex total(0);
  for (const auto& blk : form.blocks) {
    Real den(1);
    for (size_t j = 0; j < n; ++j) {
      Real a(0);
      for (size_t mu = 0; mu < n; ++mu)
        a += t[mu] * k.embed_real(blk.gens[j], static_cast<int>(mu) + 1, p);
      a *= two_pi;
      if (a.is_zero()) throw SingularNode();
      den *= -expm1(-a);
    }
    Complex num(0);
    for (const auto& [c, v] : blk.numerator) {
      Real e(0);
      for (size_t mu = 0; mu < n; ++mu)
        e += t[mu] * k.embed_real(v, static_cast<int>(mu) + 1, p);
      num += c * Complex(exp(-(two_pi * e)));
    }
    total += Complex{num.re / den, num.im / den};
  }
  return total;
}

namespace {

// dense per-axis tables for the grid quadrature of one orthant
struct AxisTables {
  std::vector<Real> x;                    // log-coordinate nodes
  std::vector<Complex> es;                // e^{s x}
  // [block][j][node]: t * rho(u'_j), and [block][v][node]: e^{-2pi t rho(v)}
  std::vector<std::vector<std::vector<Real>>> gen_dot;
  std::vector<std::vector<std::vector<Real>>> num_exp;
};

struct GridPlan {
  std::vector<double> x_neg, x_pos;
  std::vector<long> nodes;
  long p_work = 0;
  double h = 0.05;
};

GridPlan plan_grid(const std::vector<int>& g, const std::vector<Complex>& s,
                   const RExpForm& form, const EvalConfig& cfg) {
  const NumberField& k = *form.field;
  size_t n = k.degree();
  GridPlan plan;
  plan.h = cfg.step;
  long wbits = cfg.effective_window_bits();
  double wln = wbits * 0.6931471805599453;
  double terms_ln = std::log(static_cast<double>(form.numerator_terms()) + 2.0);
  for (size_t mu = 0; mu < n; ++mu) {
    double re = s[mu].re.to_double();
    if (re < cfg.min_re - 1e-12) throw ReTooSmall();
    double xn = cfg.window_neg > 0 ? cfg.window_neg : wln / re + 2.0;
    // decay scale along +axis: smallest surviving exponent rate
    double delta = 1e300;
    for (const auto& blk : form.blocks)
      for (size_t j = 0; j < n; ++j) {
        double rho = std::abs(
            k.embed_real(blk.gens[j], static_cast<int>(mu) + 1, 64).to_double());
        double mt = static_cast<double>(blk.min_tau[j]);
        delta = std::min(delta, std::max(1e-12, rho * mt));
      }
    double xp;
    if (cfg.window_pos > 0) {
      xp = cfg.window_pos;
    } else {
      xp = 2.0;
      for (int it = 0; it < 4; ++it)
        xp = std::log((wln + re * xp + terms_ln + 8.0) / (6.283185307179586 * delta));
      xp = std::max(xp, 1.0) + 1.0;
    }
    plan.x_neg.push_back(xn);
    plan.x_pos.push_back(xp);
    plan.nodes.push_back(static_cast<long>(std::ceil((xn + xp) / plan.h)) + 1);
  }
  double max_xneg = 0;
  for (double v : plan.x_neg) max_xneg = std::max(max_xneg, v);
  plan.p_work = cfg.bits + 48 + static_cast<long>(std::log2(form.numerator_terms() + 2.0)) +
                static_cast<long>(std::ceil(1.4427 * n * max_xneg));
  (void)g;
  return plan;
}

AxisTables build_axis_tables(size_t mu, int gsign, const Complex& s_mu, const GridPlan& plan,
                             const RExpForm& form) {
  const NumberField& k = *form.field;
  AxisTables tab;
  long nn = plan.nodes[mu];
  double kappa = (mu + 0.5) / (2.0 * k.degree() + 1.0);
  Real h(plan.h);
  Real two_pi = Real(2) * const_pi();

  tab.x.reserve(nn);
  tab.es.reserve(nn);
  std::vector<Real> tval(nn);
  for (long i = 0; i < nn; ++i) {
    Real x = Real(-plan.x_neg[mu]) + Real(static_cast<double>(i) + kappa) * h;
    tab.x.push_back(x);
    Real t = exp(x);
    if (gsign < 0) t = -t;
    tval[i] = t;
    tab.es.push_back(exp(Complex{s_mu.re * x, s_mu.im * x}));
  }

  tab.gen_dot.resize(form.blocks.size());
  tab.num_exp.resize(form.blocks.size());
  for (size_t b = 0; b < form.blocks.size(); ++b) {
    const RExpBlock& blk = form.blocks[b];
    tab.gen_dot[b].resize(blk.gens.size());
    for (size_t j = 0; j < blk.gens.size(); ++j) {
      Real rho = k.embed_real(blk.gens[j], static_cast<int>(mu) + 1, plan.p_work);
      auto& row = tab.gen_dot[b][j];
      row.reserve(nn);
      for (long i = 0; i < nn; ++i) row.push_back(tval[i] * rho);
    }
    tab.num_exp[b].resize(blk.numerator.size());
    for (size_t v = 0; v < blk.numerator.size(); ++v) {
      Real rho = k.embed_real(blk.numerator[v].second, static_cast<int>(mu) + 1, plan.p_work);
      Real c = -(two_pi * rho);
      auto& row = tab.num_exp[b][v];
      row.reserve(nn);
      for (long i = 0; i < nn; ++i) row.push_back(exp(c * tval[i]));
    }
  }
  return tab;
}

// node accumulation for arbitrary n via an odometer; the inner axis-0 loop
// is the hot path and works on raw mpfr scratch
Complex grid_sum(const RExpForm& form, const std::vector<AxisTables>& tabs,
                 const GridPlan& plan) {
  size_t n = tabs.size();
  size_t nb = form.blocks.size();
  mpfr_prec_t p = plan.p_work;

  mpfr_t acc_re, acc_im, fre, fim, num_re, num_im, den, a, tmp, tmp2;
  for (auto* v : {&acc_re, &acc_im, &fre, &fim, &num_re, &num_im, &den, &a, &tmp, &tmp2})
    mpfr_init2(*v, p);
  mpfr_set_zero(acc_re, 1);
  mpfr_set_zero(acc_im, 1);

  Real two_pi_r;
  {
    PrecisionGuard g(p);
    two_pi_r = Real(2) * const_pi();
  }

  std::vector<long> idx(n, 0);
  bool more = true;
  while (more) {
    // F(t) at this node
    mpfr_set_zero(fre, 1);
    mpfr_set_zero(fim, 1);
    for (size_t b = 0; b < nb; ++b) {
      const RExpBlock& blk = form.blocks[b];
      mpfr_set_ui(den, 1, MPFR_RNDN);
      for (size_t j = 0; j < blk.gens.size(); ++j) {
        mpfr_set_zero(a, 1);
        for (size_t mu = 0; mu < n; ++mu)
          mpfr_add(a, a, tabs[mu].gen_dot[b][j][idx[mu]].raw(), MPFR_RNDN);
        mpfr_mul(a, a, two_pi_r.raw(), MPFR_RNDN);
        if (mpfr_zero_p(a)) throw SingularNode();
        mpfr_neg(a, a, MPFR_RNDN);
        mpfr_expm1(tmp, a, MPFR_RNDN);
        mpfr_neg(tmp, tmp, MPFR_RNDN);  // 1 - e^{-a}
        mpfr_mul(den, den, tmp, MPFR_RNDN);
      }
      mpfr_set_zero(num_re, 1);
      mpfr_set_zero(num_im, 1);
      for (size_t v = 0; v < blk.numerator.size(); ++v) {
        mpfr_set(tmp, tabs[0].num_exp[b][v][idx[0]].raw(), MPFR_RNDN);
        for (size_t mu = 1; mu < n; ++mu)
          mpfr_mul(tmp, tmp, tabs[mu].num_exp[b][v][idx[mu]].raw(), MPFR_RNDN);
        const Complex& c = blk.numerator[v].first;
        mpfr_mul(tmp2, tmp, c.re.raw(), MPFR_RNDN);
        mpfr_add(num_re, num_re, tmp2, MPFR_RNDN);
        if (!c.im.is_zero()) {
          mpfr_mul(tmp2, tmp, c.im.raw(), MPFR_RNDN);
          mpfr_add(num_im, num_im, tmp2, MPFR_RNDN);
        }
      }
      mpfr_div(num_re, num_re, den, MPFR_RNDN);
      mpfr_div(num_im, num_im, den, MPFR_RNDN);
      mpfr_add(fre, fre, num_re, MPFR_RNDN);
      mpfr_add(fim, fim, num_im, MPFR_RNDN);
    }
    // multiply by prod_mu e^{s_mu x_mu} and accumulate
    mpfr_set(num_re, tabs[0].es[idx[0]].re.raw(), MPFR_RNDN);
    mpfr_set(num_im, tabs[0].es[idx[0]].im.raw(), MPFR_RNDN);
    for (size_t mu = 1; mu < n; ++mu) {
      const Complex& e = tabs[mu].es[idx[mu]];
      mpfr_mul(tmp, num_re, e.re.raw(), MPFR_RNDN);
      mpfr_mul(tmp2, num_im, e.im.raw(), MPFR_RNDN);
      mpfr_sub(tmp, tmp, tmp2, MPFR_RNDN);
      mpfr_mul(tmp2, num_re, e.im.raw(), MPFR_RNDN);
      mpfr_swap(num_re, tmp);  // num_re now the new real part
      mpfr_mul(tmp, num_im, e.re.raw(), MPFR_RNDN);
      mpfr_add(num_im, tmp, tmp2, MPFR_RNDN);
    }
    // acc += F * es
    mpfr_mul(tmp, fre, num_re, MPFR_RNDN);
    mpfr_add(acc_re, acc_re, tmp, MPFR_RNDN);
    mpfr_mul(tmp, fim, num_im, MPFR_RNDN);
    mpfr_sub(acc_re, acc_re, tmp, MPFR_RNDN);
    mpfr_mul(tmp, fre, num_im, MPFR_RNDN);
    mpfr_add(acc_im, acc_im, tmp, MPFR_RNDN);
    mpfr_mul(tmp, fim, num_re, MPFR_RNDN);
    mpfr_add(acc_im, acc_im, tmp, MPFR_RNDN);

    size_t pos = 0;
    while (pos < n && ++idx[pos] == plan.nodes[pos]) {
      idx[pos] = 0;
      ++pos;
    }
    more = pos < n;
  }

  Complex out;
  {
    PrecisionGuard g(p);
    out = Complex{Real(0), Real(0)};
    mpfr_set(out.re.raw(), acc_re, MPFR_RNDN);
    mpfr_set(out.im.raw(), acc_im, MPFR_RNDN);
  }
  for (auto* v : {&acc_re, &acc_im, &fre, &fim, &num_re, &num_im, &den, &a, &tmp, &tmp2})
    mpfr_clear(*v);
  return out;
}

}  // namespace

QuadResult l_orthant(const std::vector<int>& g, const std::vector<Complex>& s,
                     const RExpForm& form, const EvalConfig& cfg) {
  const NumberField& k = *form.field;
  size_t n = k.degree();
  if (g.size() != n || s.size() != n) throw ValidationError("l_orthant: dimension mismatch");
  if (form.blocks.empty()) return {Complex(0), Real(0)};
  GridPlan plan = plan_grid(g, s, form, cfg);
  PrecisionGuard guard(plan.p_work);
  std::vector<AxisTables> tabs;
  tabs.reserve(n);
  for (size_t mu = 0; mu < n; ++mu) tabs.push_back(build_axis_tables(mu, g[mu], s[mu], plan, form));
  Complex sum = grid_sum(form, tabs, plan);

  // prefactor: h^n * prod g_mu * 2^n / prod Gamma_C(s_mu)
  Complex pref(1);
  long gprod = 1;
  for (size_t mu = 0; mu < n; ++mu) {
    pref = pref * (Complex(2) / gamma_c(s[mu]));
    gprod *= g[mu];
    pref = Real(plan.h) * pref;
  }
  Complex value = Real(gprod) * (pref * sum);

  Real err = Real::make();
  mpfr_set_ui_2exp(err.raw(), 1, -cfg.effective_window_bits(), MPFR_RNDN);
  err = err * (abs(value) + Real(1));
  PrecisionGuard out_guard(cfg.bits + 16);
  return {Complex{Real(0) + value.re, Real(0) + value.im}, err};
}

QuadResult l_sigma(const std::vector<int>& sigma, const std::vector<Complex>& s,
                   const RExpForm& form, const EvalConfig& cfg) {
  size_t n = form.field->degree();
  if (sigma.size() != n) throw ValidationError("l_sigma: sigma dimension mismatch");
  Complex total(0);
  Real err(0);
  std::vector<int> g(n, 1);
  while (true) {
    long sgn = 1;
    for (size_t mu = 0; mu < n; ++mu)
      if (sigma[mu] == 1 && g[mu] == -1) sgn = -sgn;
    QuadResult q = l_orthant(g, s, form, cfg);
    total += Real(sgn) * q.value;
    err += q.err;
    size_t pos = 0;
    while (pos < n && g[pos] == -1) {
      g[pos] = 1;
      ++pos;
    }
    if (pos == n) break;
    g[pos] = -1;
  }
  return {total, err};
}

Complex l_sigma_completed(const std::vector<int>& sigma, const std::vector<Complex>& s,
                          const RExpForm& form, const EvalConfig& cfg) {
  QuadResult q = l_sigma(sigma, s, form, cfg);
  PrecisionGuard g(cfg.bits + 32);
  return gamma_sigma(sigma, s) * q.value;
}

ContinuationResult l_sigma_continued(const std::vector<int>& sigma, const std::vector<Complex>& s,
                                     const LatticeFunction& phi, const Fan& fan,
                                     const EvalConfig& cfg, EvalRoute route, FeConstant fe) {
  size_t n = phi.field->degree();
  bool direct_ok = true, fe_ok = true;
  for (size_t mu = 0; mu < n; ++mu) {
    double re = s[mu].re.to_double();
    if (re < cfg.min_re - 1e-12) direct_ok = false;
    if (1.0 - re < cfg.min_re - 1e-12) fe_ok = false;
  }
  if (route == EvalRoute::direct && !direct_ok) throw ReTooSmall();
  if (route == EvalRoute::functional_equation && !fe_ok) throw ReTooSmall();
  if (route == EvalRoute::automatic) {
    if (direct_ok) route = EvalRoute::direct;
    else if (fe_ok) route = EvalRoute::functional_equation;
    else throw MixedRegime();
  }
  PrecisionGuard g(cfg.bits + 32);
  if (route == EvalRoute::direct) {
    RExpForm form = build_form(phi, fan);
    QuadResult q = l_sigma(sigma, s, form, cfg);
    return {q.value, q.err, EvalRoute::direct};
  }
  // FE route: i_sigma^{-1} Gamma_sigma(1-s) L_sigma(1-s, phi_hat, phi(B)) / Gamma_sigma(s)
  LatticeFunction phi_hat = fourier(phi);
  Fan dual = dual_fan(*phi.field, fan);
  std::vector<Complex> s_ref;
  for (size_t mu = 0; mu < n; ++mu) s_ref.push_back(Complex(1) - s[mu]);
  RExpForm form = build_form(phi_hat, dual);
  QuadResult q = l_sigma(sigma, s_ref, form, cfg);
  Complex constant;
  switch (fe) {
    case FeConstant::i_sigma_inv: {
      long cnt = 0;
      for (int v : sigma) cnt += v;
      constant = i_power(-cnt);
      break;
    }
    case FeConstant::i_sigma:
      constant = i_sigma(sigma);
      break;
    case FeConstant::i_one_minus_sigma: {
      long cnt = 0;
      for (int v : sigma) cnt += 1 - v;
      constant = i_power(cnt);
      break;
    }
  }
  Complex value = constant * gamma_sigma(sigma, s_ref) * q.value;
  value = value * recip_gamma_sigma(sigma, s);
  Real err = q.err * (abs(gamma_sigma(sigma, s_ref)) * abs(recip_gamma_sigma(sigma, s)) + Real(1));
  return {value, err, EvalRoute::functional_equation};
}

DerivResult partial_derivative(const std::function<Complex(const std::vector<Complex>&)>& fn,
                               const std::vector<Complex>& point, size_t mu,
                               const EvalConfig& cfg) {
  if (mu >= point.size()) throw ValidationError("partial_derivative: axis out of range");
  PrecisionGuard g(cfg.bits + 32);
  Real hstep = Real::make();
  mpfr_set_ui_2exp(hstep.raw(), 1, -(cfg.bits / 4), MPFR_RNDN);
  auto diff = [&](const Real& h) {
    std::vector<Complex> up = point, dn = point;
    up[mu] = up[mu] + Complex(h);
    dn[mu] = dn[mu] - Complex(h);
    Complex num = fn(up) - fn(dn);
    Real two_h = Real(2) * h;
    return Complex{num.re / two_h, num.im / two_h};
  };
  Complex d1 = diff(hstep);
  Complex d2 = diff(hstep / Real(2));
  // one Richardson level: (4 d2 - d1) / 3
  Complex value = (Real(4) * d2 - d1) / Complex(3);
  Real err = abs(d2 - d1);
  return {value, err};
}

}  // namespace shintani
