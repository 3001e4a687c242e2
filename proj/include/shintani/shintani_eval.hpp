#pragma once

#include "shintani/adelic.hpp"
#include "shintani/gamma.hpp"

namespace shintani {

struct EvalConfig {
  long bits = 128;        // target precision of results
  double step = 0.05;     // trapezoid step in log coordinates
  double window_neg = 0;  // explicit truncation overrides (0 = derive)
  double window_pos = 0;
  long window_bits = 0;   // truncation target in bits (0 = max(40, bits/3))
  double min_re = 0.1;    // smallest Re(s_mu) accepted by direct quadrature

  long effective_window_bits() const {
    return window_bits > 0 ? window_bits : std::max(40L, bits / 3);
  }
};

// closed rational-exponential representation of F(Phi, B):
//   F(t) = sum_blocks sum_v c_v exp(-2pi<t,v>) / prod_j (1 - exp(-2pi m_j <t,u_j>))
// with <t,v> = sum_mu t_mu rho_mu(v). One block per (simple cone, summand
// of Phi); cone coefficient, orientation and summand coefficient are folded
// into the numerator coefficients c_v.
struct RExpBlock {
  std::vector<FieldElem> gens;   // scaled generators u'_j (g_j u_j in the period lattice)
  std::vector<long> m;           // per-factor period multiplier (1 after scaling)
  std::vector<std::pair<Complex, FieldElem>> numerator;
  std::vector<Rat> min_tau;      // per-factor smallest box coordinate (decay data)
};

struct RExpForm {
  const NumberField* field = nullptr;
  std::vector<RExpBlock> blocks;
  size_t numerator_terms() const {
    size_t t = 0;
    for (const auto& b : blocks) t += b.numerator.size();
    return t;
  }
};

// m_multiplier > 1 rebuilds with coarser boxes (well-definedness testing)
RExpForm build_form(const LatticeFunction& phi, const Fan& fan, long m_multiplier = 1);

// single-point evaluation; escalates precision internally so the result is
// accurate to ~2^{-bits/2} absolute despite inter-block cancellation
Complex eval_F(const RExpForm& form, const std::vector<Real>& t, long bits);

struct QuadResult {
  Complex value;
  Real err;  // crude truncation/step estimate
};

// orthant Mellin integral L(g, s, f, rho) by trapezoid in log coordinates
QuadResult l_orthant(const std::vector<int>& g, const std::vector<Complex>& s,
                     const RExpForm& form, const EvalConfig& cfg);

// normalized Shintani L-function and its completion
QuadResult l_sigma(const std::vector<int>& sigma, const std::vector<Complex>& s,
                   const RExpForm& form, const EvalConfig& cfg);
Complex l_sigma_completed(const std::vector<int>& sigma, const std::vector<Complex>& s,
                          const RExpForm& form, const EvalConfig& cfg);

enum class FeConstant { i_sigma_inv, i_sigma, i_one_minus_sigma };
enum class EvalRoute { automatic, direct, functional_equation };

struct ContinuationResult {
  Complex value;
  Real err;
  EvalRoute route;
};

// holomorphic continuation: direct quadrature when Re(s) is in range, the
// functional equation through (fourier(Phi), dual fan) otherwise; trivial
// zeros are realized exactly through the reciprocal gamma factors
ContinuationResult l_sigma_continued(const std::vector<int>& sigma, const std::vector<Complex>& s,
                                     const LatticeFunction& phi, const Fan& fan,
                                     const EvalConfig& cfg, EvalRoute route = EvalRoute::automatic,
                                     FeConstant fe = FeConstant::i_sigma_inv);

// first partial derivative along axis mu (0-based) by central differences
// with one Richardson step; returns (value, error estimate)
struct DerivResult {
  Complex value;
  Real err;
};
DerivResult partial_derivative(const std::function<Complex(const std::vector<Complex>&)>& fn,
                               const std::vector<Complex>& point, size_t mu,
                               const EvalConfig& cfg);

}  // namespace shintani
