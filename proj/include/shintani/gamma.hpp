#pragma once

#include <vector>

#include "shintani/complexnum.hpp"

namespace shintani {

// Gamma(z) for complex z at the current working precision (Spouge series,
// reflection for Re z < 1/2). Poles at non-positive integers return inf/nan;
// use recip_gamma for pole-safe composition.
Complex complex_gamma(const Complex& z);

// 1/Gamma(z): entire; returns exact 0 at non-positive integer z.
Complex recip_gamma(const Complex& z);

// Gamma_R(s) = pi^{-s/2} Gamma(s/2)
Complex gamma_r(const Complex& s);
// Gamma_C(s) = 2 (2 pi)^{-s} Gamma(s)
Complex gamma_c(const Complex& s);
// 1/Gamma_R(s), entire
Complex recip_gamma_r(const Complex& s);

// Gamma_sigma(s) = prod_mu Gamma_R(sigma(mu) + s_mu)
Complex gamma_sigma(const std::vector<int>& sigma, const std::vector<Complex>& s);
Complex recip_gamma_sigma(const std::vector<int>& sigma, const std::vector<Complex>& s);

// i_sigma = i^{#(sigma=1)}
Complex i_sigma(const std::vector<int>& sigma);

}  // namespace shintani
