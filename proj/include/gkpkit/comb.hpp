// Copyright (c) 2026 gkpkit contributors
// SPDX-License-Identifier: MIT
//
// Gaussian-weighted Dirac combs convolved with Gaussian kernels -- the
// building block of every wave-function representation in this library.
//
// Two comb flavours (period Gamma, envelope variance mu, characteristic a):
//
//   plain   E(x)  = exp(-x^2/2mu) * sum_s delta(x - (s+a)Gamma)
//   phased  Et(x) = exp(-x^2/2mu) * sum_s exp(2*pi*i*a*s) delta(x + s*Gamma)
//
// Their convolutions with G_nu(x) = (2*pi*nu)^(-1/2) exp(-x^2/2nu) have
// closed forms in terms of the theta function:
//
//   (E * G_nu)(x)  = sqrt(2*pi*mu/Gamma^2) G_{mu+nu}(x)
//                    * theta[0; a](-mu x / ((mu+nu)Gamma), tau)
//   (Et * G_nu)(x) = sqrt(2*pi*mu/Gamma^2) G_{mu+nu}(x)
//                    * theta[-a; 0](+mu x / ((mu+nu)Gamma), tau)
//
// with tau = 2*pi*i*mu*nu / ((mu+nu) Gamma^2) in both cases.  The direct
// truncated summation of the defining series is kept as a first-class
// evaluation route so each path can serve as the other's cross-check.

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "gkpkit/errors.hpp"
#include "gkpkit/series.hpp"
#include "gkpkit/theta.hpp"

namespace gkpkit {

enum class PhaseMode { plain, phased };
enum class CombRoute { theta_form, direct_sum };

struct CombSpec {
  double mu = 1.0;      // Gaussian envelope variance of the comb weights
  double period = 1.0;  // comb interval Gamma
  double shift = 0.0;   // characteristic a (plain: peak offset; phased: phase unit)
  PhaseMode phase_mode = PhaseMode::plain;

  void validate() const {
    if (!(mu > 0.0) || !std::isfinite(mu))
      throw std::domain_error("CombSpec: mu must be positive");
    if (!(period > 0.0) || !std::isfinite(period))
      throw std::domain_error("CombSpec: period must be positive");
    if (!std::isfinite(shift))
      throw std::domain_error("CombSpec: shift must be finite");
  }
};

// Normalized Gaussian kernel G_v(x) = (2*pi*v)^(-1/2) exp(-x^2 / 2v).
inline double gauss_kernel(double variance, double x) {
  return std::exp(-x * x / (2.0 * variance)) /
         std::sqrt(2.0 * detail::pi * variance);
}

// (E * G_nu)(x) or (Et * G_nu)(x) depending on spec.phase_mode.  The plain
// mode yields a real value (returned as complex with zero imaginary part).
inline std::complex<double> comb_gauss(const CombSpec& spec, double nu, double x,
                                       const SeriesControl& ctrl,
                                       CombRoute route = CombRoute::theta_form) {
  spec.validate();
  validate(ctrl);
  if (!(nu > 0.0) || !std::isfinite(nu))
    throw std::domain_error("comb_gauss: nu must be positive");
  const double mu = spec.mu;
  const double g = spec.period;
  const double a = spec.shift;

  if (route == CombRoute::theta_form) {
    const double msum = mu + nu;
    const double factor =
        std::sqrt(2.0 * detail::pi * mu / (g * g)) * gauss_kernel(msum, x);
    const std::complex<double> tau(0.0,
                                   2.0 * detail::pi * mu * nu / (msum * g * g));
    const double zarg = mu * x / (msum * g);
    if (spec.phase_mode == PhaseMode::plain)
      return factor * theta_char({0.0, a, {-zarg, 0.0}, tau}, ctrl);
    return factor * theta_char({-a, 0.0, {zarg, 0.0}, tau}, ctrl);
  }

  // Direct summation, truncated where the envelope weight falls below
  // ctrl.tol relative to its unit peak.
  const double reach = std::sqrt(2.0 * mu * std::max(0.0, -std::log(ctrl.tol)));
  const int smax = static_cast<int>(std::ceil(reach / g + std::abs(a))) + 1;
  if (smax > ctrl.max_terms)
    throw nonconvergence_error("comb_gauss: direct sum exceeds max_terms");

  std::complex<double> sum(0.0, 0.0);
  if (spec.phase_mode == PhaseMode::plain) {
    for (int s = -smax; s <= smax; ++s) {
      const double c = (s + a) * g;
      sum += std::exp(-c * c / (2.0 * mu)) * gauss_kernel(nu, x - c);
    }
  } else {
    for (int s = -smax; s <= smax; ++s) {
      const double c = s * g;
      sum += std::exp(-c * c / (2.0 * mu)) *
             std::polar(1.0, 2.0 * detail::pi * a * s) * gauss_kernel(nu, x + c);
    }
  }
  return sum;
}

}  // namespace gkpkit
