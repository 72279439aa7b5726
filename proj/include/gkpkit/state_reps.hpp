// Copyright (c) 2026 gkpkit contributors
// SPDX-License-Identifier: MIT
//
// Representations of standard-form approximate grid states.
//
// A standard-form state is fixed by (σq², σp², Γ, d, j).  Its position
// wavefunction is a plain Gaussian comb (envelope variance Λ/(2σp²),
// period Γ, shift j/d) convolved with a Gaussian of variance 2σq²; its
// momentum wavefunction is the phased comb (envelope variance Λ/(2σq²),
// period 2πΛ/Γ, phase unit j/d) convolved with a Gaussian of variance
// 2σp², following the convention ⟨p|q⟩ = e^{-ipq}/√(2π).  This module
// evaluates those wavefunctions (bare or normalized), the Zak / grid
// transform, and number-basis coefficients.

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "gkpkit/code_params.hpp"
#include "gkpkit/comb.hpp"
#include "gkpkit/errors.hpp"
#include "gkpkit/hermite.hpp"
#include "gkpkit/observables.hpp"
#include "gkpkit/series.hpp"

namespace gkpkit {

/// One sampled amplitude: coordinate (position or momentum) and value.
struct AmplitudeSample {
  double x = 0.0;
  std::complex<double> value{0.0, 0.0};
};

namespace detail {

inline CombSpec position_comb(const StandardParams& p) {
  CombSpec spec;
  spec.mu = p.Lambda() / (2.0 * p.sigma_p2);
  spec.period = p.gamma_spacing;
  spec.shift = static_cast<double>(p.label.j) / static_cast<double>(p.label.d);
  spec.phase_mode = PhaseMode::plain;
  return spec;
}

inline CombSpec momentum_comb(const StandardParams& p) {
  CombSpec spec;
  spec.mu = p.Lambda() / (2.0 * p.sigma_q2);
  spec.period = 2.0 * pi * p.Lambda() / p.gamma_spacing;
  spec.shift = static_cast<double>(p.label.j) / static_cast<double>(p.label.d);
  spec.phase_mode = PhaseMode::phased;
  return spec;
}

/// Normalization prefactor of the position wavefunction, √(2Γ/(√Λ·N)).
inline double position_prefactor(const StandardParams& p, const SeriesControl& ctrl) {
  return std::sqrt(2.0 * p.gamma_spacing /
                   (std::sqrt(p.Lambda()) * normalization(p, ctrl)));
}

/// Normalization prefactor of the momentum wavefunction, √(4π√Λ/(Γ·N)).
inline double momentum_prefactor(const StandardParams& p, const SeriesControl& ctrl) {
  return std::sqrt(4.0 * pi * std::sqrt(p.Lambda()) /
                   (p.gamma_spacing * normalization(p, ctrl)));
}

}  // namespace detail

/// Position wavefunction at q (real by the standard-form phase
/// convention).  With `normalized` set the √(2Γ/(√Λ·N)) prefactor is
/// included; otherwise the bare comb-convolution value is returned.
inline double position_amplitude(const StandardParams& p, double q, bool normalized,
                                 const SeriesControl& ctrl = {},
                                 CombRoute route = CombRoute::theta_form) {
  p.validate();
  validate(ctrl);
  const double bare =
      comb_gauss(detail::position_comb(p), 2.0 * p.sigma_q2, q, ctrl, route).real();
  return normalized ? detail::position_prefactor(p, ctrl) * bare : bare;
}

/// Momentum wavefunction at mom; phases come from the phased comb
/// exactly as defined (complex in general, real for j = 0).
inline std::complex<double> momentum_amplitude(const StandardParams& p, double mom,
                                               bool normalized,
                                               const SeriesControl& ctrl = {},
                                               CombRoute route = CombRoute::theta_form) {
  p.validate();
  validate(ctrl);
  const std::complex<double> bare =
      comb_gauss(detail::momentum_comb(p), 2.0 * p.sigma_p2, mom, ctrl, route);
  return normalized ? detail::momentum_prefactor(p, ctrl) * bare : bare;
}

/// Grid (Zak) transform of the normalized state,
///
///   φ(u, v) = √(α_d·d) Σ_s e^{-2πi v (s + u/2)} ψ(α_d·d·(u + s)),
///
/// truncated where the position envelope e^{-x²σp²} drops below
/// ctrl.tol.  Satisfies φ(u+n₁, v+n₂) = e^{-πi(n₁n₂ + u n₂ - v n₁)} φ(u,v)
/// and has unit norm on the unit square.
inline std::complex<double> grid_amplitude(const StandardParams& p, double u, double v,
                                           const SeriesControl& ctrl = {}) {
  p.validate();
  validate(ctrl);
  const double unit = p.label.alpha_d() * static_cast<double>(p.label.d);
  const double reach =
      std::sqrt(std::max(1.0, -std::log(ctrl.tol)) / p.sigma_p2) / unit;
  const long s_lo = static_cast<long>(std::floor(-u - reach));
  const long s_hi = static_cast<long>(std::ceil(-u + reach));
  if (s_hi - s_lo + 1 > static_cast<long>(ctrl.max_terms))
    throw nonconvergence_error(
        "grid_amplitude: comb range exceeds ctrl.max_terms");

  const double prefactor = detail::position_prefactor(p, ctrl);
  std::complex<double> acc{0.0, 0.0};
  for (long s = s_lo; s <= s_hi; ++s) {
    const double sd = static_cast<double>(s);
    const double psi = position_amplitude(p, unit * (u + sd), false, ctrl);
    acc += std::polar(1.0, -2.0 * detail::pi * v * (sd + 0.5 * u)) * psi;
  }
  return std::sqrt(unit) * prefactor * acc;
}

/// Number-basis coefficients c_n = ∫ ψ_n(q) ψ(q) dq, n = 0..n_max, of the
/// normalized state, via Gauss-Hermite quadrature over 2·n_max + 512
/// nodes.  Σ|c_n|² ≤ 1, with deficit equal to the truncated tail weight.
inline std::vector<std::complex<double>> fock_coefficients(const StandardParams& p,
                                                           int n_max,
                                                           const SeriesControl& ctrl = {}) {
  p.validate();
  validate(ctrl);
  if (n_max < 0) throw std::domain_error("fock_coefficients: n_max must be >= 0");

  const HermiteRule rule = hermite_rule(2 * n_max + 512);
  const CombSpec comb = detail::position_comb(p);
  const double prefactor = detail::position_prefactor(p, ctrl);
  std::vector<double> acc(static_cast<std::size_t>(n_max) + 1, 0.0);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    const double state =
        prefactor * comb_gauss(comb, 2.0 * p.sigma_q2, x, ctrl).real();
    if (state == 0.0) continue;
    const double scaled = rule.weights[i] * state;
    const std::vector<double> psi = hermite_functions(n_max, x);
    for (std::size_t n = 0; n < acc.size(); ++n) acc[n] += scaled * psi[n];
  }

  std::vector<std::complex<double>> out(acc.size());
  for (std::size_t n = 0; n < acc.size(); ++n) out[n] = {acc[n], 0.0};
  return out;
}

}  // namespace gkpkit
