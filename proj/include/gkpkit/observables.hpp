// Copyright (c) 2026 gkpkit contributors
// SPDX-License-Identifier: MIT
//
// Closed-form observables of approximate grid states.
//
// Every quantity here follows from one structural fact: the position and
// momentum wavefunctions of an approximate grid state are Gaussian combs
// convolved with Gaussian kernels, so Gaussian integrals of products of
// two such states resum into one-dimensional theta functions with rational
// characteristics.  This module provides
//
//   * normalization      — the squared norm N of the unnormalized state,
//   * inner_product      — overlap of two logical states of the same code,
//   * asymptotic forms   — high-squeezing limits of both,
//   * riemann_variants   — the same quantities (plus the average photon
//                          number) evaluated through a single genus-2
//                          Riemann theta value, used as an independent
//                          cross-check of the factorized 1-D route,
//
// together with detail-level helpers that compute the second moments
// ⟨q̂²⟩ and ⟨p̂²⟩ analytically (log-derivatives of theta functions); the
// public multi-route average-photon dispatcher lives in photon.hpp.

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "gkpkit/code_params.hpp"
#include "gkpkit/riemann_theta.hpp"
#include "gkpkit/series.hpp"
#include "gkpkit/theta.hpp"

namespace gkpkit {

/// Evaluation strategies for the average photon number.  All four must
/// agree; disagreement indicates a defect and is surfaced by the checked
/// dispatcher in photon.hpp.
enum class PhotonRoute {
  theta_formula,    ///< analytic log-derivative of the theta closed form
  moment_integral,  ///< quadrature of q²- and p²-weighted marginals
  fock_sum,         ///< Σ n |c_n|² over number-basis coefficients
  riemann_theta,    ///< log-derivative of the genus-2 theta closed form
};

/// Average photon number together with the quadrature moments it is
/// built from; q2_moment + p2_moment = 2·n_avg + 1 holds by construction.
struct PhotonBreakdown {
  double n_avg = 0.0;      ///< ⟨n̂⟩
  double q2_moment = 0.0;  ///< ⟨q̂²⟩
  double p2_moment = 0.0;  ///< ⟨p̂²⟩
  PhotonRoute route = PhotonRoute::theta_formula;
};

namespace detail {

/// Pure-imaginary theta aspects entering all closed forms below:
/// position-side factors are evaluated at tau = i·t_p with
/// t_p = 2 Γ² σp² / (π Λ), momentum-side ones at tau = i·t_q with
/// t_q = 2π σq² Λ / Γ².
struct ThetaAspects {
  double t_p = 0.0;
  double t_q = 0.0;
};

inline ThetaAspects theta_aspects(const StandardParams& p) {
  const double lam = p.Lambda();
  const double g2 = p.gamma_spacing * p.gamma_spacing;
  ThetaAspects out;
  out.t_p = 2.0 * g2 * p.sigma_p2 / (pi * lam);
  out.t_q = 2.0 * pi * p.sigma_q2 * lam / g2;
  return out;
}

/// Core two-term theta product shared by normalization (a = j/d, b = 0)
/// and inner products (a = (j+j')/2d, b = (j-j')/2d):
///
///   ϑ[a; 0](0, i t_p) · ϑ[0; b](0, i t_q)
///     + ϑ[a + 1/2; 0](0, i t_p) · ϑ[0; b + 1/2](0, i t_q).
inline std::complex<double> overlap_theta_product(const StandardParams& p,
                                                  double a_char, double b_char,
                                                  const SeriesControl& ctrl) {
  const ThetaAspects t = theta_aspects(p);
  const std::complex<double> tau_p{0.0, t.t_p};
  const std::complex<double> tau_q{0.0, t.t_q};
  const std::complex<double> plain =
      theta_char({a_char, 0.0, {0.0, 0.0}, tau_p}, ctrl) *
      theta_char({0.0, b_char, {0.0, 0.0}, tau_q}, ctrl);
  const std::complex<double> half =
      theta_char({a_char + 0.5, 0.0, {0.0, 0.0}, tau_p}, ctrl) *
      theta_char({0.0, b_char + 0.5, {0.0, 0.0}, tau_q}, ctrl);
  return plain + half;
}

inline double normalization_for_index(const StandardParams& p, int j,
                                      const SeriesControl& ctrl) {
  const double a = static_cast<double>(j) / static_cast<double>(p.label.d);
  return overlap_theta_product(p, a, 0.0, ctrl).real();
}

inline void require_index_in_range(const StandardParams& p, int j,
                                   const char* what) {
  if (j < 0 || j >= p.label.d) throw std::domain_error(what);
}

}  // namespace detail

/// Squared norm N of the unnormalized logical state described by `p`
/// (the state whose position wavefunction is the bare comb-Gaussian
/// convolution times the standard prefactor).  Strictly positive.
inline double normalization(const StandardParams& p, const SeriesControl& ctrl = {}) {
  p.validate();
  validate(ctrl);
  const double n = detail::normalization_for_index(p, p.label.j, ctrl);
  if (!(n > 0.0) || !std::isfinite(n))
    throw std::domain_error("normalization: closed form did not yield a positive value");
  return n;
}

/// Overlap ⟨j | j'⟩ of two normalized logical states of the same code
/// (same σq², σp², Γ, d; the logical index stored in p.label is ignored).
/// Equals 1 when j = j'; magnitude never exceeds 1.
inline std::complex<double> inner_product(const StandardParams& p, int j,
                                          int j_prime,
                                          const SeriesControl& ctrl = {}) {
  p.validate();
  validate(ctrl);
  detail::require_index_in_range(p, j, "inner_product: j out of range");
  detail::require_index_in_range(p, j_prime, "inner_product: j_prime out of range");
  const double d = static_cast<double>(p.label.d);
  const double a = (static_cast<double>(j) + static_cast<double>(j_prime)) / (2.0 * d);
  const double b = (static_cast<double>(j) - static_cast<double>(j_prime)) / (2.0 * d);
  const std::complex<double> raw = detail::overlap_theta_product(p, a, b, ctrl);
  const double nj = detail::normalization_for_index(p, j, ctrl);
  const double njp = detail::normalization_for_index(p, j_prime, ctrl);
  return raw / std::sqrt(nj * njp);
}

/// High-squeezing limit of the normalization constant: 1/sqrt(4 σq² σp²).
inline double asymptotic_normalization(double sigma_q2, double sigma_p2) {
  if (!(sigma_q2 > 0.0) || !(sigma_p2 > 0.0) || !std::isfinite(sigma_q2) ||
      !std::isfinite(sigma_p2))
    throw std::domain_error("asymptotic_normalization: variances must be positive");
  return 1.0 / std::sqrt(4.0 * sigma_q2 * sigma_p2);
}

/// High-squeezing form of |⟨j | j'⟩|: exp[-(j'-j)² Γ² / (8 d² σq²)].
/// Valid for |j-j'|/(2d) well below 1/2; close to that edge the true
/// overlap approaches twice this value (the nearest-image pair of the
/// momentum comb contributes coherently), and no crossover rule is
/// applied here — callers comparing against exact values near the edge
/// should expect up to a factor of 2.
inline double asymptotic_overlap(const StandardParams& p, int j,
                                 int j_prime) {
  p.validate();
  detail::require_index_in_range(p, j, "asymptotic_overlap: j out of range");
  detail::require_index_in_range(p, j_prime, "asymptotic_overlap: j_prime out of range");
  const double d = static_cast<double>(p.label.d);
  const double diff = static_cast<double>(j_prime) - static_cast<double>(j);
  const double g2 = p.gamma_spacing * p.gamma_spacing;
  return std::exp(-diff * diff * g2 / (8.0 * d * d * p.sigma_q2));
}

namespace detail {

/// ⟨q̂²⟩ and ⟨p̂²⟩ from the analytic tau-derivative of the normalization
/// closed form.  Writing N as the two-term product of theta factors, the
/// second moments are
///
///   ⟨q̂²⟩ = σq² - (i Γ²/π)   · (ϑ'_p1 ϑ_q1 + ϑ'_p2 ϑ_q2) / N,
///   ⟨p̂²⟩ = σp² - (i π Λ²/Γ²) · (ϑ_p1 ϑ'_q1 + ϑ_p2 ϑ'_q2) / N,
///
/// where primes denote d/dτ of the respective factor.  The derivative is
/// taken before specializing the aspect to its physical value, matching
/// the differentiate-then-evaluate order of the derivation.
inline PhotonBreakdown closed_form_moments(const StandardParams& p,
                                           const SeriesControl& ctrl) {
  const ThetaAspects t = theta_aspects(p);
  const double a = static_cast<double>(p.label.j) / static_cast<double>(p.label.d);
  const std::complex<double> tau_p{0.0, t.t_p};
  const std::complex<double> tau_q{0.0, t.t_q};

  const ThetaArgs p1{a, 0.0, {0.0, 0.0}, tau_p};
  const ThetaArgs p2{a + 0.5, 0.0, {0.0, 0.0}, tau_p};
  const ThetaArgs q1{0.0, 0.0, {0.0, 0.0}, tau_q};
  const ThetaArgs q2{0.0, 0.5, {0.0, 0.0}, tau_q};

  const std::complex<double> vp1 = theta_char(p1, ctrl);
  const std::complex<double> vp2 = theta_char(p2, ctrl);
  const std::complex<double> vq1 = theta_char(q1, ctrl);
  const std::complex<double> vq2 = theta_char(q2, ctrl);
  const std::complex<double> dp1 = theta_char_dtau(p1, ctrl);
  const std::complex<double> dp2 = theta_char_dtau(p2, ctrl);
  const std::complex<double> dq1 = theta_char_dtau(q1, ctrl);
  const std::complex<double> dq2 = theta_char_dtau(q2, ctrl);

  const double n = (vp1 * vq1 + vp2 * vq2).real();
  const double lam = p.Lambda();
  const double g2 = p.gamma_spacing * p.gamma_spacing;
  const std::complex<double> i_unit{0.0, 1.0};

  PhotonBreakdown out;
  out.route = PhotonRoute::theta_formula;
  out.q2_moment =
      p.sigma_q2 - (i_unit * (g2 / pi) * (dp1 * vq1 + dp2 * vq2)).real() / n;
  out.p2_moment =
      p.sigma_p2 -
      (i_unit * (pi * lam * lam / g2) * (vp1 * dq1 + vp2 * dq2)).real() / n;
  out.n_avg = 0.5 * (out.q2_moment + out.p2_moment - 1.0);
  return out;
}

/// Genus-2 aspect matrix shared by the Riemann-theta closed forms:
///
///   tau_R = [ i σp² Γ² / (2π Λ)        -1/2           ]
///           [        -1/2        2π i σq² Λ / Γ²      ].
inline std::array<std::array<std::complex<double>, 2>, 2> riemann_aspect(
    const StandardParams& p) {
  const double lam = p.Lambda();
  const double g2 = p.gamma_spacing * p.gamma_spacing;
  const std::complex<double> t11{0.0, p.sigma_p2 * g2 / (2.0 * pi * lam)};
  const std::complex<double> t22{0.0, 2.0 * pi * p.sigma_q2 * lam / g2};
  const std::complex<double> off{-0.5, 0.0};
  return {{{t11, off}, {off, t22}}};
}

inline RiemannThetaArgs riemann_overlap_args(const StandardParams& p,
                                             int j, int j_prime) {
  const double d = static_cast<double>(p.label.d);
  RiemannThetaArgs args;
  args.a_vec = {(static_cast<double>(j) + static_cast<double>(j_prime)) / d, 0.0};
  args.b_vec = {0.0, static_cast<double>(j_prime) / d};
  args.z_vec = {std::complex<double>{0.0, 0.0}, std::complex<double>{0.0, 0.0}};
  args.tau_mat = riemann_aspect(p);
  return args;
}

/// ⟨q̂²⟩ and ⟨p̂²⟩ from the genus-2 closed form.  The normalization is a
/// single Riemann theta value Θ at aspect tau_R; viewing tau_R as a
/// function of the envelope covariance and differentiating through the
/// diagonal entries gives
///
///   ⟨q̂²⟩ = σq² - Re[(i/π) · (Γ²/4)     · ∂Θ/∂τ₁₁ / Θ],
///   ⟨p̂²⟩ = σp² - Re[(i/π) · (π² Λ²/Γ²) · ∂Θ/∂τ₂₂ / Θ].
inline PhotonBreakdown riemann_moments(const StandardParams& p,
                                       const SeriesControl& ctrl) {
  const RiemannThetaArgs args = riemann_overlap_args(p, p.label.j, p.label.j);
  const RiemannJoint joint = riemann_joint(args, ctrl);
  if (!(std::abs(joint.value) > 0.0))
    throw std::domain_error("riemann_moments: vanishing theta value");
  const double lam = p.Lambda();
  const double g2 = p.gamma_spacing * p.gamma_spacing;
  const double m11 = 0.25 * g2;
  const double m22 = pi * pi * lam * lam / g2;
  const std::complex<double> i_over_pi{0.0, 1.0 / pi};

  PhotonBreakdown out;
  out.route = PhotonRoute::riemann_theta;
  out.q2_moment = p.sigma_q2 - (i_over_pi * m11 * joint.dtau11 / joint.value).real();
  out.p2_moment = p.sigma_p2 - (i_over_pi * m22 * joint.dtau22 / joint.value).real();
  out.n_avg = 0.5 * (out.q2_moment + out.p2_moment - 1.0);
  return out;
}

}  // namespace detail

/// Normalization, overlap and average photon number evaluated through the
/// genus-2 Riemann theta closed forms (one 2-D lattice sum instead of a
/// product of 1-D ones).  Cross-check companion of the factorized route:
/// each field agrees with its 1-D counterpart within tolerance.
struct RiemannVariants {
  double norm = 0.0;                      ///< N for logical index j
  std::complex<double> overlap{0.0, 0.0}; ///< ⟨j | j'⟩
  double n_avg = 0.0;                     ///< ⟨n̂⟩ for logical index j
};

inline RiemannVariants riemann_variants(const StandardParams& p, int j,
                                        int j_prime,
                                        const SeriesControl& ctrl = {}) {
  p.validate();
  validate(ctrl);
  detail::require_index_in_range(p, j, "riemann_variants: j out of range");
  detail::require_index_in_range(p, j_prime, "riemann_variants: j_prime out of range");

  const double nj =
      riemann_theta2(detail::riemann_overlap_args(p, j, j), ctrl).real();
  const double njp =
      riemann_theta2(detail::riemann_overlap_args(p, j_prime, j_prime), ctrl).real();
  if (!(nj > 0.0) || !(njp > 0.0))
    throw std::domain_error("riemann_variants: closed form did not yield a positive norm");

  RiemannVariants out;
  out.norm = nj;
  out.overlap = riemann_theta2(detail::riemann_overlap_args(p, j, j_prime), ctrl) /
                std::sqrt(nj * njp);

  StandardParams pj = p;
  pj.label.j = j;
  out.n_avg = detail::riemann_moments(pj, ctrl).n_avg;
  return out;
}

}  // namespace gkpkit
