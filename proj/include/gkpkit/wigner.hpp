// Copyright (c) 2026 gkpkit contributors
// SPDX-License-Identifier: MIT
//
// Wigner functions of approximate grid states.  For normalized logical
// states |j>, |j'> of one code, this module evaluates the phase-space
// representation of the operator |j><j'|,
//
//   W(q, p) = (1/pi) * integral e^{2ipx} <q-x|j> <j'|q+x> dx,
//
// normalized so that the full phase-space integral equals <j'|j> and the
// p-marginal equals the position density psi_j(q) psi_j'(q).
//
// Because both wavefunctions are Gaussian combs convolved with Gaussian
// kernels, W itself resums in closed form, and it does so in three
// structurally different ways that serve as mutual cross-checks:
//
//   comb_product  — W factorizes into a plain comb-Gaussian convolution in
//                   q times a phased one in p, summed over the two half-
//                   integer characteristic branches.  Cheapest and the
//                   default.
//   theta_form    — the q factor is kept as a comb convolution while the
//                   whole p dependence collapses into a Gaussian prefactor
//                   times one theta value per branch.
//   riemann_theta — a single genus-2 theta value at a fixed 2x2 aspect
//                   carries the complete (q, p) dependence.  Evaluated
//                   through the scaled joint representation because the
//                   bare theta factor alone overflows far from the origin
//                   where the Gaussian prefactor tames it.
//
// The routes share only the normalization constants, so agreement between
// them exercises every closed form end to end.

#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "gkpkit/code_params.hpp"
#include "gkpkit/comb.hpp"
#include "gkpkit/errors.hpp"
#include "gkpkit/observables.hpp"
#include "gkpkit/parallel.hpp"
#include "gkpkit/riemann_theta.hpp"
#include "gkpkit/series.hpp"
#include "gkpkit/theta.hpp"

namespace gkpkit {

/// Independent evaluation strategies for the Wigner function.  All three
/// must agree; wigner_point_checked surfaces any disagreement.
enum class WignerRoute {
  comb_product,   ///< product of a q-side and a p-side comb convolution
  theta_form,     ///< q-side comb convolution times a resummed theta factor
  riemann_theta,  ///< single genus-2 theta value
};

/// Rectangular phase-space sampling window, inclusive of all edges.
struct PhaseSpaceGrid {
  double q_min = -1.0;
  double q_max = 1.0;
  double p_min = -1.0;
  double p_max = 1.0;
  int nq = 2;  ///< number of q samples (>= 2)
  int np = 2;  ///< number of p samples (>= 2)

  void validate() const {
    if (!(std::isfinite(q_min) && std::isfinite(q_max) && q_min < q_max))
      throw std::domain_error("PhaseSpaceGrid: require finite q_min < q_max");
    if (!(std::isfinite(p_min) && std::isfinite(p_max) && p_min < p_max))
      throw std::domain_error("PhaseSpaceGrid: require finite p_min < p_max");
    if (nq < 2 || np < 2)
      throw std::domain_error("PhaseSpaceGrid: require nq >= 2 and np >= 2");
  }
};

/// One evaluated phase-space point.
struct WignerSample {
  double q = 0.0;
  double p = 0.0;
  std::complex<double> value{0.0, 0.0};
};

namespace detail {

/// Immutable per-(code, j, j') data shared by every phase-space point:
/// the two theta characteristics and the overlap normalization.
struct WignerPlan {
  StandardParams params;
  int j = 0;
  int j_prime = 0;
  double a_sum = 0.0;      ///< (j + j') / 2d
  double a_diff = 0.0;     ///< (j - j') / 2d
  double norm_scale = 1.0; ///< 1 / sqrt(N_j N_j')
};

inline WignerPlan wigner_plan(const StandardParams& p, int j, int j_prime,
                              const SeriesControl& ctrl) {
  p.validate();
  validate(ctrl);
  require_index_in_range(p, j, "wigner: j out of range");
  require_index_in_range(p, j_prime, "wigner: j_prime out of range");
  const double d = static_cast<double>(p.label.d);
  WignerPlan plan;
  plan.params = p;
  plan.j = j;
  plan.j_prime = j_prime;
  plan.a_sum = (static_cast<double>(j) + static_cast<double>(j_prime)) / (2.0 * d);
  plan.a_diff = (static_cast<double>(j) - static_cast<double>(j_prime)) / (2.0 * d);
  const double nj = normalization_for_index(p, j, ctrl);
  const double njp = normalization_for_index(p, j_prime, ctrl);
  if (!(nj > 0.0) || !(njp > 0.0))
    throw std::domain_error("wigner: normalization closed form not positive");
  plan.norm_scale = 1.0 / std::sqrt(nj * njp);
  return plan;
}

/// Both routes below share the q-side factor: a plain comb of period Gamma
/// and envelope variance Lambda/(4 sigma_p2) convolved with G_{sigma_q2}.
inline std::complex<double> wigner_q_factor(const WignerPlan& plan, double shift,
                                            double q, const SeriesControl& ctrl) {
  const StandardParams& sp = plan.params;
  const double mu = sp.Lambda() / (4.0 * sp.sigma_p2);
  return comb_gauss(CombSpec{mu, sp.gamma_spacing, shift, PhaseMode::plain},
                    sp.sigma_q2, q, ctrl);
}

inline std::complex<double> wigner_comb_product(const WignerPlan& plan, double q,
                                                double pc, const SeriesControl& ctrl) {
  const StandardParams& sp = plan.params;
  const double lam = sp.Lambda();
  const double mu_p = lam / (4.0 * sp.sigma_q2);
  const double period_p = pi * lam / sp.gamma_spacing;
  const auto p_factor = [&](double shift) {
    return comb_gauss(CombSpec{mu_p, period_p, shift, PhaseMode::phased},
                      sp.sigma_p2, pc, ctrl);
  };
  const std::complex<double> total =
      wigner_q_factor(plan, plan.a_sum, q, ctrl) * p_factor(plan.a_diff) +
      wigner_q_factor(plan, plan.a_sum + 0.5, q, ctrl) * p_factor(plan.a_diff + 0.5);
  return plan.norm_scale * total;
}

inline std::complex<double> wigner_theta_form(const WignerPlan& plan, double q,
                                              double pc, const SeriesControl& ctrl) {
  const StandardParams& sp = plan.params;
  const double lam = sp.Lambda();
  const double g = sp.gamma_spacing;
  const std::complex<double> tau{0.0, 2.0 * g * g * sp.sigma_p2 / (pi * lam)};
  const std::complex<double> z{-g * pc / pi, 0.0};
  const auto theta_factor = [&](double a_char) {
    return theta_char({a_char, 0.0, z, tau}, ctrl);
  };
  const std::complex<double> total =
      wigner_q_factor(plan, plan.a_sum, q, ctrl) * theta_factor(plan.a_diff) +
      wigner_q_factor(plan, plan.a_sum + 0.5, q, ctrl) *
          theta_factor(plan.a_diff + 0.5);
  const double front =
      g / (pi * std::sqrt(lam)) * std::exp(-2.0 * sp.sigma_q2 * pc * pc);
  return plan.norm_scale * front * total;
}

inline std::complex<double> wigner_riemann(const WignerPlan& plan, double q,
                                           double pc, const SeriesControl& ctrl) {
  const StandardParams& sp = plan.params;
  const double lam = sp.Lambda();
  const double d1 = 0.5 * sp.gamma_spacing;                // scale of the q axis
  const double d2 = pi * lam / sp.gamma_spacing;           // scale of the p axis
  const std::complex<double> i_unit{0.0, 1.0};
  const std::complex<double> i_over_2pi = i_unit / (2.0 * pi);
  const double dd = static_cast<double>(sp.label.d);

  RiemannThetaArgs args;
  args.a_vec = {(static_cast<double>(plan.j) + static_cast<double>(plan.j_prime)) / dd,
                0.0};
  args.b_vec = {0.0, static_cast<double>(plan.j_prime) / dd};
  args.z_vec = {-i_over_2pi * d1 * q / sp.sigma_q2,
                -i_over_2pi * d2 * pc / sp.sigma_p2};
  args.tau_mat[0][0] =
      i_over_2pi * d1 * d1 * (4.0 * sp.sigma_p2 / lam + 1.0 / sp.sigma_q2);
  args.tau_mat[1][1] =
      i_over_2pi * d2 * d2 * (4.0 * sp.sigma_q2 / lam + 1.0 / sp.sigma_p2);
  args.tau_mat[0][1] = std::complex<double>{-0.5, 0.0};
  args.tau_mat[1][0] = std::complex<double>{-0.5, 0.0};

  const RiemannJoint joint = riemann_joint(args, ctrl);
  const double log_gauss =
      -q * q / (2.0 * sp.sigma_q2) - pc * pc / (2.0 * sp.sigma_p2);
  const double front = 1.0 / (2.0 * pi * std::sqrt(sp.sigma_q2 * sp.sigma_p2));
  return plan.norm_scale * front * joint.value *
         std::exp(joint.log_scale + log_gauss);
}

inline std::complex<double> wigner_route_point(const WignerPlan& plan,
                                               WignerRoute route, double q,
                                               double pc,
                                               const SeriesControl& ctrl) {
  if (!(std::isfinite(q) && std::isfinite(pc)))
    throw std::domain_error("wigner: phase-space point must be finite");
  switch (route) {
    case WignerRoute::comb_product:
      return wigner_comb_product(plan, q, pc, ctrl);
    case WignerRoute::theta_form:
      return wigner_theta_form(plan, q, pc, ctrl);
    case WignerRoute::riemann_theta:
      return wigner_riemann(plan, q, pc, ctrl);
  }
  throw std::domain_error("wigner: unknown route");
}

}  // namespace detail

/// W(q, p) for the operator |j><j'| between normalized logical states of
/// the code described by `p` (the logical index stored in p.label is
/// ignored).  Real up to roundoff when j = j'.
inline std::complex<double> wigner_point(const StandardParams& p, int j,
                                         int j_prime, double q, double pc,
                                         const SeriesControl& ctrl = {},
                                         WignerRoute route = WignerRoute::comb_product) {
  const detail::WignerPlan plan = detail::wigner_plan(p, j, j_prime, ctrl);
  return detail::wigner_route_point(plan, route, q, pc, ctrl);
}

/// Evaluates all three routes and returns the comb_product value after
/// verifying that the largest pairwise deviation, relative to
/// max(1, |W|), stays within 10x the series tolerance.  Throws
/// route_disagreement_error otherwise.
inline std::complex<double> wigner_point_checked(const StandardParams& p, int j,
                                                 int j_prime, double q, double pc,
                                                 const SeriesControl& ctrl = {}) {
  const detail::WignerPlan plan = detail::wigner_plan(p, j, j_prime, ctrl);
  const std::complex<double> via_comb =
      detail::wigner_route_point(plan, WignerRoute::comb_product, q, pc, ctrl);
  const std::complex<double> via_theta =
      detail::wigner_route_point(plan, WignerRoute::theta_form, q, pc, ctrl);
  const std::complex<double> via_riemann =
      detail::wigner_route_point(plan, WignerRoute::riemann_theta, q, pc, ctrl);

  const double spread = std::max({std::abs(via_comb - via_theta),
                                  std::abs(via_comb - via_riemann),
                                  std::abs(via_theta - via_riemann)});
  const double scale = std::max(
      1.0, std::max({std::abs(via_comb), std::abs(via_theta), std::abs(via_riemann)}));
  if (spread > 10.0 * ctrl.tol * scale) {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "wigner routes disagree at (q=%.6g, p=%.6g): "
                  "comb=(%.12g,%.12g) theta=(%.12g,%.12g) riemann=(%.12g,%.12g)",
                  q, pc, via_comb.real(), via_comb.imag(), via_theta.real(),
                  via_theta.imag(), via_riemann.real(), via_riemann.imag());
    throw route_disagreement_error(buf);
  }
  return via_comb;
}

/// Samples W on the inclusive rectangular grid, row-major with q as the
/// outer (slow) coordinate and p as the inner one, both ascending.  The
/// element at index iq * grid.np + ip holds the sample at (q_iq, p_ip).
/// Work is shared across threads (see parallel.hpp); results are
/// deterministic regardless of the thread count.
inline std::vector<WignerSample> wigner_grid(const StandardParams& p, int j,
                                             int j_prime, const PhaseSpaceGrid& grid,
                                             const SeriesControl& ctrl = {},
                                             WignerRoute route = WignerRoute::comb_product) {
  grid.validate();
  const detail::WignerPlan plan = detail::wigner_plan(p, j, j_prime, ctrl);
  const double dq = (grid.q_max - grid.q_min) / static_cast<double>(grid.nq - 1);
  const double dp = (grid.p_max - grid.p_min) / static_cast<double>(grid.np - 1);
  const std::size_t total =
      static_cast<std::size_t>(grid.nq) * static_cast<std::size_t>(grid.np);

  std::vector<WignerSample> samples(total);
  detail::parallel_for(total, [&](std::size_t idx) {
    const std::size_t iq = idx / static_cast<std::size_t>(grid.np);
    const std::size_t ip = idx % static_cast<std::size_t>(grid.np);
    WignerSample& sample = samples[idx];
    sample.q = grid.q_min + static_cast<double>(iq) * dq;
    sample.p = grid.p_min + static_cast<double>(ip) * dp;
    sample.value = detail::wigner_route_point(plan, route, sample.q, sample.p, ctrl);
  });
  return samples;
}

}  // namespace gkpkit
