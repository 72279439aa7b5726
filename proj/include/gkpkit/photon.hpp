// Copyright (c) 2026 gkpkit contributors
// SPDX-License-Identifier: MIT
//
// Average photon number of a standard-form state by four independent
// routes:
//
//   theta_formula   — analytic tau-derivative of the 1-D theta closed
//                     form of the normalization (observables.hpp),
//   moment_integral — adaptive quadrature of the q²- and p²-weighted
//                     position/momentum marginals,
//   fock_sum        — Σ n |c_n|² over number-basis coefficients with
//                     automatic truncation control,
//   riemann_theta   — tau-derivative of the genus-2 closed form.
//
// The routes share no evaluation machinery beyond the wavefunctions
// themselves, so their agreement is a strong end-to-end check; the
// checked dispatcher turns disagreement into an error.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "gkpkit/code_params.hpp"
#include "gkpkit/errors.hpp"
#include "gkpkit/observables.hpp"
#include "gkpkit/quadrature.hpp"
#include "gkpkit/series.hpp"
#include "gkpkit/state_reps.hpp"

namespace gkpkit {
namespace detail {

/// Coordinate cutoff beyond which the squared wavefunction envelope
/// e^{-2 v x²} (v = σp² for position, σq² for momentum) contributes less
/// than ~tol to the weighted moments.
inline double moment_cutoff(double envelope_variance, double tol) {
  const double exponent = std::max(30.0, -std::log(tol) + 12.0);
  return std::sqrt(exponent / (2.0 * envelope_variance));
}

inline PhotonBreakdown integral_moments(const StandardParams& p,
                                        const SeriesControl& ctrl) {
  const double quad_tol = std::max(1e-13, 0.1 * ctrl.tol);
  const double q_cut = moment_cutoff(p.sigma_p2, ctrl.tol);
  const double p_cut = moment_cutoff(p.sigma_q2, ctrl.tol);

  PhotonBreakdown out;
  out.route = PhotonRoute::moment_integral;
  out.q2_moment = integrate(
      [&](double q) {
        const double v = position_amplitude(p, q, true, ctrl);
        return q * q * v * v;
      },
      -q_cut, q_cut, quad_tol);
  out.p2_moment = integrate(
      [&](double mom) {
        const double m = std::abs(momentum_amplitude(p, mom, true, ctrl));
        return mom * mom * m * m;
      },
      -p_cut, p_cut, quad_tol);
  out.n_avg = 0.5 * (out.q2_moment + out.p2_moment - 1.0);
  return out;
}

inline PhotonBreakdown fock_moments(const StandardParams& p,
                                    const SeriesControl& ctrl) {
  const double accept = std::max(ctrl.tol, 1e-10);
  for (int n_max = 128; n_max <= 8192; n_max *= 2) {
    const std::vector<std::complex<double>> c = fock_coefficients(p, n_max, ctrl);
    double weight = 0.0;
    double first = 0.0;
    std::complex<double> a_squared{0.0, 0.0};
    for (std::size_t n = 0; n < c.size(); ++n) {
      const double w = std::norm(c[n]);
      weight += w;
      first += static_cast<double>(n) * w;
      if (n + 2 < c.size())
        a_squared += std::conj(c[n]) * c[n + 2] *
                     std::sqrt((n + 1.0) * (n + 2.0));
    }
    const double deficit = std::max(0.0, 1.0 - weight);
    const double n_avg = first / weight;
    if (deficit * (n_max + 1.0) < accept * std::max(1.0, n_avg)) {
      PhotonBreakdown out;
      out.route = PhotonRoute::fock_sum;
      out.n_avg = n_avg;
      const double cross = (a_squared / weight).real();
      out.q2_moment = n_avg + 0.5 + cross;
      out.p2_moment = n_avg + 0.5 - cross;
      return out;
    }
  }
  throw nonconvergence_error(
      "avg_photon: number-basis truncation did not stabilize below the cap");
}

}  // namespace detail

/// ⟨n̂⟩ together with ⟨q̂²⟩ and ⟨p̂²⟩ by the selected route.
inline PhotonBreakdown avg_photon(const StandardParams& p, PhotonRoute route,
                                  const SeriesControl& ctrl = {}) {
  p.validate();
  validate(ctrl);
  switch (route) {
    case PhotonRoute::theta_formula:
      return detail::closed_form_moments(p, ctrl);
    case PhotonRoute::moment_integral:
      return detail::integral_moments(p, ctrl);
    case PhotonRoute::fock_sum:
      return detail::fock_moments(p, ctrl);
    case PhotonRoute::riemann_theta:
      return detail::riemann_moments(p, ctrl);
  }
  throw std::domain_error("avg_photon: unknown route");
}

/// Evaluate all four routes, require mutual agreement of every field to
/// `rel_tol` relative, and return the closed-form result.  Throws
/// route_disagreement_error when the spread is larger — the diagnostic
/// message carries the offending values.
inline PhotonBreakdown avg_photon_checked(const StandardParams& p,
                                          const SeriesControl& ctrl = {},
                                          double rel_tol = 1e-6) {
  const PhotonBreakdown routes[] = {
      avg_photon(p, PhotonRoute::theta_formula, ctrl),
      avg_photon(p, PhotonRoute::moment_integral, ctrl),
      avg_photon(p, PhotonRoute::fock_sum, ctrl),
      avg_photon(p, PhotonRoute::riemann_theta, ctrl),
  };
  const auto spread = [&](double PhotonBreakdown::*field) {
    double lo = routes[0].*field;
    double hi = routes[0].*field;
    for (const PhotonBreakdown& r : routes) {
      lo = std::min(lo, r.*field);
      hi = std::max(hi, r.*field);
    }
    return (hi - lo) / std::max(1.0, std::fabs(hi));
  };
  const double worst =
      std::max({spread(&PhotonBreakdown::n_avg), spread(&PhotonBreakdown::q2_moment),
                spread(&PhotonBreakdown::p2_moment)});
  if (worst > rel_tol) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "avg_photon: routes disagree (relative spread %.3e > %.3e; "
                  "n_avg by route: %.12g %.12g %.12g %.12g)",
                  worst, rel_tol, routes[0].n_avg, routes[1].n_avg,
                  routes[2].n_avg, routes[3].n_avg);
    throw route_disagreement_error(buf);
  }
  return routes[0];
}

}  // namespace gkpkit
