// Copyright (c) 2026 gkpkit contributors
// SPDX-License-Identifier: MIT
//
// Truncation control for the lattice sums used throughout the library.
//
// Every series here is dominated by Gaussian-type terms
//     f(u) = exp(-pi*t*u^2 + 2*pi*y*u),   t > 0,
// whose two-sided tail beyond |u| = S is bounded by the geometric estimate
//     tail(S) <= 2 * f(S) / (1 - r(S)),   r(S) = f(S+1)/f(S) < 1.
// series_radius inverts that bound: it returns the smallest window radius S
// whose tail bound sits below a requested absolute tolerance.

#pragma once

#include <cmath>
#include <stdexcept>

#include "gkpkit/errors.hpp"

namespace gkpkit {

/// Shared truncation knobs. `tol` is an absolute tolerance on the returned
/// value; `max_terms` caps the one-sided summation range of any single
/// lattice sum (per axis for the two-dimensional sums).
struct SeriesControl {
  double tol = 1e-12;
  int max_terms = 1000000;
};

inline void validate(const SeriesControl& ctrl) {
  if (!(ctrl.tol > 0.0)) throw std::domain_error("SeriesControl: tol must be > 0");
  if (ctrl.max_terms < 1) throw std::domain_error("SeriesControl: max_terms must be >= 1");
}

namespace detail {

constexpr double pi = 3.14159265358979323846;

/// Core of series_radius, in log space so the bound never over/underflows.
/// Returns the smallest S in [1, cap] with
///     log(2) + log f(S) - log(1 - r(S)) <= log_tol,
/// or cap + 1 when no such S exists.  `t` may be any positive value here;
/// the public wrapper enforces the post-transformation regime t >= 1.
inline int series_radius_log(double t, double y, double log_tol, int cap) {
  y = std::fabs(y);
  for (int s = 1; s <= cap; ++s) {
    const double log_f = -pi * t * s * s + 2.0 * pi * y * s;
    const double log_r = -pi * t * (2.0 * s + 1.0) + 2.0 * pi * y;
    if (log_r >= 0.0) continue;  // terms not yet decreasing at this radius
    const double log_bound = std::log(2.0) + log_f - std::log1p(-std::exp(log_r));
    if (log_bound <= log_tol) return s;
  }
  return cap + 1;
}

}  // namespace detail

/// Smallest one-sided window radius S such that the geometric tail bound on
///     sum over |s+a| > S of exp[-pi*im_tau*(s+a)^2 + 2*pi*|im_z|*|s+a|]
/// falls below `tol`.  The bound is uniform over characteristic shifts
/// |a| <= 1/2 (the window itself is widened by ceil(|a|) at the call sites),
/// so `a` does not enter the estimate.  Returns the internal cap of 10^7 when
/// the bound is unattainable; callers treat that as nonconvergence.
inline int series_radius(double im_tau, double im_z, double a, double tol) {
  (void)a;
  if (!(im_tau >= 1.0))
    throw std::domain_error("series_radius: im_tau must be >= 1 (post-transformation regime)");
  if (!(tol > 0.0)) throw std::domain_error("series_radius: tol must be > 0");
  constexpr int cap = 10000000;
  const int s = detail::series_radius_log(im_tau, std::fabs(im_z), std::log(tol), cap);
  return s > cap ? cap : s;
}

}  // namespace gkpkit
