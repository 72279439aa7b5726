// Copyright (c) 2026 gkpkit contributors
// SPDX-License-Identifier: MIT
//
// Genus-2 Riemann theta function with real characteristics,
//
//   Theta[a;b](z, tau) = sum_{s in Z^2} exp[ pi*i*(s+a)^T tau (s+a)
//                                            + 2*pi*i*(z+b)^T (s+a) ],
//
// for symmetric 2x2 tau with positive-definite imaginary part, plus the
// term-wise derivatives with respect to the two diagonal entries of tau.
//
// Evaluation uses a rectangular window centred on the lattice site nearest
// the continuous maximiser of the real exponent; the per-axis radius comes
// from the smallest eigenvalue of Im(tau) through the same tail bound as the
// one-dimensional series.  A max-exponent extraction pass keeps the summed
// mantissas bounded, so strongly off-centre arguments (pure-imaginary z from
// phase-space evaluations) stay inside the double range; consumers that need
// the scaled representation use detail::riemann_joint directly.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "gkpkit/errors.hpp"
#include "gkpkit/series.hpp"

namespace gkpkit {

/// Arguments of the genus-2 theta function.
struct RiemannThetaArgs {
  std::array<double, 2> a_vec{0.0, 0.0};
  std::array<double, 2> b_vec{0.0, 0.0};
  std::array<std::complex<double>, 2> z_vec{};
  std::array<std::array<std::complex<double>, 2>, 2> tau_mat{};
};

inline void validate(const RiemannThetaArgs& args) {
  for (int k = 0; k < 2; ++k) {
    if (!(std::isfinite(args.a_vec[k]) && std::isfinite(args.b_vec[k]) &&
          std::isfinite(args.z_vec[k].real()) && std::isfinite(args.z_vec[k].imag())))
      throw std::domain_error("RiemannThetaArgs: all components must be finite");
    for (int l = 0; l < 2; ++l)
      if (!(std::isfinite(args.tau_mat[k][l].real()) &&
            std::isfinite(args.tau_mat[k][l].imag())))
        throw std::domain_error("RiemannThetaArgs: all components must be finite");
  }
  const auto d01 = args.tau_mat[0][1] - args.tau_mat[1][0];
  double scale = 0.0;
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) scale = std::max(scale, std::abs(args.tau_mat[k][l]));
  if (std::abs(d01) > 1e-13 * std::max(scale, 1.0))
    throw std::domain_error("RiemannThetaArgs: tau_mat must equal its transpose");
  const double y11 = args.tau_mat[0][0].imag();
  const double y22 = args.tau_mat[1][1].imag();
  const double y12 = 0.5 * (args.tau_mat[0][1].imag() + args.tau_mat[1][0].imag());
  if (!(y11 > 0.0 && y11 * y22 - y12 * y12 > 0.0))
    throw std::domain_error(
        "RiemannThetaArgs: Im(tau_mat) must be positive definite");
}

namespace detail {

/// Joint value / diagonal-tau-derivative state; represented quantities are
/// field * exp(log_scale).
struct RiemannJoint {
  std::complex<double> value{0.0, 0.0};
  std::complex<double> dtau11{0.0, 0.0};
  std::complex<double> dtau22{0.0, 0.0};
  double log_scale = 0.0;
};

inline RiemannJoint riemann_joint(const RiemannThetaArgs& in, const SeriesControl& ctrl) {
  validate(in);
  validate(ctrl);
  const std::complex<double> I(0.0, 1.0);

  // Exact per-axis reductions of a_k, b_k and Re(z_k) into [-1/2, 1/2).
  double a[2], b[2];
  std::complex<double> z[2];
  std::complex<double> phase(1.0, 0.0);
  for (int k = 0; k < 2; ++k) {
    a[k] = in.a_vec[k] - std::floor(in.a_vec[k] + 0.5);
    const double nb = std::floor(in.b_vec[k] + 0.5);
    b[k] = in.b_vec[k] - nb;
    if (nb != 0.0) phase *= std::exp(2.0 * pi * I * nb * a[k]);
    const double nz = std::floor(in.z_vec[k].real() + 0.5);
    z[k] = in.z_vec[k] - nz;
    if (nz != 0.0) phase *= std::exp(2.0 * pi * I * a[k] * nz);
  }

  const double y11 = in.tau_mat[0][0].imag();
  const double y22 = in.tau_mat[1][1].imag();
  const double y12 = 0.5 * (in.tau_mat[0][1].imag() + in.tau_mat[1][0].imag());

  // Smallest eigenvalue of Im(tau): the quadratic form dominates
  // lambda_min * |k|^2 in every direction.
  const double tr = y11 + y22;
  const double det = y11 * y22 - y12 * y12;
  const double lambda_min = 0.5 * (tr - std::sqrt(tr * tr - 4.0 * det));

  // Continuous peak of the real exponent: Im(tau) u* = -Im(z).
  const double g1 = z[0].imag();
  const double g2 = z[1].imag();
  const double u1s = -(y22 * g1 - y12 * g2) / det;
  const double u2s = -(y11 * g2 - y12 * g1) / det;
  const double m1 = std::floor(u1s - a[0] + 0.5);
  const double m2 = std::floor(u2s - a[1] + 0.5);
  const double c1 = m1 + a[0];  // recentred offsets of the dominant site
  const double c2 = m2 + a[1];

  // Residual linear coefficients after recentring; |ye| bounds the slope of
  // the exponent against the window index in the worst direction.
  const double ye1 = g1 + y11 * c1 + y12 * c2;
  const double ye2 = g2 + y12 * c1 + y22 * c2;
  const double ye = std::hypot(ye1, ye2);

  // Per-axis radius.  The ring count 8r of the 2-D tail is absorbed by a
  // modest slope increase plus a fixed headroom factor, and the polynomial
  // derivative weights get the same treatment as in the 1-D evaluator.
  const double log_tol = std::log(ctrl.tol) - std::log(64.0);
  const int cap = ctrl.max_terms;
  int radius = series_radius_log(lambda_min, ye + 0.5, log_tol, cap);
  if (radius <= cap) {
    const double umax = std::max(std::fabs(c1), std::fabs(c2)) + radius + 2.0;
    const double wmax = pi * umax * umax + 1.0;
    radius = series_radius_log(lambda_min, ye + 0.5, log_tol - std::log(wmax), cap);
  }
  if (radius > cap)
    throw nonconvergence_error(
        "riemann_theta2: required per-axis summation range exceeds max_terms");

  const long long n1 = static_cast<long long>(m1);
  const long long n2 = static_cast<long long>(m2);
  const long long r = radius + 1;

  // Pass 1: locate the maximal real exponent over the window.
  const auto re_exponent = [&](double u1, double u2) {
    return -pi * (y11 * u1 * u1 + 2.0 * y12 * u1 * u2 + y22 * u2 * u2) -
           2.0 * pi * (g1 * u1 + g2 * u2);
  };
  double m0 = re_exponent(c1, c2);
  for (long long k1 = -r; k1 <= r; ++k1)
    for (long long k2 = -r; k2 <= r; ++k2)
      m0 = std::max(m0, re_exponent(static_cast<double>(n1 + k1) + a[0],
                                    static_cast<double>(n2 + k2) + a[1]));

  // Pass 2: max-extracted sum with term-wise diagonal derivative weights.
  RiemannJoint out;
  std::complex<double> sv(0.0, 0.0), s11(0.0, 0.0), s22(0.0, 0.0);
  for (long long k1 = -r; k1 <= r; ++k1) {
    const double u1 = static_cast<double>(n1 + k1) + a[0];
    for (long long k2 = -r; k2 <= r; ++k2) {
      const double u2 = static_cast<double>(n2 + k2) + a[1];
      const std::complex<double> quad =
          in.tau_mat[0][0] * (u1 * u1) +
          (in.tau_mat[0][1] + in.tau_mat[1][0]) * (u1 * u2) +
          in.tau_mat[1][1] * (u2 * u2);
      const std::complex<double> lin = (z[0] + b[0]) * u1 + (z[1] + b[1]) * u2;
      const std::complex<double> term =
          std::exp(pi * I * quad + 2.0 * pi * I * lin - m0);
      sv += term;
      s11 += (pi * I * (u1 * u1)) * term;
      s22 += (pi * I * (u2 * u2)) * term;
    }
  }
  out.value = phase * sv;
  out.dtau11 = phase * s11;
  out.dtau22 = phase * s22;
  out.log_scale = m0;
  return out;
}

}  // namespace detail

/// Theta[a;b](z, tau) for genus 2, absolute truncation error <= ctrl.tol.
inline std::complex<double> riemann_theta2(const RiemannThetaArgs& args,
                                           const SeriesControl& ctrl) {
  const detail::RiemannJoint j = detail::riemann_joint(args, ctrl);
  return j.value * std::exp(j.log_scale);
}

}  // namespace gkpkit
