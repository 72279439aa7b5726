// Copyright (c) 2026 gkpkit contributors
// SPDX-License-Identifier: MIT
//
// Theta functions with real characteristics,
//
//     theta[a;b](z, tau) = sum_{s in Z} exp[ pi*i*tau*(s+a)^2
//                                            + 2*pi*i*(z+b)*(s+a) ],
//
// convergent for Im(tau) > 0, together with the term-wise tau-derivative.
// (See Mumford, "Tata Lectures on Theta I", ch. I for the classical theory.)
//
// Numerical strategy.  The defining series converges geometrically once
// Im(tau) is order one, so the evaluator first *preconditions* tau:
//
//   * characteristic/argument reductions (exact identities of the series):
//       theta[a+n;b]       = theta[a;b]
//       theta[a;b+n]       = exp(2*pi*i*n*a) * theta[a;b]
//       theta[a;b](z+n)    = exp(2*pi*i*a*n) * theta[a;b](z)
//   * integer shifts of Re(tau):
//       theta[a;b](z, tau) = exp(-pi*i*n*a*(a+1))
//                            * theta[a; b+n*(a+1/2)](z, tau-n)
//   * the Jacobi modular transformation (applied while Im(tau) < 1), in the
//     reduction direction
//       theta[a;b](z, tau) = C * theta[-b;a](z/tau, -1/tau),
//       C = (-i*tau)^(-1/2) * exp(2*pi*i*a*b - pi*i*z^2/tau).
//
// Alternating the last two steps walks tau into the fundamental domain
// (|Re| <= 1/2 and either Im >= 1 or |tau| >= 1, hence Im >= sqrt(3)/2),
// where a recentred window sum of series_radius-controlled width finishes
// the job.  Both the modular prefactors and the peak lattice term can exceed
// the double range individually even though the result is moderate, so the
// internal evaluator carries values as (mantissa, log_scale) pairs and the
// derivative components are propagated jointly through each reduction with
// their exact chain rules.

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "gkpkit/errors.hpp"
#include "gkpkit/series.hpp"

namespace gkpkit {

/// Arguments of theta[a;b](z, tau).
struct ThetaArgs {
  double a = 0.0;
  double b = 0.0;
  std::complex<double> z{0.0, 0.0};
  std::complex<double> tau{0.0, 1.0};
};

inline void validate(const ThetaArgs& args) {
  const bool finite = std::isfinite(args.a) && std::isfinite(args.b) &&
                      std::isfinite(args.z.real()) && std::isfinite(args.z.imag()) &&
                      std::isfinite(args.tau.real()) && std::isfinite(args.tau.imag());
  if (!finite) throw std::domain_error("ThetaArgs: all components must be finite");
  if (!(args.tau.imag() > 0.0))
    throw std::domain_error("ThetaArgs: Im(tau) must be strictly positive");
}

namespace detail {

/// Joint value/derivative state of one theta evaluation.  The represented
/// quantities are field * exp(log_scale); value, dz and dtau share one scale.
struct ThetaJoint {
  std::complex<double> value{0.0, 0.0};
  std::complex<double> dz{0.0, 0.0};
  std::complex<double> dtau{0.0, 0.0};
  double log_scale = 0.0;
};

/// Recursive reduction + windowed base sum.  `pref_log_re` accumulates the
/// real part of the log-prefactors applied so far; the base case folds it
/// into the truncation target so the *final* absolute error stays <= tol.
inline ThetaJoint theta_joint(double a, double b, std::complex<double> z,
                              std::complex<double> tau, const SeriesControl& ctrl,
                              int depth, double pref_log_re) {
  const std::complex<double> I(0.0, 1.0);

  // Exact reductions: a, b and Re(z) into [-1/2, 1/2), phases tracked.
  std::complex<double> phase(1.0, 0.0);
  a -= std::floor(a + 0.5);
  const double nb = std::floor(b + 0.5);
  if (nb != 0.0) {
    b -= nb;
    phase *= std::exp(2.0 * pi * I * nb * a);
  }
  const double nz = std::floor(z.real() + 0.5);
  if (nz != 0.0) {
    z -= nz;
    phase *= std::exp(2.0 * pi * I * a * nz);
  }

  if (tau.imag() < 1.0 && depth < 64) {
    const double nt = std::floor(tau.real() + 0.5);
    if (nt != 0.0) {
      const std::complex<double> tphase = std::exp(-pi * I * nt * a * (a + 1.0));
      ThetaJoint inner = theta_joint(a, b + nt * (a + 0.5), z, tau - nt, ctrl,
                                     depth + 1, pref_log_re);
      const std::complex<double> ph = phase * tphase;
      inner.value *= ph;
      inner.dz *= ph;
      inner.dtau *= ph;
      return inner;
    }
    if (std::abs(tau) < 1.0) {
      // Jacobi step; the log-prefactor is split into modulus and phase so
      // only the bounded mantissas are multiplied through.
      const std::complex<double> c_log =
          -0.5 * std::log(-I * tau) + 2.0 * pi * I * a * b - pi * I * z * z / tau;
      const ThetaJoint inner =
          theta_joint(-b, a, z / tau, -1.0 / tau, ctrl, depth + 1,
                      pref_log_re + c_log.real());
      const std::complex<double> ph =
          phase * std::exp(std::complex<double>(0.0, c_log.imag()));
      ThetaJoint out;
      out.log_scale = inner.log_scale + c_log.real();
      out.value = ph * inner.value;
      out.dz = ph * ((-2.0 * pi * I * z / tau) * inner.value + inner.dz / tau);
      out.dtau = ph * ((-0.5 / tau + pi * I * z * z / (tau * tau)) * inner.value -
                       (z / (tau * tau)) * inner.dz + inner.dtau / (tau * tau));
      return out;
    }
    // |Re(tau)| <= 1/2 and |tau| >= 1: fundamental-domain corner, the direct
    // sum below converges with Im(tau) >= sqrt(3)/2.
  }

  // Base case: window sum recentred on the dominant lattice site.
  const double t = tau.imag();
  const double y = z.imag();
  const double mstar = std::floor(-y / t - a + 0.5);
  const double u0 = mstar + a;
  const double yeff = y + t * u0;  // |yeff| <= t/2 by the choice of mstar
  const double m0 = -pi * t * u0 * u0 - 2.0 * pi * y * u0;  // Re E at the peak

  // Tolerance for the *raw* series, relative to the extracted peak term and
  // net of all prefactor magnitudes applied on the way down; the second pass
  // adds headroom for the polynomial weights of the derivative sums.
  const double log_tol = std::log(ctrl.tol) - pref_log_re - m0 - std::log(8.0);
  const int cap = ctrl.max_terms;
  int s_radius = series_radius_log(t, yeff, log_tol, cap);
  if (s_radius <= cap) {
    const double umax = std::fabs(u0) + s_radius + 2.0;
    const double wmax = 2.0 * pi * umax * (umax + 1.0) + 1.0;
    s_radius = series_radius_log(t, yeff, log_tol - std::log(wmax), cap);
  }
  if (s_radius > cap)
    throw nonconvergence_error(
        "theta_char: required one-sided summation range exceeds max_terms");

  const long long m_center = static_cast<long long>(mstar);
  const long long pad = static_cast<long long>(std::ceil(std::fabs(a)));
  ThetaJoint out;
  std::complex<double> sv(0.0, 0.0), sdz(0.0, 0.0), sdt(0.0, 0.0);
  for (long long k = -(s_radius + pad); k <= s_radius + pad; ++k) {
    const double u = static_cast<double>(m_center + k) + a;
    const std::complex<double> e =
        pi * I * tau * (u * u) + 2.0 * pi * I * (z + b) * u - m0;
    const std::complex<double> term = std::exp(e);
    sv += term;
    sdz += (2.0 * pi * I * u) * term;
    sdt += (pi * I * (u * u)) * term;
  }
  out.value = phase * sv;
  out.dz = phase * sdz;
  out.dtau = phase * sdt;
  out.log_scale = m0;
  return out;
}

/// Validated entry point used by the public wrappers and by in-library
/// consumers that need the scaled (mantissa, log) representation.
inline ThetaJoint theta_all(const ThetaArgs& args, const SeriesControl& ctrl) {
  validate(args);
  validate(ctrl);
  return theta_joint(args.a, args.b, args.z, args.tau, ctrl, 0, 0.0);
}

}  // namespace detail

/// theta[a;b](z, tau) with absolute truncation error <= ctrl.tol.
inline std::complex<double> theta_char(const ThetaArgs& args, const SeriesControl& ctrl) {
  const detail::ThetaJoint j = detail::theta_all(args, ctrl);
  return j.value * std::exp(j.log_scale);
}

/// Term-wise derivative of theta_char with respect to tau:
///     sum_s pi*i*(s+a)^2 exp[...],
/// same truncation contract as theta_char.
inline std::complex<double> theta_char_dtau(const ThetaArgs& args,
                                            const SeriesControl& ctrl) {
  const detail::ThetaJoint j = detail::theta_all(args, ctrl);
  return j.dtau * std::exp(j.log_scale);
}

/// Result of one Jacobi modular transformation step.
///
/// The transformed arguments are (a,b,z,tau) -> (-b, a, z/tau, -1/tau) and
/// the prefactor satisfies
///     theta_char(args) = prefactor * theta_char(input),
///     prefactor = (-i*tau)^(1/2) * exp(pi*i*z^2/tau) * exp(-2*pi*i*a*b).
/// ((-i*tau)^(1/2) on the principal branch; Im(tau) > 0 keeps the argument
/// in the right half-plane, away from the cut.)
struct JacobiTransform {
  ThetaArgs args;
  std::complex<double> prefactor;
};

inline JacobiTransform jacobi_transform(const ThetaArgs& in) {
  validate(in);
  const std::complex<double> I(0.0, 1.0);
  JacobiTransform out;
  out.args.a = -in.b;
  out.args.b = in.a;
  out.args.z = in.z / in.tau;
  out.args.tau = -1.0 / in.tau;
  out.prefactor = std::sqrt(-I * in.tau) *
                  std::exp(detail::pi * I * in.z * in.z / in.tau) *
                  std::exp(-2.0 * detail::pi * I * in.a * in.b);
  return out;
}

}  // namespace gkpkit
