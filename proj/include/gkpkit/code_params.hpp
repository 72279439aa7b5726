// Copyright (c) 2026 gkpkit contributors
// SPDX-License-Identifier: MIT
//
// Parametrizations of approximate GKP code states and the exact closed-form
// conversions between them.
//
// Three parametrizations are in common use for the approximate
// Gottesman-Kitaev-Preskill code state |j> of a qudit with dimension d:
//
//   1. kappa/Delta form: a Gaussian envelope exp(-kappa^2 x^2 / 2) over a
//      comb of squeezed coherent states of width Delta, lattice unit alpha.
//   2. gamma/delta form: a coherent superposition of randomly displaced
//      ideal code states with a Gaussian displacement amplitude of widths
//      (gamma, delta) in (momentum, position).
//   3. beta form: exp(-beta * (n + 1/2)) applied to the ideal code state;
//      symmetric between position and momentum by construction.
//
// All three are Gaussian-enveloped Gaussian combs, so each is equivalent to
// the "standard form" used throughout this library: position-spike variance
// sigma_q^2, momentum-spike variance sigma_p^2, and position comb period
// Gamma.  The conversions below are exact (no truncation is involved), and
// roundtrip tests pin them to 1e-14.

#pragma once

#include <cmath>
#include <stdexcept>

#include "gkpkit/series.hpp"

namespace gkpkit {

// Which logical basis state of which qudit dimension is being described.
struct CodeLabel {
  int d = 2;  // qudit dimension, >= 1
  int j = 0;  // logical index, 0 <= j <= d-1

  void validate() const {
    if (d < 1) throw std::domain_error("CodeLabel: dimension d must be >= 1");
    if (j < 0 || j >= d)
      throw std::domain_error("CodeLabel: logical index j must be in [0, d-1]");
  }

  // Square-lattice translation unit alpha_d = sqrt(2*pi/d).
  double alpha_d() const { return std::sqrt(2.0 * detail::pi / d); }
};

// Parametrization 1: envelope inverse-width kappa, spike width delta (the
// width itself, not its square), lattice translation unit alpha.
struct Approx1Params {
  double kappa = 0.1;
  double delta = 0.1;
  double alpha = 1.0;
  CodeLabel label;

  void validate() const {
    label.validate();
    if (!(kappa > 0.0) || !std::isfinite(kappa))
      throw std::domain_error("Approx1Params: kappa must be positive");
    if (!(delta > 0.0) || !std::isfinite(delta))
      throw std::domain_error("Approx1Params: delta must be positive");
    if (!(alpha > 0.0) || !std::isfinite(alpha))
      throw std::domain_error("Approx1Params: alpha must be positive");
  }
};

// Parametrization 2: displacement-amplitude widths gamma (momentum) and
// delta (position), lattice translation unit alpha.
struct Approx2Params {
  double gamma = 0.1;
  double delta = 0.1;
  double alpha = 1.0;
  CodeLabel label;

  void validate() const {
    label.validate();
    if (!(gamma > 0.0) || !std::isfinite(gamma))
      throw std::domain_error("Approx2Params: gamma must be positive");
    if (!(delta > 0.0) || !std::isfinite(delta))
      throw std::domain_error("Approx2Params: delta must be positive");
    if (!(alpha > 0.0) || !std::isfinite(alpha))
      throw std::domain_error("Approx2Params: alpha must be positive");
    if (!(gamma * delta < 2.0))
      throw std::domain_error("Approx2Params: gamma*delta must be < 2");
  }

  // lambda = 1 + gamma^2 delta^2 / 4, the recurring normalization of this
  // parametrization.
  double lambda() const {
    return 1.0 + gamma * gamma * delta * delta / 4.0;
  }
};

// Parametrization 3: thermal-envelope parameter beta, lattice unit alpha.
struct Approx3Params {
  double beta = 0.1;
  double alpha = 1.0;
  CodeLabel label;

  void validate() const {
    label.validate();
    if (!(beta > 0.0) || !std::isfinite(beta))
      throw std::domain_error("Approx3Params: beta must be positive");
    if (!(alpha > 0.0) || !std::isfinite(alpha))
      throw std::domain_error("Approx3Params: alpha must be positive");
  }
};

// Standard form: position-spike variance sigma_q^2, momentum-spike variance
// sigma_p^2, position comb period Gamma.  Every valid state of the three
// parametrizations above maps onto exactly one standard form.
struct StandardParams {
  double sigma_q2 = 0.05;
  double sigma_p2 = 0.05;
  double gamma_spacing = 1.0;
  CodeLabel label;

  void validate() const {
    label.validate();
    if (!(sigma_q2 > 0.0) || !(sigma_q2 < 0.5) || !std::isfinite(sigma_q2))
      throw std::domain_error("StandardParams: sigma_q2 must be in (0, 1/2)");
    if (!(sigma_p2 > 0.0) || !(sigma_p2 < 0.5) || !std::isfinite(sigma_p2))
      throw std::domain_error("StandardParams: sigma_p2 must be in (0, 1/2)");
    if (!(gamma_spacing > 0.0) || !std::isfinite(gamma_spacing))
      throw std::domain_error("StandardParams: gamma_spacing must be positive");
  }

  // Lambda = 1 - 4 sigma_q^2 sigma_p^2, in (0, 1) for valid parameters.
  double Lambda() const { return 1.0 - 4.0 * sigma_q2 * sigma_p2; }
};

// Symmetric code: one spike variance sigma^2 for both quadratures; the comb
// period is fixed to alpha_d * d * sqrt(Lambda).
struct SymmetricParams {
  double sigma2 = 0.05;
  CodeLabel label;

  void validate() const {
    label.validate();
    if (!(sigma2 > 0.0) || !(sigma2 < 0.5) || !std::isfinite(sigma2))
      throw std::domain_error("SymmetricParams: sigma2 must be in (0, 1/2)");
  }
};

inline StandardParams standard_from_approx1(const Approx1Params& p) {
  p.validate();
  const double k2d2 = p.kappa * p.kappa * p.delta * p.delta;
  StandardParams out;
  out.sigma_q2 = p.delta * p.delta / 2.0;
  out.sigma_p2 = p.kappa * p.kappa / (2.0 * (1.0 + k2d2));
  out.gamma_spacing = p.alpha * p.label.d;
  out.label = p.label;
  out.validate();
  return out;
}

inline StandardParams standard_from_approx2(const Approx2Params& p) {
  p.validate();
  const double lam = p.lambda();
  const double u = 1.0 - p.gamma * p.gamma * p.delta * p.delta / (2.0 * lam);
  StandardParams out;
  out.sigma_q2 = p.delta * p.delta / (2.0 * lam);
  out.sigma_p2 = p.gamma * p.gamma / (2.0 * lam);
  out.gamma_spacing = p.alpha * p.label.d * u;
  out.label = p.label;
  out.validate();
  return out;
}

inline StandardParams standard_from_approx3(const Approx3Params& p) {
  p.validate();
  StandardParams out;
  out.sigma_q2 = std::tanh(p.beta) / 2.0;
  out.sigma_p2 = out.sigma_q2;
  out.gamma_spacing = p.alpha * p.label.d / std::cosh(p.beta);
  out.label = p.label;
  out.validate();
  return out;
}

inline StandardParams standard_from_symmetric(const SymmetricParams& p) {
  p.validate();
  const double lambda_cap = 1.0 - 4.0 * p.sigma2 * p.sigma2;
  StandardParams out;
  out.sigma_q2 = p.sigma2;
  out.sigma_p2 = p.sigma2;
  out.gamma_spacing = p.label.alpha_d() * p.label.d * std::sqrt(lambda_cap);
  out.label = p.label;
  out.validate();
  return out;
}

// Inverse maps.  Each inverts the corresponding forward conversion exactly;
// the third parametrization is symmetric by construction, so its inverse
// carries the residual squeeze (see approx3_from_standard below).

inline Approx1Params approx1_from_standard(const StandardParams& p) {
  p.validate();
  Approx1Params out;
  out.kappa = std::sqrt(2.0 * p.sigma_p2 / p.Lambda());
  out.delta = std::sqrt(2.0 * p.sigma_q2);
  out.alpha = p.gamma_spacing / p.label.d;
  out.label = p.label;
  return out;
}

inline Approx2Params approx2_from_standard(const StandardParams& p) {
  p.validate();
  const double lam = 2.0 / (1.0 + std::sqrt(p.Lambda()));
  Approx2Params out;
  out.gamma = std::sqrt(2.0 * lam * p.sigma_p2);
  out.delta = std::sqrt(2.0 * lam * p.sigma_q2);
  out.alpha = p.gamma_spacing / (p.label.d * std::sqrt(p.Lambda()));
  out.label = p.label;
  return out;
}

// Scale the standard form by a squeeze factor zeta > 0: the output state's
// position amplitude at q equals sqrt(zeta) times the input amplitude at
// zeta*q.  The product sigma_q^2 * sigma_p^2 (hence Lambda) is invariant.
inline StandardParams apply_squeeze(const StandardParams& p, double zeta) {
  p.validate();
  if (!(zeta > 0.0) || !std::isfinite(zeta))
    throw std::domain_error("apply_squeeze: zeta must be positive");
  StandardParams out;
  out.sigma_q2 = p.sigma_q2 / (zeta * zeta);
  out.sigma_p2 = p.sigma_p2 * (zeta * zeta);
  out.gamma_spacing = p.gamma_spacing / zeta;
  out.label = p.label;
  out.validate();
  return out;
}

// Inverse of the third parametrization for a general (asymmetric) standard
// form: the returned (params, squeeze) satisfy
//   apply_squeeze(standard_from_approx3(params), squeeze) == input.
struct Approx3Inverse {
  Approx3Params params;
  double squeeze = 1.0;
};

inline Approx3Inverse approx3_from_standard(const StandardParams& p) {
  p.validate();
  Approx3Inverse out;
  const double beta = std::atanh(2.0 * std::sqrt(p.sigma_q2 * p.sigma_p2));
  const double zeta = std::pow(p.sigma_p2 / p.sigma_q2, 0.25);
  out.params.beta = beta;
  out.params.alpha =
      p.gamma_spacing * zeta * std::cosh(beta) / p.label.d;
  out.params.label = p.label;
  out.squeeze = zeta;
  return out;
}

// Matched-parameter tuple making the three parametrizations describe the
// same state (for lattice unit alpha_d and a common envelope parameter
// beta): kappa^2 = tanh(beta), delta1^2 = sinh(beta)cosh(beta) for the
// first parametrization, gamma = delta2 = sqrt(2 tanh(beta/2)) for the
// second.  With these values the squeezed first parametrization, the second
// and the third all have identical standard forms.
struct Theorem1Parameters {
  double kappa = 0.0;
  double delta1 = 0.0;  // spike width of the first parametrization
  double gamma = 0.0;
  double delta2 = 0.0;  // position width of the second parametrization
};

inline Theorem1Parameters theorem1_parameters(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw std::domain_error("theorem1_parameters: beta must be positive");
  Theorem1Parameters out;
  out.kappa = std::sqrt(std::tanh(beta));
  out.delta1 = std::sqrt(std::sinh(2.0 * beta) / 2.0);
  out.gamma = std::sqrt(2.0 * std::tanh(beta / 2.0));
  out.delta2 = out.gamma;
  return out;
}

// Exact three-way correspondence for a general gamma/delta state: the
// returned first-parametrization state equals the input state exactly
// (identical standard forms), and the returned third-parametrization state
// equals it after the returned squeeze:
//   standard_from_approx1(approx1) == standard_from_approx2(p), and
//   apply_squeeze(standard_from_approx3(approx3), squeeze)
//       == standard_from_approx2(p).
struct Remark1Result {
  Approx1Params approx1;
  double squeeze = 1.0;
  Approx3Params approx3;
};

inline Remark1Result remark1_convert(const Approx2Params& p) {
  p.validate();
  const double lam = p.lambda();
  const double u = 1.0 - p.gamma * p.gamma * p.delta * p.delta / (2.0 * lam);
  if (!(u > 0.0))
    throw std::domain_error("remark1_convert: no matching parameters in range");

  Remark1Result out;
  out.approx1.kappa = p.gamma / (std::sqrt(lam) * u);
  out.approx1.delta = p.delta / std::sqrt(lam);
  out.approx1.alpha = p.alpha * u;
  out.approx1.label = p.label;

  // Spike asymmetry of the matched state fixes the squeeze:
  // sinh(beta) = kappa*delta and zeta^2 = tanh(beta)/delta^2.
  const double beta = std::asinh(out.approx1.kappa * out.approx1.delta);
  const double zeta =
      std::sqrt(std::tanh(beta)) / out.approx1.delta;
  out.squeeze = zeta;
  out.approx3.beta = beta;
  out.approx3.alpha = out.approx1.alpha * zeta * std::cosh(beta);
  out.approx3.label = p.label;
  return out;
}

// Squeezing level in decibels: level_db = -10*log10(2*sigma^2).  Levels
// <= 0 dB correspond to sigma^2 >= 1/2, which is outside the valid range.
inline double sigma2_from_db(double level_db) {
  if (!std::isfinite(level_db) || !(level_db > 0.0))
    throw std::domain_error("sigma2_from_db: level must be positive (dB)");
  return std::pow(10.0, -level_db / 10.0) / 2.0;
}

inline double db_from_sigma2(double sigma2) {
  if (!std::isfinite(sigma2) || !(sigma2 > 0.0) || !(sigma2 < 0.5))
    throw std::domain_error("db_from_sigma2: sigma2 must be in (0, 1/2)");
  return -10.0 * std::log10(2.0 * sigma2);
}

}  // namespace gkpkit
