// Acceptance gate for gkpkit: twelve pinned criteria covering the
// parametrization equivalences, oracle agreement of every closed form,
// figure-level behavior of the observables, theta-function identities, the
// grid (Zak) representation, and the packaged self-test suite.
//
// Each criterion prints exactly one PASS/FAIL line with its measured
// numbers and pinned tolerance; the process exits nonzero when any
// criterion fails.  Reference values that are not forced by an identity
// were frozen from independent high-precision evaluations before the
// closed-form paths were trusted, and are embedded here as literals.
//
// Copyright (c) 2026 gkpkit contributors
// SPDX-License-Identifier: MIT

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "gkpkit/gkpkit.hpp"

using namespace gkpkit;
using cplx = std::complex<double>;
using clock_type = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, format);
  std::vsnprintf(buf, sizeof(buf), format, ap);
  va_end(ap);
  return std::string(buf);
}

double rel_gap(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

StandardParams symmetric_state(double sigma2, int d, int j) {
  return standard_from_symmetric({sigma2, CodeLabel{d, j}});
}

/// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sx += x[k];
    sy += y[k];
    sxx += x[k] * x[k];
    sxy += x[k] * y[k];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

/// Midpoint Riemann sum of the Wigner function over [-half, half]^2 with
/// cells^2 cells; spectrally accurate for these analytic, Gaussian-decaying
/// integrands once the cell size resolves the narrowest spike.
cplx wigner_trace(const StandardParams& p, int j, int j_prime, double half,
                  int cells, const SeriesControl& ctrl) {
  const detail::WignerPlan plan = detail::wigner_plan(p, j, j_prime, ctrl);
  const double h = 2.0 * half / cells;
  cplx acc{0.0, 0.0};
  for (int a = 0; a < cells; ++a) {
    const double q = -half + (a + 0.5) * h;
    for (int b = 0; b < cells; ++b) {
      const double pc = -half + (b + 0.5) * h;
      acc += detail::wigner_route_point(plan, WignerRoute::comb_product, q, pc,
                                        ctrl);
    }
  }
  return acc * (h * h);
}

// ---------------------------------------------------------------------------
// 1. Matched-parameter equivalence of the three parametrizations.
// ---------------------------------------------------------------------------

Outcome criterion1() {
  constexpr double kTol = 1e-10;
  constexpr double kTimeLimit = 5.0;
  const auto start = clock_type::now();
  const SeriesControl ctrl{};

  double worst = 0.0;
  for (double beta : {0.05, 0.1, 0.2, 0.5}) {
    for (int d : {2, 3}) {
      const CodeLabel label{d, 0};
      const double alpha = label.alpha_d();
      const Theorem1Parameters m = theorem1_parameters(beta);
      const StandardParams via1 = apply_squeeze(
          standard_from_approx1({m.kappa, m.delta1, alpha, label}),
          std::cosh(beta));
      const StandardParams via2 =
          standard_from_approx2({m.gamma, m.delta2, alpha, label});
      const StandardParams via3 = standard_from_approx3({beta, alpha, label});

      const double span = 3.0 * via3.gamma_spacing;
      double sup = 0.0;
      double gap = 0.0;
      for (int i = 0; i < 400; ++i) {
        const double q = -span + 2.0 * span * i / 399.0;
        const double a1 = position_amplitude(via1, q, true, ctrl);
        const double a2 = position_amplitude(via2, q, true, ctrl);
        const double a3 = position_amplitude(via3, q, true, ctrl);
        sup = std::max({sup, std::abs(a1), std::abs(a2), std::abs(a3)});
        gap = std::max({gap, std::abs(a1 - a2), std::abs(a2 - a3),
                        std::abs(a1 - a3)});
      }
      worst = std::max(worst, gap / sup);
    }
  }

  const double elapsed = seconds_since(start);
  Outcome out;
  out.pass = worst < kTol && elapsed < kTimeLimit;
  out.detail = fmt(
      "three-route position amplitudes, 400-point grids: max rel diff %.3g "
      "(tol %.0e); %.2f s (limit %.0f s)",
      worst, kTol, elapsed, kTimeLimit);
  return out;
}

// ---------------------------------------------------------------------------
// 2. Asymmetric three-way conversion on random second-form parameters.
// ---------------------------------------------------------------------------

Outcome criterion2() {
  constexpr double kTol = 1e-9;
  const SeriesControl ctrl{};
  std::mt19937 rng(20260817u);
  std::uniform_real_distribution<double> width(0.15, 1.2);
  std::uniform_real_distribution<double> unit(0.6, 2.5);

  double worst = 0.0;
  int accepted = 0;
  while (accepted < 20) {
    Approx2Params p2;
    p2.gamma = width(rng);
    p2.delta = width(rng);
    if (p2.gamma * p2.delta >= 1.5) continue;
    // Keep both variances of the matched standard form inside (0, 1/2):
    // sigma_p2 = gamma^2/(2 lambda), sigma_q2 = delta^2/(2 lambda).
    const double lam = 1.0 + p2.gamma * p2.gamma * p2.delta * p2.delta / 4.0;
    if (p2.gamma * p2.gamma >= lam || p2.delta * p2.delta >= lam) continue;
    p2.alpha = unit(rng);
    p2.label = CodeLabel{accepted % 2 == 0 ? 2 : 3, accepted % 2};
    ++accepted;

    const Remark1Result r = remark1_convert(p2);
    const StandardParams want = standard_from_approx2(p2);
    const StandardParams via1 = standard_from_approx1(r.approx1);
    const StandardParams via3 =
        apply_squeeze(standard_from_approx3(r.approx3), r.squeeze);

    const double span = 3.0 * want.gamma_spacing;
    double sup = 0.0;
    double gap = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double q = -span + 2.0 * span * i / 199.0;
      const double a0 = position_amplitude(want, q, true, ctrl);
      const double a1 = position_amplitude(via1, q, true, ctrl);
      const double a3 = position_amplitude(via3, q, true, ctrl);
      sup = std::max(sup, std::abs(a0));
      gap = std::max({gap, std::abs(a0 - a1), std::abs(a0 - a3)});
    }
    worst = std::max(worst, gap / sup);
  }

  Outcome out;
  out.pass = worst < kTol;
  out.detail = fmt(
      "20 random (gamma, delta, alpha) tuples with gamma*delta < 1.5: max "
      "amplitude residual %.3g (tol %.0e)",
      worst, kTol);
  return out;
}

// ---------------------------------------------------------------------------
// 3. Closed-form normalization against adaptive quadrature.
// ---------------------------------------------------------------------------

Outcome criterion3() {
  constexpr double kTol = 1e-8;
  const SeriesControl ctrl{};

  double worst = 0.0;
  for (double sigma2 : {0.05, 0.15, 0.3}) {
    for (int d : {2, 3, 6}) {
      for (int j : {0, d - 1}) {
        const StandardParams p = symmetric_state(sigma2, d, j);
        const CombSpec comb = detail::position_comb(p);
        const double cutoff = std::sqrt(40.0 / p.sigma_p2);
        const double integral = detail::integrate(
            [&](double q) {
              const double v = comb_gauss(comb, 2.0 * p.sigma_q2, q, ctrl).real();
              return v * v;
            },
            -cutoff, cutoff, 1e-11);
        const double via_quad =
            2.0 * p.gamma_spacing / std::sqrt(p.Lambda()) * integral;
        worst = std::max(worst, rel_gap(normalization(p, ctrl), via_quad));
      }
    }
  }

  Outcome out;
  out.pass = worst < kTol;
  out.detail = fmt(
      "closed-form N vs quadrature over sigma^2 in {0.05,0.15,0.3}, d in "
      "{2,3,6}, j in {0,d-1}: max rel diff %.3g (tol %.0e)",
      worst, kTol);
  return out;
}

// ---------------------------------------------------------------------------
// 4. Wigner traces, marginals, and three-route agreement.
// ---------------------------------------------------------------------------

Outcome criterion4() {
  constexpr double kTraceTol = 1e-6;
  constexpr double kMarginalTol = 1e-6;
  constexpr double kRouteTol = 1e-10;
  const SeriesControl ctrl{};

  // Trace identity: integral of W equals <j'|j>.
  double trace_err = 0.0;
  {
    const StandardParams p = symmetric_state(0.1, 2, 0);
    trace_err = std::max(
        trace_err, std::abs(wigner_trace(p, 0, 0, 11.0, 96, ctrl) - 1.0));
    trace_err = std::max(
        trace_err, std::abs(wigner_trace(p, 1, 0, 11.0, 96, ctrl) -
                            inner_product(p, 1, 0, ctrl)));
  }
  {
    const StandardParams p{0.04, 0.07, 3.2, CodeLabel{3, 1}};
    trace_err = std::max(
        trace_err, std::abs(wigner_trace(p, 1, 2, 16.0, 192, ctrl) -
                            inner_product(p, 1, 2, ctrl)));
  }

  // Marginals of the diagonal Wigner function against the wavefunctions.
  double marginal_err = 0.0;
  for (int j : {0, 1}) {
    const StandardParams p = symmetric_state(0.05, 2, j);
    const detail::WignerPlan plan = detail::wigner_plan(p, j, j, ctrl);
    for (double q : {0.0, 0.45, 1.3}) {
      const double m = detail::integrate(
          [&](double pc) {
            return detail::wigner_route_point(plan, WignerRoute::comb_product,
                                              q, pc, ctrl)
                .real();
          },
          -12.0, 12.0, 1e-10);
      const double psi = position_amplitude(p, q, true, ctrl);
      marginal_err = std::max(marginal_err, std::abs(m - psi * psi));
    }
    for (double pc : {0.0, 0.6, 1.1}) {
      const double m = detail::integrate(
          [&](double q) {
            return detail::wigner_route_point(plan, WignerRoute::comb_product,
                                              q, pc, ctrl)
                .real();
          },
          -12.0, 12.0, 1e-10);
      const double dens = std::norm(momentum_amplitude(p, pc, true, ctrl));
      marginal_err = std::max(marginal_err, std::abs(m - dens));
    }
  }

  // Route agreement on random phase-space samples.
  double route_err = 0.0;
  {
    std::mt19937 rng(771u);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    const StandardParams sym = symmetric_state(0.05, 2, 0);
    const StandardParams asym{0.04, 0.07, 3.2, CodeLabel{3, 1}};
    struct Case {
      StandardParams p;
      int j, j_prime;
    };
    const Case cases[] = {{sym, 0, 0}, {sym, 0, 1}, {asym, 1, 2}};
    for (int trial = 0; trial < 50; ++trial) {
      const Case& c = cases[trial % 3];
      const double q = 2.0 * c.p.gamma_spacing * coord(rng);
      const double pc = 2.0 * c.p.gamma_spacing * coord(rng);
      const detail::WignerPlan plan =
          detail::wigner_plan(c.p, c.j, c.j_prime, ctrl);
      const cplx wa = detail::wigner_route_point(
          plan, WignerRoute::comb_product, q, pc, ctrl);
      const cplx wb =
          detail::wigner_route_point(plan, WignerRoute::theta_form, q, pc, ctrl);
      const cplx wc = detail::wigner_route_point(
          plan, WignerRoute::riemann_theta, q, pc, ctrl);
      const double scale =
          std::max({1.0, std::abs(wa), std::abs(wb), std::abs(wc)});
      route_err = std::max(route_err, std::max({std::abs(wa - wb),
                                                std::abs(wb - wc),
                                                std::abs(wa - wc)}) /
                                          scale);
    }
  }

  Outcome out;
  out.pass = trace_err < kTraceTol && marginal_err < kMarginalTol &&
             route_err < kRouteTol;
  out.detail = fmt(
      "trace err %.3g (tol %.0e); marginal err %.3g (tol %.0e); route spread "
      "%.3g on 50 samples (tol %.0e)",
      trace_err, kTraceTol, marginal_err, kMarginalTol, route_err, kRouteTol);
  return out;
}

// ---------------------------------------------------------------------------
// 5. Average photon number: four routes agree and match frozen references.
// ---------------------------------------------------------------------------

Outcome criterion5() {
  constexpr double kMutualTol = 1e-6;
  constexpr double kAnchorTol = 1e-10;
  constexpr double kTimeLimit = 30.0;
  const auto start = clock_type::now();
  const SeriesControl ctrl{};

  // Frozen high-precision references (theta-formula values, d=2, j=0).
  const struct {
    double db;
    double n_avg;
  } frozen[] = {
      {6.0, 1.019972177287624287485},
      {8.0, 2.443043952749657566951},
      {10.0, 4.469838902999342102352},
      {14.0, 12.05943081939760020507},
  };

  double mutual = 0.0;
  double anchor = 0.0;
  for (const auto& row : frozen) {
    const StandardParams p = symmetric_state(sigma2_from_db(row.db), 2, 0);
    const double values[] = {
        avg_photon(p, PhotonRoute::theta_formula, ctrl).n_avg,
        avg_photon(p, PhotonRoute::moment_integral, ctrl).n_avg,
        avg_photon(p, PhotonRoute::fock_sum, ctrl).n_avg,
        avg_photon(p, PhotonRoute::riemann_theta, ctrl).n_avg,
    };
    const double lo = *std::min_element(std::begin(values), std::end(values));
    const double hi = *std::max_element(std::begin(values), std::end(values));
    mutual = std::max(mutual, (hi - lo) / std::abs(hi));
    anchor = std::max(anchor, rel_gap(values[0], row.n_avg));
  }

  const double elapsed = seconds_since(start);
  Outcome out;
  out.pass = mutual < kMutualTol && anchor < kAnchorTol && elapsed < kTimeLimit;
  out.detail = fmt(
      "four routes at 6/8/10/14 dB, d=2: mutual spread %.3g (tol %.0e); "
      "frozen-reference gap %.3g (tol %.0e); %.2f s (limit %.0f s)",
      mutual, kMutualTol, anchor, kAnchorTol, elapsed, kTimeLimit);
  return out;
}

// ---------------------------------------------------------------------------
// 6. Lattice narrowing of the normalized state at 8 dB.
// ---------------------------------------------------------------------------

Outcome criterion6() {
  constexpr double kBandLo = 0.010;
  constexpr double kBandHi = 0.015;
  constexpr double kFrozen = 0.01263930821360718;  // 1 - sqrt(1 - 4 sigma^4)
  constexpr double kFrozenTol = 5e-15;

  const double sigma2 = sigma2_from_db(8.0);
  const double narrowing = 1.0 - std::sqrt(1.0 - 4.0 * sigma2 * sigma2);

  // The same ratio through the standard form: Gamma = alpha_d * d * sqrt(L).
  const StandardParams p = symmetric_state(sigma2, 2, 0);
  const double via_spacing =
      1.0 - p.gamma_spacing / (p.label.alpha_d() * p.label.d);

  Outcome out;
  out.pass = narrowing >= kBandLo && narrowing <= kBandHi &&
             std::abs(narrowing - kFrozen) < kFrozenTol &&
             std::abs(narrowing - via_spacing) < 1e-14;
  out.detail = fmt(
      "peak-spacing narrowing at 8 dB, d=2: %.6f%% (band [%.1f%%, %.1f%%]; "
      "frozen %.6f%%)",
      100.0 * narrowing, 100.0 * kBandLo, 100.0 * kBandHi, 100.0 * kFrozen);
  return out;
}

// ---------------------------------------------------------------------------
// 7. Overlap decay: monotone in dB and tail slope pi/(4d) against 1/sigma^2.
// ---------------------------------------------------------------------------

Outcome criterion7() {
  constexpr double kSlopeTol = 0.02;  // relative, against pi/(4d)
  constexpr double kFrozenTol = 1e-6;
  const double frozen_slope_d3 = 0.261812103154;
  const double frozen_slope_d6 = 0.130998043659;
  const SeriesControl ctrl{};

  bool monotone = true;
  for (int d : {2, 3, 6}) {
    double prev = -1.0;
    for (int db = 1; db <= 18; ++db) {
      const StandardParams p =
          symmetric_state(sigma2_from_db(static_cast<double>(db)), d, 0);
      const double y = -std::log(std::abs(inner_product(p, 0, 1, ctrl)));
      if (y <= prev) monotone = false;
      prev = y;
    }
  }

  double slope_gap = 0.0;
  double frozen_gap = 0.0;
  for (int d : {3, 6}) {
    std::vector<double> xs, ys;
    for (int db = 10; db <= 18; ++db) {
      const double sigma2 = sigma2_from_db(static_cast<double>(db));
      const StandardParams p = symmetric_state(sigma2, d, 0);
      xs.push_back(1.0 / sigma2);
      ys.push_back(-std::log(std::abs(inner_product(p, 0, 1, ctrl))));
    }
    const double slope = fit_slope(xs, ys);
    const double target = detail::pi / (4.0 * d);
    slope_gap = std::max(slope_gap, std::abs(slope - target) / target);
    const double frozen = d == 3 ? frozen_slope_d3 : frozen_slope_d6;
    frozen_gap = std::max(frozen_gap, rel_gap(slope, frozen));
  }

  Outcome out;
  out.pass = monotone && slope_gap < kSlopeTol && frozen_gap < kFrozenTol;
  out.detail = fmt(
      "-ln|<0|1>| monotone over 1-18 dB for d in {2,3,6}: %s; tail slope vs "
      "pi/(4d) off by %.3g (tol %.0e); frozen-slope gap %.3g (tol %.0e)",
      monotone ? "yes" : "NO", slope_gap, kSlopeTol, frozen_gap, kFrozenTol);
  return out;
}

// ---------------------------------------------------------------------------
// 8. Photon number versus the high-squeezing estimate 1/(4 sigma^2) - 1/2.
// ---------------------------------------------------------------------------

Outcome criterion8() {
  constexpr double kHighTol = 0.01;    // deviation bound at 15 dB
  constexpr double kLowFloor = 0.40;   // deviation must exceed this at 5 dB
  const SeriesControl ctrl{};

  // Frozen deviations |n_avg/estimate - 1| from the moment-integral oracle.
  const struct {
    int db;
    double dev;
    double tol;
  } frozen[] = {
      {4, 0.61026519, 2e-8},  {5, 0.46938562, 2e-8},
      {6, 0.31570101, 2e-8},  {8, 0.079758863, 2e-8},
      {10, 0.006702466, 2e-8}, {15, 8.381054e-10, 1e-11},
  };

  std::vector<double> devs;
  for (int db = 4; db <= 18; ++db) {
    const double sigma2 = sigma2_from_db(static_cast<double>(db));
    const StandardParams p = symmetric_state(sigma2, 2, 0);
    const double n_avg = avg_photon(p, PhotonRoute::theta_formula, ctrl).n_avg;
    const double estimate = 1.0 / (4.0 * sigma2) - 0.5;
    devs.push_back(std::abs(n_avg / estimate - 1.0));
  }

  bool monotone = true;
  for (std::size_t k = 1; k < devs.size(); ++k)
    if (devs[k] >= devs[k - 1]) monotone = false;

  double anchor_err = 0.0;
  bool anchors_ok = true;
  for (const auto& row : frozen) {
    const double got = devs[static_cast<std::size_t>(row.db - 4)];
    const double err = std::abs(got - row.dev);
    anchor_err = std::max(anchor_err, err / row.dev);
    if (err > std::max(row.tol, 1e-7 * row.dev)) anchors_ok = false;
  }

  const double dev15 = devs[15 - 4];
  const double dev5 = devs[5 - 4];

  Outcome out;
  out.pass = monotone && dev15 < kHighTol && dev5 > kLowFloor && anchors_ok;
  out.detail = fmt(
      "deviation from 1/(4 sigma^2)-1/2: %.3g at 15 dB (< %.2g), %.4f at 5 dB "
      "(> %.2f), monotone over 4-18 dB: %s; frozen-table rel gap %.3g",
      dev15, kHighTol, dev5, kLowFloor, monotone ? "yes" : "NO", anchor_err);
  return out;
}

// ---------------------------------------------------------------------------
// 9. Normalization asymptotics: 2 sigma^2 N -> 1.
// ---------------------------------------------------------------------------

Outcome criterion9() {
  constexpr double kTol15 = 1e-3;
  const double frozen8 = 1.014088738;
  const double frozen15 = 1.000000000032711;
  const SeriesControl ctrl{};

  std::vector<double> residuals;
  double at8 = 0.0, at15 = 0.0;
  for (int db = 8; db <= 18; ++db) {
    const double sigma2 = sigma2_from_db(static_cast<double>(db));
    const StandardParams p = symmetric_state(sigma2, 2, 0);
    const double value = 2.0 * sigma2 * normalization(p, ctrl);
    if (db == 8) at8 = value;
    if (db == 15) at15 = value;
    residuals.push_back(std::abs(value - 1.0));
  }

  bool monotone = true;
  for (std::size_t k = 1; k < residuals.size(); ++k)
    if (residuals[k] >= residuals[k - 1]) monotone = false;

  const bool anchors_ok = std::abs(at8 - frozen8) < 2e-9 &&
                          std::abs(at15 - frozen15) < 1e-11;

  Outcome out;
  out.pass = residuals[15 - 8] < kTol15 && monotone && anchors_ok;
  out.detail = fmt(
      "|2 sigma^2 N - 1| = %.3g at 15 dB (tol %.0e), monotone decreasing over "
      "8-18 dB: %s; anchors at 8/15 dB: %s",
      residuals[15 - 8], kTol15, monotone ? "yes" : "NO",
      anchors_ok ? "match" : "MISMATCH");
  return out;
}

// ---------------------------------------------------------------------------
// 10. Theta identities: modular transform, tau derivative, factorization.
// ---------------------------------------------------------------------------

Outcome criterion10() {
  constexpr double kJacobiTol = 1e-12;
  constexpr double kDtauTol = 1e-7;
  constexpr double kFactorTol = 1e-12;
  const SeriesControl ctrl{};

  std::mt19937 rng(90210u);
  std::uniform_real_distribution<double> uni(-0.9, 0.9);
  std::uniform_real_distribution<double> pos(0.15, 2.5);

  double jacobi = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const ThetaArgs args{uni(rng), uni(rng), {uni(rng), 0.3 * uni(rng)},
                         {0.5 * uni(rng), pos(rng)}};
    const JacobiTransform jt = jacobi_transform(args);
    const cplx direct = theta_char(jt.args, ctrl);
    const cplx via = jt.prefactor * theta_char(args, ctrl);
    jacobi = std::max(jacobi,
                      std::abs(direct - via) / std::max(1.0, std::abs(direct)));
  }

  double dtau = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const ThetaArgs args{uni(rng), uni(rng), {uni(rng), 0.2 * uni(rng)},
                         {0.4 * uni(rng), pos(rng)}};
    const cplx analytic = theta_char_dtau(args, ctrl);
    const double h = 1e-6;
    ThetaArgs up = args, dn = args;
    up.tau += cplx{h, 0.0};
    dn.tau -= cplx{h, 0.0};
    const cplx fd = (theta_char(up, ctrl) - theta_char(dn, ctrl)) / (2.0 * h);
    dtau = std::max(dtau,
                    std::abs(analytic - fd) / std::max(1.0, std::abs(analytic)));
  }

  double factor = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    RiemannThetaArgs args;
    args.a_vec = {uni(rng), uni(rng)};
    args.b_vec = {uni(rng), uni(rng)};
    args.z_vec = {cplx{uni(rng), 0.3 * uni(rng)}, cplx{uni(rng), 0.3 * uni(rng)}};
    args.tau_mat[0][0] = {0.5 * uni(rng), pos(rng)};
    args.tau_mat[1][1] = {0.5 * uni(rng), pos(rng)};
    args.tau_mat[0][1] = args.tau_mat[1][0] = {0.0, 0.0};
    const cplx joint = riemann_theta2(args, ctrl);
    const cplx split =
        theta_char({args.a_vec[0], args.b_vec[0], args.z_vec[0],
                    args.tau_mat[0][0]},
                   ctrl) *
        theta_char({args.a_vec[1], args.b_vec[1], args.z_vec[1],
                    args.tau_mat[1][1]},
                   ctrl);
    factor = std::max(factor,
                      std::abs(joint - split) / std::max(1.0, std::abs(split)));
  }

  Outcome out;
  out.pass = jacobi < kJacobiTol && dtau < kDtauTol && factor < kFactorTol;
  out.detail = fmt(
      "modular transform %.3g on 200 inputs (tol %.0e); dtau vs central "
      "difference %.3g on 50 inputs (tol %.0e); diagonal factorization %.3g "
      "(tol %.0e)",
      jacobi, kJacobiTol, dtau, kDtauTol, factor, kFactorTol);
  return out;
}

// ---------------------------------------------------------------------------
// 11. Grid (Zak) representation: quasi-periodicity and unit 2-D norm.
// ---------------------------------------------------------------------------

Outcome criterion11() {
  constexpr double kShiftTol = 1e-9;
  constexpr double kNormTol = 1e-6;
  const SeriesControl ctrl{};

  double shift_err = 0.0;
  {
    std::mt19937 rng(3371u);
    std::uniform_real_distribution<double> cell(-0.5, 0.5);
    std::uniform_int_distribution<int> step(-2, 2);
    const StandardParams states[] = {symmetric_state(0.05, 2, 0),
                                     symmetric_state(0.08, 3, 1)};
    int done = 0;
    while (done < 20) {
      const double u = cell(rng);
      const double v = cell(rng);
      const int n1 = step(rng);
      const int n2 = step(rng);
      if (n1 == 0 && n2 == 0) continue;
      const StandardParams& p = states[done % 2];
      ++done;
      const cplx base = grid_amplitude(p, u, v, ctrl);
      const cplx moved = grid_amplitude(p, u + n1, v + n2, ctrl);
      const cplx factor =
          std::polar(1.0, -detail::pi * (static_cast<double>(n1) * n2 +
                                         u * n2 - v * n1));
      shift_err = std::max(shift_err, std::abs(moved - factor * base));
    }
  }

  double norm_err = 0.0;
  for (const StandardParams& p :
       {symmetric_state(0.05, 2, 0), symmetric_state(0.08, 3, 1)}) {
    const int cells = 64;
    double acc = 0.0;
    for (int a = 0; a < cells; ++a)
      for (int b = 0; b < cells; ++b)
        acc += std::norm(grid_amplitude(p, (a + 0.5) / cells - 0.5,
                                        (b + 0.5) / cells - 0.5, ctrl));
    acc /= static_cast<double>(cells) * cells;
    norm_err = std::max(norm_err, std::abs(acc - 1.0));
  }

  Outcome out;
  out.pass = shift_err < kShiftTol && norm_err < kNormTol;
  out.detail = fmt(
      "quasi-periodicity residual %.3g on 20 random shifts (tol %.0e); unit-"
      "cell norm error %.3g (tol %.0e)",
      shift_err, kShiftTol, norm_err, kNormTol);
  return out;
}

// ---------------------------------------------------------------------------
// 12. Packaged self-test suite: all green, under the time budget.
// ---------------------------------------------------------------------------

Outcome criterion12() {
  constexpr double kTimeLimit = 120.0;
  const auto start = clock_type::now();
  const std::vector<SelftestCheck> checks = run_selftest();
  const double elapsed = seconds_since(start);

  int failed = 0;
  for (const SelftestCheck& c : checks)
    if (!c.pass) ++failed;

  Outcome out;
  out.pass = failed == 0 && elapsed < kTimeLimit;
  out.detail = fmt("self-test suite: %zu checks, %d failing, %.2f s (limit "
                   "%.0f s)",
                   checks.size(), failed, elapsed, kTimeLimit);
  return out;
}

}  // namespace

int main() {
  const struct {
    int id;
    Outcome (*run)();
  } criteria[] = {
      {1, criterion1},  {2, criterion2},  {3, criterion3},  {4, criterion4},
      {5, criterion5},  {6, criterion6},  {7, criterion7},  {8, criterion8},
      {9, criterion9},  {10, criterion10}, {11, criterion11}, {12, criterion12},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = fmt("threw: %s", e.what());
    }
    if (!out.pass) ++failures;
    std::printf("criterion %2d: %s — %s\n", c.id, out.pass ? "PASS" : "FAIL",
                out.detail.c_str());
    std::fflush(stdout);
  }

  if (failures == 0) {
    std::printf("acceptance: all 12 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d of 12 criteria FAILED\n", failures);
  return 1;
}
