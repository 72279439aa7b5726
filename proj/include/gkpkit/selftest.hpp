// Copyright (c) 2026 gkpkit contributors
// SPDX-License-Identifier: MIT
//
// Built-in cross-route and oracle checks.  Each check evaluates one
// identity the library relies on — modular transformations, route
// agreement, quadrature oracles, asymptotics — and reports a residual
// together with the tolerance it was judged against.
//
// Tolerances come in two kinds.  Checks of exact identities (algebraic
// round trips, series cross-routes) scale with the requested series
// tolerance, so demanding an unattainable tolerance (say 1e-20, below
// double roundoff) honestly reports failures.  Checks against integral
// oracles or asymptotic expansions carry fixed tolerances that reflect
// the oracle's own accuracy, independent of the series knob.
//
// All randomness is seeded with fixed constants: repeated runs produce
// identical reports.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gkpkit/code_params.hpp"
#include "gkpkit/comb.hpp"
#include "gkpkit/hermite.hpp"
#include "gkpkit/io.hpp"
#include "gkpkit/observables.hpp"
#include "gkpkit/photon.hpp"
#include "gkpkit/quadrature.hpp"
#include "gkpkit/riemann_theta.hpp"
#include "gkpkit/series.hpp"
#include "gkpkit/state_reps.hpp"
#include "gkpkit/sweep.hpp"
#include "gkpkit/theta.hpp"
#include "gkpkit/wigner.hpp"

namespace gkpkit {

/// Outcome of one named check.  A check that throws reports
/// residual = std::numeric_limits<double>::max() and fails.
struct SelftestCheck {
  std::string check_name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

namespace detail {

class SelftestRegistry {
 public:
  SelftestRegistry(std::string_view only) : only_(only) {}

  template <typename Fn>
  void add(const char* name, double tolerance, Fn&& fn) {
    const std::string_view name_view(name);
    if (!only_.empty() && name_view.find(only_) == std::string_view::npos) return;
    SelftestCheck check;
    check.check_name = name;
    check.tolerance = tolerance;
    try {
      check.residual = fn();
    } catch (const std::exception&) {
      check.residual = std::numeric_limits<double>::max();
    }
    check.pass = std::isfinite(check.residual) && check.residual <= tolerance;
    results.push_back(std::move(check));
  }

  std::vector<SelftestCheck> results;

 private:
  std::string_view only_;
};

inline double rel_diff(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

inline double standard_diff(const StandardParams& x, const StandardParams& y) {
  return std::max({rel_diff(x.sigma_q2, y.sigma_q2), rel_diff(x.sigma_p2, y.sigma_p2),
                   rel_diff(x.gamma_spacing, y.gamma_spacing)});
}

}  // namespace detail

/// Runs every check whose name contains `only` (all checks when empty)
/// with the given series controls; returns one entry per executed check.
inline std::vector<SelftestCheck> run_selftest(const SeriesControl& ctrl = {},
                                               std::string_view only = {}) {
  validate(ctrl);
  detail::SelftestRegistry reg(only);
  const double series_tol = ctrl.tol;

  const auto symmetric = [](double sigma2, int d, int j) {
    return standard_from_symmetric(SymmetricParams{sigma2, CodeLabel{d, j}});
  };

  // ---------------------------------------------------------------- theta
  reg.add("theta.jacobi_identity", 100.0 * series_tol, [&] {
    std::mt19937 rng(411u);
    std::uniform_real_distribution<double> uni(-0.9, 0.9);
    std::uniform_real_distribution<double> pos(0.15, 2.5);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const ThetaArgs args{uni(rng), uni(rng), {uni(rng), 0.3 * uni(rng)},
                           {0.5 * uni(rng), pos(rng)}};
      const JacobiTransform jt = jacobi_transform(args);
      const std::complex<double> direct = theta_char(jt.args, ctrl);
      const std::complex<double> via = jt.prefactor * theta_char(args, ctrl);
      worst = std::max(worst,
                       std::abs(direct - via) / std::max(1.0, std::abs(direct)));
    }
    return worst;
  });

  reg.add("theta.z_periodicity", 100.0 * series_tol, [&] {
    double worst = 0.0;
    for (double a : {0.0, 0.25, 2.0 / 3.0}) {
      const ThetaArgs base{a, 0.4, {0.21, 0.05}, {0.3, 1.2}};
      ThetaArgs shifted = base;
      shifted.z += 1.0;
      const std::complex<double> expected =
          std::polar(1.0, 2.0 * detail::pi * a) * theta_char(base, ctrl);
      worst = std::max(worst, std::abs(theta_char(shifted, ctrl) - expected));
    }
    return worst;
  });

  reg.add("theta.dtau_finite_difference", 1e-6, [&] {
    double worst = 0.0;
    for (double a : {0.0, 0.5, 0.3}) {
      const ThetaArgs args{a, 0.2, {0.15, 0.0}, {0.1, 0.9}};
      const std::complex<double> analytic = theta_char_dtau(args, ctrl);
      const double h = 1e-6;
      ThetaArgs up = args, dn = args;
      up.tau += std::complex<double>{h, 0.0};
      dn.tau -= std::complex<double>{h, 0.0};
      const std::complex<double> fd =
          (theta_char(up, ctrl) - theta_char(dn, ctrl)) / (2.0 * h);
      worst = std::max(worst,
                       std::abs(analytic - fd) / std::max(1.0, std::abs(analytic)));
    }
    return worst;
  });

  reg.add("theta.riemann_diagonal_factorization", 100.0 * series_tol, [&] {
    RiemannThetaArgs args;
    args.a_vec = {0.25, 0.5};
    args.b_vec = {0.1, -0.3};
    args.z_vec = {std::complex<double>{0.2, 0.1}, std::complex<double>{-0.15, 0.0}};
    args.tau_mat[0][0] = {0.2, 1.1};
    args.tau_mat[1][1] = {-0.4, 0.8};
    args.tau_mat[0][1] = args.tau_mat[1][0] = {0.0, 0.0};
    const std::complex<double> joint = riemann_theta2(args, ctrl);
    const std::complex<double> split =
        theta_char({args.a_vec[0], args.b_vec[0], args.z_vec[0], args.tau_mat[0][0]},
                   ctrl) *
        theta_char({args.a_vec[1], args.b_vec[1], args.z_vec[1], args.tau_mat[1][1]},
                   ctrl);
    return std::abs(joint - split) / std::max(1.0, std::abs(split));
  });

  // ----------------------------------------------------------------- comb
  reg.add("comb.route_agreement_plain", 100.0 * series_tol, [&] {
    const CombSpec spec{1.7, 1.3, 0.25, PhaseMode::plain};
    double worst = 0.0;
    for (double x : {-2.1, 0.0, 0.4, 1.9})
      worst = std::max(worst,
                       std::abs(comb_gauss(spec, 0.21, x, ctrl, CombRoute::theta_form) -
                                comb_gauss(spec, 0.21, x, ctrl, CombRoute::direct_sum)));
    return worst;
  });

  reg.add("comb.route_agreement_phased", 100.0 * series_tol, [&] {
    const CombSpec spec{2.3, 0.9, 1.0 / 3.0, PhaseMode::phased};
    double worst = 0.0;
    for (double x : {-1.4, 0.3, 0.8})
      worst = std::max(worst,
                       std::abs(comb_gauss(spec, 0.17, x, ctrl, CombRoute::theta_form) -
                                comb_gauss(spec, 0.17, x, ctrl, CombRoute::direct_sum)));
    return worst;
  });

  // --------------------------------------------------------------- params
  reg.add("params.theorem1_equivalence", 100.0 * series_tol, [&] {
    const double beta = 0.2;
    const CodeLabel label{2, 0};
    const double alpha = label.alpha_d();
    const Theorem1Parameters m = theorem1_parameters(beta);
    const StandardParams via1 = apply_squeeze(
        standard_from_approx1({m.kappa, m.delta1, alpha, label}), std::cosh(beta));
    const StandardParams via2 =
        standard_from_approx2({m.gamma, m.delta2, alpha, label});
    const StandardParams via3 = standard_from_approx3({beta, alpha, label});
    return std::max(detail::standard_diff(via1, via2),
                    detail::standard_diff(via2, via3));
  });

  reg.add("params.remark1_equivalence", 100.0 * series_tol, [&] {
    const Approx2Params p{0.3, 0.25, 1.77, CodeLabel{3, 1}};
    const Remark1Result r = remark1_convert(p);
    const StandardParams want = standard_from_approx2(p);
    const StandardParams via1 = standard_from_approx1(r.approx1);
    const StandardParams via3 =
        apply_squeeze(standard_from_approx3(r.approx3), r.squeeze);
    return std::max(detail::standard_diff(via1, want),
                    detail::standard_diff(via3, want));
  });

  reg.add("params.approx_roundtrips", 100.0 * series_tol, [&] {
    const StandardParams p{0.04, 0.07, 3.2, CodeLabel{3, 1}};
    const StandardParams via1 = standard_from_approx1(approx1_from_standard(p));
    const StandardParams via2 = standard_from_approx2(approx2_from_standard(p));
    return std::max(detail::standard_diff(via1, p), detail::standard_diff(via2, p));
  });

  reg.add("params.squeeze_inverse", 100.0 * series_tol, [&] {
    const StandardParams p{0.04, 0.07, 3.2, CodeLabel{3, 1}};
    const Approx3Inverse inv = approx3_from_standard(p);
    const StandardParams back =
        apply_squeeze(standard_from_approx3(inv.params), inv.squeeze);
    return detail::standard_diff(back, p);
  });

  reg.add("params.db_roundtrip", 100.0 * series_tol, [&] {
    double worst = 0.0;
    for (double db : {1.0, 8.0, 15.0})
      worst = std::max(worst, std::abs(db_from_sigma2(sigma2_from_db(db)) - db) / db);
    return worst;
  });

  // --------------------------------------------------------------- states
  reg.add("states.position_norm_quadrature", 1e-8, [&] {
    const StandardParams p = symmetric(0.1, 2, 0);
    const double cutoff = std::sqrt(40.0 / p.sigma_p2);
    const double total = detail::integrate(
        [&](double q) {
          const double v = position_amplitude(p, q, true, ctrl);
          return v * v;
        },
        -cutoff, cutoff, 1e-11);
    return std::abs(total - 1.0);
  });

  reg.add("states.momentum_norm_quadrature", 1e-8, [&] {
    const StandardParams p = symmetric(0.1, 2, 1);
    const double cutoff = std::sqrt(40.0 / p.sigma_q2);
    const double total = detail::integrate(
        [&](double mom) { return std::norm(momentum_amplitude(p, mom, true, ctrl)); },
        -cutoff, cutoff, 1e-11);
    return std::abs(total - 1.0);
  });

  reg.add("states.fourier_transform", 1e-6, [&] {
    const StandardParams p = symmetric(0.1, 2, 1);
    const double cutoff = std::sqrt(45.0 / p.sigma_p2);
    double worst = 0.0;
    for (double mom : {0.0, 0.6}) {
      const double re = detail::integrate(
          [&](double q) {
            return position_amplitude(p, q, true, ctrl) * std::cos(mom * q);
          },
          -cutoff, cutoff, 1e-11);
      const double im = detail::integrate(
          [&](double q) {
            return position_amplitude(p, q, true, ctrl) * -std::sin(mom * q);
          },
          -cutoff, cutoff, 1e-11);
      const std::complex<double> want =
          std::complex<double>{re, im} / std::sqrt(2.0 * detail::pi);
      worst = std::max(worst, std::abs(momentum_amplitude(p, mom, true, ctrl) - want));
    }
    return worst;
  });

  reg.add("states.grid_quasi_periodicity", 1000.0 * series_tol, [&] {
    const StandardParams p = symmetric(0.05, 2, 0);
    std::mt19937 rng(5521u);
    std::uniform_real_distribution<double> uni(-0.5, 0.5);
    double worst = 0.0;
    for (int trial = 0; trial < 4; ++trial) {
      const double u = uni(rng);
      const double v = uni(rng);
      const std::complex<double> base = grid_amplitude(p, u, v, ctrl);
      const std::complex<double> shift_u =
          grid_amplitude(p, u + 1.0, v, ctrl) -
          std::polar(1.0, detail::pi * v) * base;
      const std::complex<double> shift_v =
          grid_amplitude(p, u, v + 1.0, ctrl) -
          std::polar(1.0, -detail::pi * u) * base;
      worst = std::max({worst, std::abs(shift_u), std::abs(shift_v)});
    }
    return worst;
  });

  reg.add("states.fock_parseval", 1e-4, [&] {
    const StandardParams p = symmetric(0.1, 2, 0);
    const std::vector<std::complex<double>> coeff = fock_coefficients(p, 64, ctrl);
    double total = 0.0;
    for (const std::complex<double>& c : coeff) total += std::norm(c);
    return std::abs(total - 1.0);
  });

  reg.add("states.fock_reconstruction", 1e-6, [&] {
    const StandardParams p = symmetric(0.05, 2, 0);
    const int n_max = 160;
    const std::vector<std::complex<double>> coeff = fock_coefficients(p, n_max, ctrl);
    const double q = 0.7;
    const std::vector<double> basis = hermite_functions(n_max, q);
    std::complex<double> acc(0.0, 0.0);
    for (int n = 0; n <= n_max; ++n) acc += coeff[static_cast<std::size_t>(n)] * basis[static_cast<std::size_t>(n)];
    return std::abs(acc - position_amplitude(p, q, true, ctrl));
  });

  // ---------------------------------------------------------- observables
  reg.add("observables.normalization_quadrature", 1e-8, [&] {
    const StandardParams p = symmetric(0.1, 2, 0);
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
    return detail::rel_diff(normalization(p, ctrl), via_quad);
  });

  reg.add("observables.normalization_riemann", 1000.0 * series_tol, [&] {
    const StandardParams p = symmetric(0.08, 3, 1);
    const RiemannVariants rv = riemann_variants(p, 1, 2, ctrl);
    return detail::rel_diff(rv.norm, normalization(p, ctrl));
  });

  reg.add("observables.overlap_riemann", 1000.0 * series_tol, [&] {
    const StandardParams p = symmetric(0.08, 3, 1);
    const RiemannVariants rv = riemann_variants(p, 1, 2, ctrl);
    return std::abs(rv.overlap - inner_product(p, 1, 2, ctrl));
  });

  reg.add("observables.overlap_diagonal", 100.0 * series_tol, [&] {
    const StandardParams p = symmetric(0.12, 3, 2);
    return std::abs(inner_product(p, 2, 2, ctrl) - 1.0);
  });

  reg.add("observables.overlap_hermitian", 100.0 * series_tol, [&] {
    const StandardParams p = symmetric(0.09, 3, 0);
    const std::complex<double> fwd = inner_product(p, 0, 2, ctrl);
    const std::complex<double> bwd = inner_product(p, 2, 0, ctrl);
    return std::abs(fwd - std::conj(bwd));
  });

  reg.add("observables.asymptotic_normalization", 1e-3, [&] {
    const double sigma2 = sigma2_from_db(15.0);
    const StandardParams p = symmetric(sigma2, 2, 0);
    return std::abs(2.0 * sigma2 * normalization(p, ctrl) - 1.0);
  });

  // d = 3 keeps |j-j'|/2d well inside the validity region of the
  // asymptotic form (d = 2 neighbours sit at the factor-2 edge).
  reg.add("observables.asymptotic_overlap", 0.03, [&] {
    const double sigma2 = sigma2_from_db(14.0);
    const StandardParams p = symmetric(sigma2, 3, 0);
    const double exact = std::abs(inner_product(p, 0, 1, ctrl));
    return std::abs(asymptotic_overlap(p, 0, 1) / exact - 1.0);
  });

  // --------------------------------------------------------------- photon
  reg.add("photon.moment_identity", 100.0 * series_tol, [&] {
    const PhotonBreakdown b =
        avg_photon(symmetric(0.08, 2, 0), PhotonRoute::theta_formula, ctrl);
    return std::abs(b.q2_moment + b.p2_moment - 1.0 - 2.0 * b.n_avg);
  });

  reg.add("photon.theta_vs_riemann", 1000.0 * series_tol, [&] {
    const StandardParams p = symmetric(sigma2_from_db(8.0), 2, 0);
    return detail::rel_diff(avg_photon(p, PhotonRoute::riemann_theta, ctrl).n_avg,
                            avg_photon(p, PhotonRoute::theta_formula, ctrl).n_avg);
  });

  reg.add("photon.theta_vs_integral", 1e-6, [&] {
    const StandardParams p = symmetric(sigma2_from_db(8.0), 2, 0);
    return detail::rel_diff(avg_photon(p, PhotonRoute::moment_integral, ctrl).n_avg,
                            avg_photon(p, PhotonRoute::theta_formula, ctrl).n_avg);
  });

  reg.add("photon.theta_vs_fock", 1e-6, [&] {
    const StandardParams p = symmetric(sigma2_from_db(8.0), 2, 0);
    return detail::rel_diff(avg_photon(p, PhotonRoute::fock_sum, ctrl).n_avg,
                            avg_photon(p, PhotonRoute::theta_formula, ctrl).n_avg);
  });

  reg.add("photon.estimate_convergence", 1e-2, [&] {
    const double sigma2 = sigma2_from_db(16.0);
    const StandardParams p = symmetric(sigma2, 2, 0);
    const double estimate = 1.0 / (4.0 * sigma2) - 0.5;
    return std::abs(avg_photon(p, PhotonRoute::theta_formula, ctrl).n_avg /
                        estimate -
                    1.0);
  });

  // --------------------------------------------------------------- wigner
  reg.add("wigner.route_agreement", 1000.0 * series_tol, [&] {
    const StandardParams p = symmetric(0.05, 2, 0);
    std::mt19937 rng(90917u);
    std::uniform_real_distribution<double> coord(-2.0 * p.gamma_spacing,
                                                 2.0 * p.gamma_spacing);
    double worst = 0.0;
    for (int j_prime : {0, 1}) {
      const detail::WignerPlan plan = detail::wigner_plan(p, 0, j_prime, ctrl);
      for (int trial = 0; trial < 3; ++trial) {
        const double q = coord(rng);
        const double pc = coord(rng);
        const std::complex<double> a =
            detail::wigner_route_point(plan, WignerRoute::comb_product, q, pc, ctrl);
        const std::complex<double> b =
            detail::wigner_route_point(plan, WignerRoute::theta_form, q, pc, ctrl);
        const std::complex<double> c =
            detail::wigner_route_point(plan, WignerRoute::riemann_theta, q, pc, ctrl);
        const double scale = std::max(1.0, std::abs(a));
        worst = std::max(
            {worst, std::abs(a - b) / scale, std::abs(a - c) / scale});
      }
    }
    return worst;
  });

  const auto wigner_trace = [&](const StandardParams& p, int j, int j_prime) {
    const detail::WignerPlan plan = detail::wigner_plan(p, j, j_prime, ctrl);
    const double box = 11.0;
    const int cells = 96;
    const double h = 2.0 * box / static_cast<double>(cells);
    std::complex<double> acc(0.0, 0.0);
    for (int iq = 0; iq < cells; ++iq) {
      const double q = -box + (static_cast<double>(iq) + 0.5) * h;
      for (int ip = 0; ip < cells; ++ip) {
        const double pc = -box + (static_cast<double>(ip) + 0.5) * h;
        acc += detail::wigner_route_point(plan, WignerRoute::comb_product, q, pc, ctrl);
      }
    }
    return acc * (h * h);
  };

  reg.add("wigner.trace_identity", 1e-6, [&] {
    return std::abs(wigner_trace(symmetric(0.1, 2, 0), 0, 0) - 1.0);
  });

  reg.add("wigner.trace_overlap", 1e-6, [&] {
    const StandardParams p = symmetric(0.1, 2, 0);
    return std::abs(wigner_trace(p, 0, 1) - inner_product(p, 1, 0, ctrl));
  });

  reg.add("wigner.marginal_position_density", 1e-6, [&] {
    const StandardParams p = symmetric(0.1, 2, 0);
    const detail::WignerPlan plan = detail::wigner_plan(p, 0, 0, ctrl);
    const double q = 0.45;
    const double marginal = detail::integrate(
        [&](double pc) {
          return detail::wigner_route_point(plan, WignerRoute::comb_product, q, pc,
                                            ctrl)
              .real();
        },
        -12.0, 12.0, 1e-10);
    const double amp = position_amplitude(p, q, true, ctrl);
    return std::abs(marginal - amp * amp);
  });

  reg.add("wigner.conjugation_symmetry", 100.0 * series_tol, [&] {
    const StandardParams p = symmetric(0.07, 3, 0);
    const std::complex<double> fwd = wigner_point(p, 0, 2, 0.8, -0.4, ctrl);
    const std::complex<double> bwd = wigner_point(p, 2, 0, 0.8, -0.4, ctrl);
    return std::abs(bwd - std::conj(fwd));
  });

  // -------------------------------------------------------------- hermite
  reg.add("hermite.orthonormality", 1e-12, [&] {
    const HermiteRule rule = hermite_rule(60);
    double worst = 0.0;
    for (int n = 0; n <= 20; n += 5) {
      for (int m = 0; m <= 20; m += 5) {
        double acc = 0.0;
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
          const std::vector<double> psi =
              hermite_functions(std::max(n, m), rule.nodes[k]);
          acc += rule.weights[k] * psi[static_cast<std::size_t>(n)] *
                 psi[static_cast<std::size_t>(m)];
        }
        worst = std::max(worst, std::abs(acc - (n == m ? 1.0 : 0.0)));
      }
    }
    return worst;
  });

  // ------------------------------------------------------------- sweep/io
  reg.add("sweep.overlap_monotone", 0.0, [&] {
    SweepSpec spec;
    spec.quantity = SweepQuantity::overlap;
    spec.d = 2;
    spec.j = 0;
    spec.j_prime = 1;
    spec.db_min = 6.0;
    spec.db_max = 14.0;
    spec.db_steps = 5;
    const std::vector<SweepRow> rows = run_sweep(spec, ctrl);
    double worst = 0.0;
    for (std::size_t k = 1; k < rows.size(); ++k)
      worst = std::max(worst, rows[k - 1].value - rows[k].value);
    return std::max(0.0, worst);
  });

  reg.add("io.round_trip", 0.0, [&] {
    std::vector<AmplitudeSample> samples(3);
    samples[0] = {0.1, {1.0 / 3.0, -2.0e-17}};
    samples[1] = {-4.7, {0.0, 5.0e222}};
    samples[2] = {1e-300, {-0.70710678118654752, 1.0}};
    std::ostringstream out;
    write_wavefunction_csv(out, samples);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);  // header
    double worst = 0.0;
    for (const AmplitudeSample& s : samples) {
      std::getline(in, line);
      double x = 0.0, re = 0.0, im = 0.0;
      if (std::sscanf(line.c_str(), "%lg,%lg,%lg", &x, &re, &im) != 3) return 1.0;
      worst = std::max({worst, std::abs(x - s.x), std::abs(re - s.value.real()),
                        std::abs(im - s.value.imag()) / std::max(1.0, std::abs(s.value.imag()))});
    }
    return worst;
  });

  reg.add("io.determinism", 0.0, [&] {
    SweepSpec spec;
    spec.quantity = SweepQuantity::photon;
    spec.db_min = 6.0;
    spec.db_max = 10.0;
    spec.db_steps = 3;
    std::ostringstream first, second;
    write_sweep_csv(first, spec.quantity, run_sweep(spec, ctrl));
    write_sweep_csv(second, spec.quantity, run_sweep(spec, ctrl));
    return first.str() == second.str() ? 0.0 : 1.0;
  });

  return reg.results;
}

/// JSON report: an array of {check_name, residual, tolerance, pass}.
inline void write_selftest_json(std::ostream& out,
                                const std::vector<SelftestCheck>& checks) {
  out << "[\n";
  for (std::size_t k = 0; k < checks.size(); ++k) {
    const SelftestCheck& c = checks[k];
    out << "  {\n"
        << "    \"check_name\": \"" << c.check_name << "\",\n"
        << "    \"residual\": " << detail::format_value(c.residual) << ",\n"
        << "    \"tolerance\": " << detail::format_value(c.tolerance) << ",\n"
        << "    \"pass\": " << (c.pass ? "true" : "false") << "\n"
        << (k + 1 < checks.size() ? "  },\n" : "  }\n");
  }
  out << "]\n";
}

}  // namespace gkpkit
