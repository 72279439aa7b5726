// Squeezing report: everything gkpkit knows about one symmetric code state,
// chosen by squeezing level in dB.  Shows the equivalent parametrizations,
// normalization, overlap with the neighboring logical state, and the average
// photon number through all four evaluation routes.
//
// Usage: demo_squeezing_report [level_db] [d]     (defaults: 10 dB, d = 2)
//
// Copyright (c) 2026 gkpkit contributors
// SPDX-License-Identifier: MIT

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "gkpkit/gkpkit.hpp"

using namespace gkpkit;

int main(int argc, char** argv) {
  const double level_db = argc > 1 ? std::atof(argv[1]) : 10.0;
  const int d = argc > 2 ? std::atoi(argv[2]) : 2;

  try {
    const double sigma2 = sigma2_from_db(level_db);
    const StandardParams p = standard_from_symmetric({sigma2, CodeLabel{d, 0}});
    const SeriesControl ctrl{};

    std::printf("symmetric GKP code state, %.2f dB, d = %d\n", level_db, d);
    std::printf("================================================\n\n");

    std::printf("standard form\n");
    std::printf("  sigma_q^2 = sigma_p^2 = %.12g\n", sigma2);
    std::printf("  Lambda               = %.12g\n", p.Lambda());
    std::printf("  peak spacing Gamma   = %.12g\n", p.gamma_spacing);
    std::printf("  spacing narrowing    = %.4f %% of the ideal lattice\n\n",
                100.0 * (1.0 - p.gamma_spacing / (p.label.alpha_d() * d)));

    const Approx1Params a1 = approx1_from_standard(p);
    const Approx2Params a2 = approx2_from_standard(p);
    const Approx3Inverse a3 = approx3_from_standard(p);
    const Theorem1Parameters m = theorem1_parameters(a3.params.beta);
    std::printf("equivalent parametrizations\n");
    std::printf("  spike/envelope form : kappa = %.10g, delta = %.10g\n",
                a1.kappa, a1.delta);
    std::printf("  convolved-comb form : gamma = %.10g, delta = %.10g\n",
                a2.gamma, a2.delta);
    std::printf("  hyperbolic form     : beta  = %.10g\n", a3.params.beta);
    std::printf("  matched tuple       : kappa = %.10g, delta = %.10g,\n",
                m.kappa, m.delta1);
    std::printf("                        gamma = delta = %.10g\n\n", m.gamma);

    const double norm = normalization(p, ctrl);
    std::printf("normalization\n");
    std::printf("  N                = %.12g\n", norm);
    std::printf("  2 sigma^2 N      = %.12g   (tends to 1 at high squeezing)\n",
                2.0 * sigma2 * norm);
    std::printf("  asymptotic form  = %.12g\n\n",
                asymptotic_normalization(p.sigma_q2, p.sigma_p2));

    const std::complex<double> overlap = inner_product(p, 0, 1, ctrl);
    std::printf("overlap with the neighboring logical state\n");
    std::printf("  <1|0>            = %.12g\n", overlap.real());
    std::printf("  -ln |<1|0>|      = %.12g\n", -std::log(std::abs(overlap)));
    std::printf("  asymptotic form  = %.12g   (d = 2 neighbours sit at the\n",
                asymptotic_overlap(p, 0, 1));
    std::printf("                     edge of its validity, about 2x below)\n\n");

    std::printf("average photon number (four routes)\n");
    const struct {
      const char* name;
      PhotonRoute route;
    } routes[] = {
        {"theta formula  ", PhotonRoute::theta_formula},
        {"moment integral", PhotonRoute::moment_integral},
        {"number-basis sum", PhotonRoute::fock_sum},
        {"genus-2 theta  ", PhotonRoute::riemann_theta},
    };
    for (const auto& r : routes) {
      const PhotonBreakdown b = avg_photon(p, r.route, ctrl);
      std::printf("  %s : n_avg = %.12g   (<q^2> = %.6g, <p^2> = %.6g)\n",
                  r.name, b.n_avg, b.q2_moment, b.p2_moment);
    }
    const double estimate = 1.0 / (4.0 * sigma2) - 0.5;
    std::printf("  estimate 1/(4 sigma^2) - 1/2 = %.12g\n\n", estimate);

    std::printf("photon number vs estimate across squeezing levels (d = %d)\n", d);
    std::printf("  %6s %14s %14s %12s\n", "dB", "n_avg", "estimate", "deviation");
    for (int db = 6; db <= 16; db += 2) {
      const double s2 = sigma2_from_db(static_cast<double>(db));
      const StandardParams q = standard_from_symmetric({s2, CodeLabel{d, 0}});
      const double n_avg = avg_photon(q, PhotonRoute::theta_formula, ctrl).n_avg;
      const double est = 1.0 / (4.0 * s2) - 0.5;
      std::printf("  %6d %14.8f %14.8f %12.3g\n", db, n_avg, est,
                  std::abs(n_avg / est - 1.0));
    }
    return 0;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "squeezing_report: %s\n", e.what());
    return 2;
  }
}
