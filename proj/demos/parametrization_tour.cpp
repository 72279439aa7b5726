// Parametrization tour: demonstrates that the three ways of writing an
// approximate GKP code state — spike/envelope (kappa, delta), convolved comb
// (gamma, delta), and hyperbolic (beta) — describe the same physical state,
// first with the matched symmetric tuple, then for a general asymmetric
// input recovered through an explicit squeeze.  Finishes with a look at the
// state in the position, momentum, grid, and number bases.
//
// Copyright (c) 2026 gkpkit contributors
// SPDX-License-Identifier: MIT

#include <cmath>
#include <complex>
#include <cstdio>

#include "gkpkit/gkpkit.hpp"

using namespace gkpkit;

namespace {

void print_standard(const char* name, const StandardParams& p) {
  std::printf("  %-18s sigma_q^2 = %.12g, sigma_p^2 = %.12g, Gamma = %.12g\n",
              name, p.sigma_q2, p.sigma_p2, p.gamma_spacing);
}

}  // namespace

int main() {
  const SeriesControl ctrl{};
  try {
    // -- Part 1: the matched symmetric tuple -------------------------------
    const double beta = 0.2;
    const CodeLabel label{2, 0};
    const double alpha = label.alpha_d();

    std::printf("part 1: matched parameters at beta = %.2f, d = %d\n", beta,
                label.d);
    const Theorem1Parameters m = theorem1_parameters(beta);
    std::printf("  kappa = %.10g, delta = %.10g; gamma = delta' = %.10g\n",
                m.kappa, m.delta1, m.gamma);

    const StandardParams via1 = apply_squeeze(
        standard_from_approx1({m.kappa, m.delta1, alpha, label}),
        std::cosh(beta));
    const StandardParams via2 =
        standard_from_approx2({m.gamma, m.delta2, alpha, label});
    const StandardParams via3 = standard_from_approx3({beta, alpha, label});
    print_standard("spike/envelope:", via1);
    print_standard("convolved comb:", via2);
    print_standard("hyperbolic:", via3);

    std::printf("  position amplitudes of the three forms:\n");
    for (double q : {0.0, 0.8, 1.7}) {
      std::printf("    psi(%.1f) = %.12g / %.12g / %.12g\n", q,
                  position_amplitude(via1, q, true, ctrl),
                  position_amplitude(via2, q, true, ctrl),
                  position_amplitude(via3, q, true, ctrl));
    }

    // -- Part 2: a general asymmetric input --------------------------------
    std::printf("\npart 2: asymmetric conversion with an explicit squeeze\n");
    const Approx2Params p2{0.45, 0.3, 1.9, CodeLabel{3, 1}};
    std::printf("  input: gamma = %.2f, delta = %.2f, alpha = %.2f, d = %d, "
                "j = %d\n",
                p2.gamma, p2.delta, p2.alpha, p2.label.d, p2.label.j);
    const Remark1Result r = remark1_convert(p2);
    std::printf("  spike/envelope match: kappa = %.10g, delta = %.10g, "
                "alpha = %.10g\n",
                r.approx1.kappa, r.approx1.delta, r.approx1.alpha);
    std::printf("  hyperbolic match:     beta = %.10g, alpha = %.10g, "
                "squeeze zeta = %.10g\n",
                r.approx3.beta, r.approx3.alpha, r.squeeze);

    const StandardParams want = standard_from_approx2(p2);
    const StandardParams got =
        apply_squeeze(standard_from_approx3(r.approx3), r.squeeze);
    print_standard("target state:", want);
    print_standard("via squeeze:", got);

    // -- Part 3: one state in four bases ------------------------------------
    std::printf("\npart 3: the 10 dB symmetric qubit state in four bases\n");
    const StandardParams p =
        standard_from_symmetric({sigma2_from_db(10.0), CodeLabel{2, 0}});

    std::printf("  position:  psi(0)      = %.10g\n",
                position_amplitude(p, 0.0, true, ctrl));
    std::printf("  momentum:  psi~(0)     = %.10g\n",
                momentum_amplitude(p, 0.0, true, ctrl).real());
    const std::complex<double> g = grid_amplitude(p, 0.25, 0.4, ctrl);
    std::printf("  grid:      phi(.25,.4) = %.10g %+.10gi\n", g.real(),
                g.imag());

    const std::vector<std::complex<double>> c = fock_coefficients(p, 8, ctrl);
    std::printf("  number basis (only even levels are populated):\n");
    for (int n = 0; n <= 8; n += 2)
      std::printf("    <%d|psi> = %.10g\n", n, c[static_cast<std::size_t>(n)].real());

    double odd_weight = 0.0;
    for (std::size_t n = 1; n < c.size(); n += 2) odd_weight += std::norm(c[n]);
    std::printf("  odd-level weight (should vanish): %.3g\n", odd_weight);
    return 0;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "parametrization_tour: %s\n", e.what());
    return 2;
  }
}
