// Copyright (c) 2026 gkpkit contributors
// SPDX-License-Identifier: MIT
//
// Observable sweeps over the squeezing level.  A sweep samples one scalar
// quantity of a symmetric code state at equally spaced squeezing levels
// (in dB, the canonical axis of the library's figure outputs) and records
// the level, the spike variance it maps to, and the quantity:
//
//   overlap        — value = -ln|<j'|j>|, the overlap decay exponent
//   photon         — value = <n>, plus the high-squeezing estimate
//                    1/(4 sigma^2) - 1/2 carried alongside
//   normalization  — value = N, the squared norm of the unnormalized state
//
// Points evaluate in parallel (see parallel.hpp) and are stored in axis
// order regardless of completion order, so results are deterministic.

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "gkpkit/code_params.hpp"
#include "gkpkit/observables.hpp"
#include "gkpkit/parallel.hpp"
#include "gkpkit/photon.hpp"
#include "gkpkit/series.hpp"

namespace gkpkit {

enum class SweepQuantity { overlap, photon, normalization };

/// Description of one squeezing-level sweep.  db_steps counts the sampled
/// levels, both endpoints included.
struct SweepSpec {
  SweepQuantity quantity = SweepQuantity::photon;
  int d = 2;
  int j = 0;
  int j_prime = 1;  ///< second logical index; consulted by overlap sweeps only
  double db_min = 2.0;
  double db_max = 18.0;
  int db_steps = 2;

  void validate() const {
    CodeLabel{d, j}.validate();
    if (quantity == SweepQuantity::overlap) CodeLabel{d, j_prime}.validate();
    if (!(std::isfinite(db_min) && std::isfinite(db_max)))
      throw std::domain_error("SweepSpec: squeezing levels must be finite");
    if (!(db_min > 0.0))
      throw std::domain_error("SweepSpec: db_min must be positive");
    if (!(db_min < db_max))
      throw std::domain_error("SweepSpec: require db_min < db_max");
    if (db_steps < 2) throw std::domain_error("SweepSpec: require db_steps >= 2");
  }
};

/// One sampled sweep point.  `estimate` always holds 1/(4 sigma^2) - 1/2;
/// serializers include it only where it is meaningful (photon sweeps).
struct SweepRow {
  double db = 0.0;
  double sigma2 = 0.0;
  double value = 0.0;
  double estimate = 0.0;
};

/// Evaluates the sweep, one row per level, levels ascending.
inline std::vector<SweepRow> run_sweep(const SweepSpec& spec,
                                       const SeriesControl& ctrl = {}) {
  spec.validate();
  validate(ctrl);
  const std::size_t count = static_cast<std::size_t>(spec.db_steps);
  const double step = (spec.db_max - spec.db_min) / static_cast<double>(spec.db_steps - 1);

  std::vector<SweepRow> rows(count);
  detail::parallel_for(count, [&](std::size_t k) {
    SweepRow& row = rows[k];
    row.db = spec.db_min + static_cast<double>(k) * step;
    row.sigma2 = sigma2_from_db(row.db);
    row.estimate = 1.0 / (4.0 * row.sigma2) - 0.5;
    const StandardParams params =
        standard_from_symmetric(SymmetricParams{row.sigma2, CodeLabel{spec.d, spec.j}});
    switch (spec.quantity) {
      case SweepQuantity::overlap:
        row.value = -std::log(std::abs(inner_product(params, spec.j, spec.j_prime, ctrl)));
        break;
      case SweepQuantity::photon:
        row.value = avg_photon(params, PhotonRoute::theta_formula, ctrl).n_avg;
        break;
      case SweepQuantity::normalization:
        row.value = normalization(params, ctrl);
        break;
    }
  });
  return rows;
}

}  // namespace gkpkit
