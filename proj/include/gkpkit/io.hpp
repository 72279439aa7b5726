// Copyright (c) 2026 gkpkit contributors
// SPDX-License-Identifier: MIT
//
// Serialization of sampled data products.  Every writer emits floating
// point values through the same "%.17g" conversion, which preserves
// doubles exactly across a round trip, and produces byte-identical output
// for identical inputs.  CSV files carry a header row; JSON files hold an
// array of flat objects with the same keys as the CSV columns.
//
// Writers target std::ostream so they serve files, pipes and in-memory
// streams alike; opening files (and mapping failures to the process exit
// contract) is the caller's concern.

#pragma once

#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkpkit/series.hpp"
#include "gkpkit/state_reps.hpp"
#include "gkpkit/sweep.hpp"
#include "gkpkit/wigner.hpp"

namespace gkpkit {

enum class OutputFormat { csv, json };

/// Shared run settings of the command-line front end: series evaluation
/// controls plus the output destination and format.
struct RunConfig {
  double tol = 1e-12;
  int max_terms = 1000000;
  std::string output_path;  ///< empty means standard output
  OutputFormat format = OutputFormat::csv;

  void validate() const {
    if (!(tol > 0.0))
      throw std::domain_error("RunConfig: tol must be positive");
    if (max_terms < 1)
      throw std::domain_error("RunConfig: max_terms must be >= 1");
  }

  SeriesControl series() const { return SeriesControl{tol, max_terms}; }
};

namespace detail {

/// Decimal rendering used by every writer: 17 significant digits, enough
/// for an exact double round trip.
inline std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

/// One "key": value JSON member (keys are fixed identifiers, no escaping).
inline void json_member(std::ostream& out, const char* key, double v,
                        bool last = false) {
  out << "    \"" << key << "\": " << format_value(v) << (last ? "\n" : ",\n");
}

template <typename Row>
void json_array(std::ostream& out, const std::vector<Row>& rows,
                void (*emit)(std::ostream&, const Row&)) {
  out << "[\n";
  for (std::size_t k = 0; k < rows.size(); ++k) {
    out << "  {\n";
    emit(out, rows[k]);
    out << (k + 1 < rows.size() ? "  },\n" : "  }\n");
  }
  out << "]\n";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Wavefunction samples: columns x, re, im.
// ---------------------------------------------------------------------------

inline void write_wavefunction_csv(std::ostream& out,
                                   const std::vector<AmplitudeSample>& samples) {
  out << "x,re,im\n";
  for (const AmplitudeSample& s : samples)
    out << detail::format_value(s.x) << ',' << detail::format_value(s.value.real())
        << ',' << detail::format_value(s.value.imag()) << '\n';
}

inline void write_wavefunction_json(std::ostream& out,
                                    const std::vector<AmplitudeSample>& samples) {
  detail::json_array<AmplitudeSample>(out, samples,
                                      [](std::ostream& o, const AmplitudeSample& s) {
                                        detail::json_member(o, "x", s.x);
                                        detail::json_member(o, "re", s.value.real());
                                        detail::json_member(o, "im", s.value.imag(), true);
                                      });
}

// ---------------------------------------------------------------------------
// Wigner samples: columns q, p, re, im; rows arrive (q outer, p inner).
// ---------------------------------------------------------------------------

inline void write_wigner_csv(std::ostream& out,
                             const std::vector<WignerSample>& samples) {
  out << "q,p,re,im\n";
  for (const WignerSample& s : samples)
    out << detail::format_value(s.q) << ',' << detail::format_value(s.p) << ','
        << detail::format_value(s.value.real()) << ','
        << detail::format_value(s.value.imag()) << '\n';
}

inline void write_wigner_json(std::ostream& out,
                              const std::vector<WignerSample>& samples) {
  detail::json_array<WignerSample>(out, samples,
                                   [](std::ostream& o, const WignerSample& s) {
                                     detail::json_member(o, "q", s.q);
                                     detail::json_member(o, "p", s.p);
                                     detail::json_member(o, "re", s.value.real());
                                     detail::json_member(o, "im", s.value.imag(), true);
                                   });
}

// ---------------------------------------------------------------------------
// Sweep rows: columns db, sigma2, value and, for photon sweeps only, the
// high-squeezing estimate.
// ---------------------------------------------------------------------------

inline void write_sweep_csv(std::ostream& out, SweepQuantity quantity,
                            const std::vector<SweepRow>& rows) {
  const bool with_estimate = quantity == SweepQuantity::photon;
  out << (with_estimate ? "db,sigma2,value,estimate\n" : "db,sigma2,value\n");
  for (const SweepRow& r : rows) {
    out << detail::format_value(r.db) << ',' << detail::format_value(r.sigma2)
        << ',' << detail::format_value(r.value);
    if (with_estimate) out << ',' << detail::format_value(r.estimate);
    out << '\n';
  }
}

inline void write_sweep_json(std::ostream& out, SweepQuantity quantity,
                             const std::vector<SweepRow>& rows) {
  if (quantity == SweepQuantity::photon) {
    detail::json_array<SweepRow>(out, rows, [](std::ostream& o, const SweepRow& r) {
      detail::json_member(o, "db", r.db);
      detail::json_member(o, "sigma2", r.sigma2);
      detail::json_member(o, "value", r.value);
      detail::json_member(o, "estimate", r.estimate, true);
    });
    return;
  }
  detail::json_array<SweepRow>(out, rows, [](std::ostream& o, const SweepRow& r) {
    detail::json_member(o, "db", r.db);
    detail::json_member(o, "sigma2", r.sigma2);
    detail::json_member(o, "value", r.value, true);
  });
}

}  // namespace gkpkit
