// gkpkit command-line front end: parameter conversion between the three
// approximate-GKP parametrizations, wavefunction and Wigner-function
// sampling, observable sweeps over squeezing level, and the library
// self-test suite.
//
// Exit codes: 0 success, 1 self-test failure or cross-route disagreement,
// 2 input validation or series non-convergence, 3 I/O failure.
//
// Copyright (c) 2026 gkpkit contributors
// SPDX-License-Identifier: MIT

#include <clocale>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gkpkit/gkpkit.hpp"

using namespace gkpkit;

namespace {

constexpr double kUnsetReal = std::numeric_limits<double>::quiet_NaN();
constexpr int kUnsetInt = std::numeric_limits<int>::min();

bool is_set(double v) { return !std::isnan(v); }

// ---------------------------------------------------------------------------
// Shared state-specification flags: exactly one parametrization selector
// plus its value flags, and the code label.
// ---------------------------------------------------------------------------

struct StateFlags {
  bool standard = false;
  bool symmetric = false;
  bool approx1 = false;
  bool approx2 = false;
  bool approx3 = false;

  double sigma_q2 = kUnsetReal;
  double sigma_p2 = kUnsetReal;
  double gamma_spacing = kUnsetReal;
  double sigma2 = kUnsetReal;
  double db = kUnsetReal;
  double kappa = kUnsetReal;
  double delta = kUnsetReal;
  double gamma = kUnsetReal;
  double beta = kUnsetReal;
  double alpha = kUnsetReal;

  int d = 2;
  int j = 0;
};

void add_state_flags(CLI::App* cmd, StateFlags& s) {
  cmd->add_flag("--standard", s.standard,
                "input is the standard form (sigma_q2, sigma_p2, Gamma)");
  cmd->add_flag("--symmetric", s.symmetric,
                "input is the symmetric code (one variance, lattice unit spacing)");
  cmd->add_flag("--approx1", s.approx1,
                "input is the spike-envelope form (kappa, delta, alpha)");
  cmd->add_flag("--approx2", s.approx2,
                "input is the convolved-comb form (gamma, delta, alpha)");
  cmd->add_flag("--approx3", s.approx3,
                "input is the hyperbolic form (beta, alpha)");

  cmd->add_option("--sigma-q2", s.sigma_q2, "position variance (with --standard)");
  cmd->add_option("--sigma-p2", s.sigma_p2, "momentum variance (with --standard)");
  cmd->add_option("--gamma-spacing", s.gamma_spacing,
                  "peak spacing Gamma (with --standard)");
  cmd->add_option("--sigma2", s.sigma2, "common variance (with --symmetric)");
  cmd->add_option("--db", s.db,
                  "squeezing level in dB, -10 log10(2 sigma^2) (with --symmetric)");
  cmd->add_option("--kappa", s.kappa, "envelope width (with --approx1)");
  cmd->add_option("--delta", s.delta,
                  "spike width (with --approx1 or --approx2)");
  cmd->add_option("--gamma", s.gamma, "envelope width (with --approx2)");
  cmd->add_option("--beta", s.beta, "hyperbolic parameter (with --approx3)");
  cmd->add_option("--alpha", s.alpha,
                  "lattice unit; defaults to sqrt(2 pi / d)");

  cmd->add_option("--d", s.d, "qudit dimension (default 2)");
  cmd->add_option("--j", s.j, "logical index (default 0)");
}

// Rejects value flags that do not belong to the chosen parametrization, so a
// silently ignored --kappa next to --approx3 cannot misrepresent the state.
void check_stray_flags(const StateFlags& s, unsigned mode_bit) {
  enum : unsigned { kStd = 1u, kSym = 2u, kA1 = 4u, kA2 = 8u, kA3 = 16u };
  const struct {
    const char* name;
    bool set;
    unsigned allowed;
  } flags[] = {
      {"--sigma-q2", is_set(s.sigma_q2), kStd},
      {"--sigma-p2", is_set(s.sigma_p2), kStd},
      {"--gamma-spacing", is_set(s.gamma_spacing), kStd},
      {"--sigma2", is_set(s.sigma2), kSym},
      {"--db", is_set(s.db), kSym},
      {"--kappa", is_set(s.kappa), kA1},
      {"--delta", is_set(s.delta), kA1 | kA2},
      {"--gamma", is_set(s.gamma), kA2},
      {"--beta", is_set(s.beta), kA3},
      {"--alpha", is_set(s.alpha), kA1 | kA2 | kA3},
  };
  for (const auto& f : flags)
    if (f.set && !(f.allowed & mode_bit))
      throw std::domain_error(std::string(f.name) +
                              " does not apply to the chosen parametrization");
}

double require_value(double v, const char* flag, const char* mode) {
  if (!is_set(v))
    throw std::domain_error(std::string("missing ") + flag + " (required by " +
                            mode + ")");
  return v;
}

StandardParams build_state(const StateFlags& s) {
  const int modes = int(s.standard) + int(s.symmetric) + int(s.approx1) +
                    int(s.approx2) + int(s.approx3);
  if (modes != 1)
    throw std::domain_error(
        "choose exactly one of --standard, --symmetric, --approx1, --approx2, "
        "--approx3");

  CodeLabel label{s.d, s.j};
  label.validate();

  if (s.standard) {
    check_stray_flags(s, 1u);
    StandardParams p;
    p.sigma_q2 = require_value(s.sigma_q2, "--sigma-q2", "--standard");
    p.sigma_p2 = require_value(s.sigma_p2, "--sigma-p2", "--standard");
    p.gamma_spacing =
        require_value(s.gamma_spacing, "--gamma-spacing", "--standard");
    p.label = label;
    p.validate();
    return p;
  }

  if (s.symmetric) {
    check_stray_flags(s, 2u);
    if (is_set(s.sigma2) && is_set(s.db))
      throw std::domain_error("give either --sigma2 or --db, not both");
    if (!is_set(s.sigma2) && !is_set(s.db))
      throw std::domain_error("missing --sigma2 or --db (required by --symmetric)");
    SymmetricParams p;
    p.sigma2 = is_set(s.db) ? sigma2_from_db(s.db) : s.sigma2;
    p.label = label;
    return standard_from_symmetric(p);
  }

  const double alpha = is_set(s.alpha) ? s.alpha : label.alpha_d();

  if (s.approx1) {
    check_stray_flags(s, 4u);
    Approx1Params p;
    p.kappa = require_value(s.kappa, "--kappa", "--approx1");
    p.delta = require_value(s.delta, "--delta", "--approx1");
    p.alpha = alpha;
    p.label = label;
    return standard_from_approx1(p);
  }

  if (s.approx2) {
    check_stray_flags(s, 8u);
    Approx2Params p;
    p.gamma = require_value(s.gamma, "--gamma", "--approx2");
    p.delta = require_value(s.delta, "--delta", "--approx2");
    p.alpha = alpha;
    p.label = label;
    return standard_from_approx2(p);
  }

  check_stray_flags(s, 16u);
  Approx3Params p;
  p.beta = require_value(s.beta, "--beta", "--approx3");
  p.alpha = alpha;
  p.label = label;
  return standard_from_approx3(p);
}

// ---------------------------------------------------------------------------
// Output plumbing.
// ---------------------------------------------------------------------------

OutputFormat resolve_format(const std::string& format_str, OutputFormat fallback) {
  if (format_str.empty()) return fallback;
  return format_str == "json" ? OutputFormat::json : OutputFormat::csv;
}

int write_output(const std::string& path,
                 const std::function<void(std::ostream&)>& emit) {
  if (path.empty()) {
    emit(std::cout);
    std::cout.flush();
    if (!std::cout) {
      std::fprintf(stderr, "gkpkit: error writing to standard output\n");
      return 3;
    }
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::fprintf(stderr, "gkpkit: cannot open '%s' for writing\n", path.c_str());
    return 3;
  }
  emit(out);
  out.flush();
  if (!out) {
    std::fprintf(stderr, "gkpkit: error writing '%s'\n", path.c_str());
    return 3;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// convert: every equivalent parametrization of one state.
// ---------------------------------------------------------------------------

struct ConvertReport {
  StandardParams state;
  Approx1Params a1;
  Approx2Params a2;
  Approx3Inverse a3;
  bool symmetric = false;  // variance-symmetric state: extra sections apply
  double sigma2 = 0.0;
  double db = 0.0;
  Theorem1Parameters matched;
};

ConvertReport make_convert_report(const StandardParams& p) {
  ConvertReport r;
  r.state = p;
  r.a1 = approx1_from_standard(p);
  r.a2 = approx2_from_standard(p);
  r.a3 = approx3_from_standard(p);
  const double scale = std::max(p.sigma_q2, p.sigma_p2);
  r.symmetric = std::abs(p.sigma_q2 - p.sigma_p2) <= 1e-12 * scale;
  if (r.symmetric) {
    r.sigma2 = p.sigma_q2;
    r.db = db_from_sigma2(r.sigma2);
    r.matched = theorem1_parameters(r.a3.params.beta);
  }
  return r;
}

void write_convert_json(std::ostream& out, const ConvertReport& r) {
  const auto num = [](double v) { return detail::format_value(v); };
  out << "{\n";
  out << "  \"label\": {\"d\": " << r.state.label.d << ", \"j\": " << r.state.label.j
      << "},\n";
  out << "  \"standard\": {\n";
  out << "    \"sigma_q2\": " << num(r.state.sigma_q2) << ",\n";
  out << "    \"sigma_p2\": " << num(r.state.sigma_p2) << ",\n";
  out << "    \"gamma_spacing\": " << num(r.state.gamma_spacing) << ",\n";
  out << "    \"lambda\": " << num(r.state.Lambda()) << "\n";
  out << "  },\n";
  out << "  \"approx1\": {\n";
  out << "    \"kappa\": " << num(r.a1.kappa) << ",\n";
  out << "    \"delta\": " << num(r.a1.delta) << ",\n";
  out << "    \"alpha\": " << num(r.a1.alpha) << "\n";
  out << "  },\n";
  out << "  \"approx2\": {\n";
  out << "    \"gamma\": " << num(r.a2.gamma) << ",\n";
  out << "    \"delta\": " << num(r.a2.delta) << ",\n";
  out << "    \"alpha\": " << num(r.a2.alpha) << "\n";
  out << "  },\n";
  out << "  \"approx3\": {\n";
  out << "    \"beta\": " << num(r.a3.params.beta) << ",\n";
  out << "    \"alpha\": " << num(r.a3.params.alpha) << ",\n";
  out << "    \"squeeze\": " << num(r.a3.squeeze) << "\n";
  out << (r.symmetric ? "  },\n" : "  }\n");
  if (r.symmetric) {
    out << "  \"symmetric\": {\n";
    out << "    \"sigma2\": " << num(r.sigma2) << ",\n";
    out << "    \"db\": " << num(r.db) << "\n";
    out << "  },\n";
    out << "  \"matched\": {\n";
    out << "    \"kappa\": " << num(r.matched.kappa) << ",\n";
    out << "    \"delta1\": " << num(r.matched.delta1) << ",\n";
    out << "    \"gamma\": " << num(r.matched.gamma) << ",\n";
    out << "    \"delta2\": " << num(r.matched.delta2) << "\n";
    out << "  }\n";
  }
  out << "}\n";
}

void write_convert_csv(std::ostream& out, const ConvertReport& r) {
  const auto num = [](double v) { return detail::format_value(v); };
  out << "key,value\n";
  out << "label.d," << r.state.label.d << '\n';
  out << "label.j," << r.state.label.j << '\n';
  out << "standard.sigma_q2," << num(r.state.sigma_q2) << '\n';
  out << "standard.sigma_p2," << num(r.state.sigma_p2) << '\n';
  out << "standard.gamma_spacing," << num(r.state.gamma_spacing) << '\n';
  out << "standard.lambda," << num(r.state.Lambda()) << '\n';
  out << "approx1.kappa," << num(r.a1.kappa) << '\n';
  out << "approx1.delta," << num(r.a1.delta) << '\n';
  out << "approx1.alpha," << num(r.a1.alpha) << '\n';
  out << "approx2.gamma," << num(r.a2.gamma) << '\n';
  out << "approx2.delta," << num(r.a2.delta) << '\n';
  out << "approx2.alpha," << num(r.a2.alpha) << '\n';
  out << "approx3.beta," << num(r.a3.params.beta) << '\n';
  out << "approx3.alpha," << num(r.a3.params.alpha) << '\n';
  out << "approx3.squeeze," << num(r.a3.squeeze) << '\n';
  if (r.symmetric) {
    out << "symmetric.sigma2," << num(r.sigma2) << '\n';
    out << "symmetric.db," << num(r.db) << '\n';
    out << "matched.kappa," << num(r.matched.kappa) << '\n';
    out << "matched.delta1," << num(r.matched.delta1) << '\n';
    out << "matched.gamma," << num(r.matched.gamma) << '\n';
    out << "matched.delta2," << num(r.matched.delta2) << '\n';
  }
}

// ---------------------------------------------------------------------------
// Subcommand drivers.
// ---------------------------------------------------------------------------

int run_convert(const StateFlags& s, const std::string& out_path,
                OutputFormat format) {
  const ConvertReport report = make_convert_report(build_state(s));
  return write_output(out_path, [&](std::ostream& out) {
    if (format == OutputFormat::json)
      write_convert_json(out, report);
    else
      write_convert_csv(out, report);
  });
}

struct WavefunctionFlags {
  std::string rep = "position";
  double min = kUnsetReal;
  double max = kUnsetReal;
  int points = 601;
  bool unnormalized = false;
};

int run_wavefunction(const StateFlags& s, const WavefunctionFlags& w,
                     const RunConfig& cfg) {
  const StandardParams p = build_state(s);
  const double lo = is_set(w.min) ? w.min : -3.0 * p.gamma_spacing;
  const double hi = is_set(w.max) ? w.max : 3.0 * p.gamma_spacing;
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
    throw std::domain_error("wavefunction: --min must be finite and < --max");
  if (w.points < 2)
    throw std::domain_error("wavefunction: --points must be >= 2");

  const SeriesControl ctrl = cfg.series();
  const bool normalized = !w.unnormalized;
  const std::size_t count = static_cast<std::size_t>(w.points);
  const double step = (hi - lo) / static_cast<double>(w.points - 1);

  std::vector<AmplitudeSample> samples(count);
  if (w.rep == "momentum") {
    detail::parallel_for(count, [&](std::size_t i) {
      const double x = lo + static_cast<double>(i) * step;
      samples[i] = {x, momentum_amplitude(p, x, normalized, ctrl)};
    });
  } else {
    detail::parallel_for(count, [&](std::size_t i) {
      const double x = lo + static_cast<double>(i) * step;
      samples[i] = {x, {position_amplitude(p, x, normalized, ctrl), 0.0}};
    });
  }

  return write_output(cfg.output_path, [&](std::ostream& out) {
    if (cfg.format == OutputFormat::json)
      write_wavefunction_json(out, samples);
    else
      write_wavefunction_csv(out, samples);
  });
}

struct WignerFlags {
  int j_prime = kUnsetInt;
  double q_min = kUnsetReal;
  double q_max = kUnsetReal;
  double p_min = kUnsetReal;
  double p_max = kUnsetReal;
  int nq = 201;
  int np = 201;
  std::string route = "comb_product";
};

WignerRoute parse_route(const std::string& name) {
  if (name == "comb_product") return WignerRoute::comb_product;
  if (name == "theta_form") return WignerRoute::theta_form;
  return WignerRoute::riemann_theta;
}

int run_wigner(const StateFlags& s, const WignerFlags& w, const RunConfig& cfg) {
  const StandardParams p = build_state(s);
  PhaseSpaceGrid grid;
  grid.q_min = is_set(w.q_min) ? w.q_min : -2.0 * p.gamma_spacing;
  grid.q_max = is_set(w.q_max) ? w.q_max : 2.0 * p.gamma_spacing;
  grid.p_min = is_set(w.p_min) ? w.p_min : -2.0 * p.gamma_spacing;
  grid.p_max = is_set(w.p_max) ? w.p_max : 2.0 * p.gamma_spacing;
  grid.nq = w.nq;
  grid.np = w.np;

  const int j_prime = w.j_prime == kUnsetInt ? s.j : w.j_prime;
  const std::vector<WignerSample> samples =
      wigner_grid(p, s.j, j_prime, grid, cfg.series(), parse_route(w.route));

  return write_output(cfg.output_path, [&](std::ostream& out) {
    if (cfg.format == OutputFormat::json)
      write_wigner_json(out, samples);
    else
      write_wigner_csv(out, samples);
  });
}

struct SweepFlags {
  std::string quantity;
  int d = 2;
  int j = 0;
  int j_prime = 1;
  double db_min = kUnsetReal;
  double db_max = kUnsetReal;
  int db_steps = 2;
};

int run_sweep_cmd(const SweepFlags& f, const RunConfig& cfg) {
  SweepSpec spec;
  if (f.quantity == "overlap")
    spec.quantity = SweepQuantity::overlap;
  else if (f.quantity == "photon")
    spec.quantity = SweepQuantity::photon;
  else
    spec.quantity = SweepQuantity::normalization;
  spec.d = f.d;
  spec.j = f.j;
  spec.j_prime = f.j_prime;
  spec.db_min = f.db_min;
  spec.db_max = f.db_max;
  spec.db_steps = f.db_steps;

  const std::vector<SweepRow> rows = run_sweep(spec, cfg.series());
  return write_output(cfg.output_path, [&](std::ostream& out) {
    if (cfg.format == OutputFormat::json)
      write_sweep_json(out, spec.quantity, rows);
    else
      write_sweep_csv(out, spec.quantity, rows);
  });
}

int run_selftest_cmd(const std::string& only, const RunConfig& cfg) {
  const std::vector<SelftestCheck> checks = run_selftest(cfg.series(), only);
  const int io_status = write_output(cfg.output_path, [&](std::ostream& out) {
    write_selftest_json(out, checks);
  });
  if (io_status != 0) return io_status;
  for (const SelftestCheck& c : checks)
    if (!c.pass) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_ALL, "C");

  CLI::App app{
      "gkpkit: approximate GKP code states in closed form — parameter\n"
      "conversion, position/momentum wavefunctions, Wigner functions,\n"
      "observable sweeps over squeezing level, and self-tests."};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("gkpkit ") + GKPKIT_VERSION);

  RunConfig cfg;
  std::string format_str;
  app.add_option("--tol", cfg.tol, "series tolerance (default 1e-12)");
  app.add_option("--max-terms", cfg.max_terms,
                 "series term cap (default 1000000)");
  app.add_option("--out", cfg.output_path, "output file (default: stdout)");
  app.add_option("--format", format_str,
                 "output format: csv or json (data commands default to csv, "
                 "convert to json)")
      ->check(CLI::IsMember({"csv", "json"}));

  StateFlags convert_state;
  CLI::App* convert = app.add_subcommand(
      "convert", "print every equivalent parametrization of one state");
  convert->fallthrough();
  add_state_flags(convert, convert_state);

  StateFlags wf_state;
  WavefunctionFlags wf;
  CLI::App* wavefunction = app.add_subcommand(
      "wavefunction", "sample the position or momentum wavefunction");
  wavefunction->fallthrough();
  add_state_flags(wavefunction, wf_state);
  wavefunction->add_option("--rep", wf.rep, "representation (default position)")
      ->check(CLI::IsMember({"position", "momentum"}));
  wavefunction->add_option("--min", wf.min,
                           "lower end of the sample range (default -3 Gamma)");
  wavefunction->add_option("--max", wf.max,
                           "upper end of the sample range (default +3 Gamma)");
  wavefunction->add_option("--points", wf.points,
                           "number of sample points (default 601)");
  wavefunction->add_flag("--unnormalized", wf.unnormalized,
                         "emit bare amplitudes without the 1/sqrt(N) factor");

  StateFlags wig_state;
  WignerFlags wig;
  CLI::App* wigner = app.add_subcommand(
      "wigner", "sample the Wigner function of |j><j'| on a rectangular grid");
  wigner->fallthrough();
  add_state_flags(wigner, wig_state);
  wigner->add_option("--j-prime", wig.j_prime,
                     "second logical index (default: --j)");
  wigner->add_option("--q-min", wig.q_min, "grid lower q bound (default -2 Gamma)");
  wigner->add_option("--q-max", wig.q_max, "grid upper q bound (default +2 Gamma)");
  wigner->add_option("--p-min", wig.p_min, "grid lower p bound (default -2 Gamma)");
  wigner->add_option("--p-max", wig.p_max, "grid upper p bound (default +2 Gamma)");
  wigner->add_option("--nq", wig.nq, "grid points along q (default 201)");
  wigner->add_option("--np", wig.np, "grid points along p (default 201)");
  wigner->add_option("--route", wig.route, "evaluation route (default comb_product)")
      ->check(CLI::IsMember({"comb_product", "theta_form", "riemann_theta"}));

  SweepFlags sweep_flags;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "tabulate an observable of the symmetric code against dB level");
  sweep->fallthrough();
  sweep->add_option("--quantity", sweep_flags.quantity,
                    "overlap (-ln |<j'|j>|), photon (average number), or "
                    "normalization")
      ->required()
      ->check(CLI::IsMember({"overlap", "photon", "normalization"}));
  sweep->add_option("--d", sweep_flags.d, "qudit dimension (default 2)");
  sweep->add_option("--j", sweep_flags.j, "logical index (default 0)");
  sweep->add_option("--j-prime", sweep_flags.j_prime,
                    "second index for overlap sweeps (default 1)");
  sweep->add_option("--db-min", sweep_flags.db_min, "lowest squeezing level in dB")
      ->required();
  sweep->add_option("--db-max", sweep_flags.db_max, "highest squeezing level in dB")
      ->required();
  sweep->add_option("--db-steps", sweep_flags.db_steps,
                    "number of points including both ends (default 2)");

  std::string only;
  CLI::App* selftest = app.add_subcommand(
      "selftest", "run the cross-route and oracle checks; report is JSON");
  selftest->fallthrough();
  selftest->add_option("--only", only,
                       "run only checks whose name contains this substring");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    cfg.validate();
    cfg.format = resolve_format(
        format_str,
        convert->parsed() ? OutputFormat::json : OutputFormat::csv);
    if (convert->parsed())
      return run_convert(convert_state, cfg.output_path, cfg.format);
    if (wavefunction->parsed()) return run_wavefunction(wf_state, wf, cfg);
    if (wigner->parsed()) return run_wigner(wig_state, wig, cfg);
    if (sweep->parsed()) return run_sweep_cmd(sweep_flags, cfg);
    return run_selftest_cmd(only, cfg);
  } catch (const route_disagreement_error& e) {
    std::fprintf(stderr, "gkpkit: %s\n", e.what());
    return 1;
  } catch (const nonconvergence_error& e) {
    std::fprintf(stderr, "gkpkit: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "gkpkit: %s\n", e.what());
    return 2;
  }
}
