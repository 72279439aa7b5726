// Copyright (c) 2026 gkpkit contributors
// SPDX-License-Identifier: MIT
//
// Sweeps, serialization and the built-in self-test: schema stability,
// exact round trips of the 17-significant-digit format, determinism, and
// the pass/fail semantics of the check registry.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkpkit/gkpkit.hpp"

namespace {

using gkpkit::SeriesControl;
using gkpkit::SweepQuantity;
using gkpkit::SweepRow;
using gkpkit::SweepSpec;

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("sweep specs validate their invariants", "[io]") {
  SweepSpec spec;
  spec.quantity = SweepQuantity::overlap;
  spec.d = 2;
  spec.j = 0;
  spec.j_prime = 1;
  spec.db_min = 4.0;
  spec.db_max = 12.0;
  spec.db_steps = 5;
  CHECK_NOTHROW(spec.validate());

  SweepSpec bad = spec;
  bad.db_min = 12.0;
  CHECK_THROWS_AS(bad.validate(), std::domain_error);
  bad = spec;
  bad.db_min = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::domain_error);
  bad = spec;
  bad.db_steps = 1;
  CHECK_THROWS_AS(bad.validate(), std::domain_error);
  bad = spec;
  bad.j_prime = 2;
  CHECK_THROWS_AS(bad.validate(), std::domain_error);
  bad = spec;
  bad.d = 0;
  CHECK_THROWS_AS(bad.validate(), std::domain_error);
}

TEST_CASE("overlap sweeps sample the decay exponent on the dB axis", "[io]") {
  SweepSpec spec;
  spec.quantity = SweepQuantity::overlap;
  spec.d = 2;
  spec.j = 0;
  spec.j_prime = 1;
  spec.db_min = 6.0;
  spec.db_max = 14.0;
  spec.db_steps = 5;

  const std::vector<SweepRow> rows = gkpkit::run_sweep(spec);
  REQUIRE(rows.size() == 5);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    CHECK(rows[k].db == Catch::Approx(6.0 + 2.0 * static_cast<double>(k)));
    CHECK(rows[k].sigma2 == gkpkit::sigma2_from_db(rows[k].db));
  }

  // Spot-check the quantity definition against the observable it wraps.
  const gkpkit::StandardParams p = gkpkit::standard_from_symmetric(
      gkpkit::SymmetricParams{rows[2].sigma2, gkpkit::CodeLabel{2, 0}});
  const double direct = -std::log(std::abs(gkpkit::inner_product(p, 0, 1)));
  CHECK(rows[2].value == Catch::Approx(direct).epsilon(1e-12));

  // Decay exponent grows with the squeezing level.
  for (std::size_t k = 1; k < rows.size(); ++k)
    CHECK(rows[k].value > rows[k - 1].value);
}

TEST_CASE("photon sweeps carry the high-squeezing estimate", "[io]") {
  SweepSpec spec;
  spec.quantity = SweepQuantity::photon;
  spec.d = 2;
  spec.j = 0;
  spec.db_min = 6.0;
  spec.db_max = 16.0;
  spec.db_steps = 6;

  const std::vector<SweepRow> rows = gkpkit::run_sweep(spec);
  REQUIRE(rows.size() == 6);
  for (const SweepRow& row : rows) {
    CHECK(row.estimate == 1.0 / (4.0 * row.sigma2) - 0.5);
    const gkpkit::StandardParams p = gkpkit::standard_from_symmetric(
        gkpkit::SymmetricParams{row.sigma2, gkpkit::CodeLabel{2, 0}});
    CHECK(row.value ==
          Catch::Approx(gkpkit::avg_photon(p, gkpkit::PhotonRoute::theta_formula)
                            .n_avg)
              .epsilon(1e-12));
  }

  // Value and estimate converge at high squeezing.
  CHECK(std::abs(rows.front().value / rows.front().estimate - 1.0) > 0.05);
  CHECK(std::abs(rows.back().value / rows.back().estimate - 1.0) < 0.01);
}

TEST_CASE("normalization sweeps wrap the closed form", "[io]") {
  SweepSpec spec;
  spec.quantity = SweepQuantity::normalization;
  spec.d = 3;
  spec.j = 1;
  spec.db_min = 8.0;
  spec.db_max = 12.0;
  spec.db_steps = 2;

  const std::vector<SweepRow> rows = gkpkit::run_sweep(spec);
  REQUIRE(rows.size() == 2);
  for (const SweepRow& row : rows) {
    const gkpkit::StandardParams p = gkpkit::standard_from_symmetric(
        gkpkit::SymmetricParams{row.sigma2, gkpkit::CodeLabel{3, 1}});
    CHECK(row.value == Catch::Approx(gkpkit::normalization(p)).epsilon(1e-13));
  }
}

TEST_CASE("csv writers emit stable schemas with 17-digit values", "[io]") {
  SECTION("wavefunction: x,re,im") {
    std::vector<gkpkit::AmplitudeSample> samples(2);
    samples[0] = {0.1, {1.0 / 3.0, -2.0e-17}};
    samples[1] = {-4.75, {0.0, 12345.678901234567}};
    std::ostringstream out;
    gkpkit::write_wavefunction_csv(out, samples);
    const std::vector<std::string> lines = lines_of(out.str());
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "x,re,im");
    CHECK(lines[1] == "0.10000000000000001,0.33333333333333331,-2.0000000000000001e-17");
    CHECK(lines[2] == "-4.75,0,12345.678901234567");
  }

  SECTION("wigner: q,p,re,im") {
    std::vector<gkpkit::WignerSample> samples(1);
    samples[0] = {1.5, -0.25, {0.5, -1.0 / 7.0}};
    std::ostringstream out;
    gkpkit::write_wigner_csv(out, samples);
    const std::vector<std::string> lines = lines_of(out.str());
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "q,p,re,im");
    CHECK(lines[1] == "1.5,-0.25,0.5,-0.14285714285714285");
  }

  SECTION("sweep: estimate column only for photon sweeps") {
    std::vector<SweepRow> rows(1);
    rows[0] = {10.0, 0.05, 4.5, 4.5000000001};
    std::ostringstream photon, overlap;
    gkpkit::write_sweep_csv(photon, SweepQuantity::photon, rows);
    gkpkit::write_sweep_csv(overlap, SweepQuantity::overlap, rows);
    CHECK(lines_of(photon.str())[0] == "db,sigma2,value,estimate");
    CHECK(lines_of(photon.str())[1] == "10,0.050000000000000003,4.5,4.5000000001");
    CHECK(lines_of(overlap.str())[0] == "db,sigma2,value");
    CHECK(lines_of(overlap.str())[1] == "10,0.050000000000000003,4.5");
  }

  SECTION("minimal two-point sweep serializes to three lines") {
    SweepSpec spec;
    spec.quantity = SweepQuantity::overlap;
    spec.db_min = 8.0;
    spec.db_max = 10.0;
    spec.db_steps = 2;
    std::ostringstream out;
    gkpkit::write_sweep_csv(out, spec.quantity, gkpkit::run_sweep(spec));
    CHECK(lines_of(out.str()).size() == 3);
  }
}

TEST_CASE("json writers mirror the csv columns", "[io]") {
  std::vector<gkpkit::AmplitudeSample> samples(2);
  samples[0] = {0.5, {1.25, 0.0}};
  samples[1] = {1.0, {-0.5, 0.75}};
  std::ostringstream out;
  gkpkit::write_wavefunction_json(out, samples);
  const std::string text = out.str();
  CHECK(text.find("\"x\": 0.5") != std::string::npos);
  CHECK(text.find("\"re\": 1.25") != std::string::npos);
  CHECK(text.find("\"im\": 0.75") != std::string::npos);
  CHECK(text.front() == '[');
  CHECK(lines_of(text).back() == "]");

  std::vector<SweepRow> rows(1);
  rows[0] = {10.0, 0.05, 4.5, 4.45};
  std::ostringstream photon, overlap;
  gkpkit::write_sweep_json(photon, SweepQuantity::photon, rows);
  gkpkit::write_sweep_json(overlap, SweepQuantity::overlap, rows);
  CHECK(photon.str().find("\"estimate\": 4.45") != std::string::npos);
  CHECK(overlap.str().find("estimate") == std::string::npos);

  std::vector<gkpkit::WignerSample> wsamples(1);
  wsamples[0] = {0.25, -0.5, {0.1, 0.2}};
  std::ostringstream wigner;
  gkpkit::write_wigner_json(wigner, wsamples);
  CHECK(wigner.str().find("\"q\": 0.25") != std::string::npos);
  CHECK(wigner.str().find("\"p\": -0.5") != std::string::npos);
}

TEST_CASE("serialization is deterministic", "[io]") {
  SweepSpec spec;
  spec.quantity = SweepQuantity::photon;
  spec.db_min = 6.0;
  spec.db_max = 10.0;
  spec.db_steps = 3;

  ::setenv("GKPKIT_THREADS", "3", 1);
  std::ostringstream first;
  gkpkit::write_sweep_csv(first, spec.quantity, gkpkit::run_sweep(spec));
  ::setenv("GKPKIT_THREADS", "1", 1);
  std::ostringstream second;
  gkpkit::write_sweep_csv(second, spec.quantity, gkpkit::run_sweep(spec));
  ::unsetenv("GKPKIT_THREADS");
  CHECK(first.str() == second.str());
}

TEST_CASE("run config validates", "[io]") {
  gkpkit::RunConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.series().tol == cfg.tol);
  cfg.tol = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::domain_error);
  cfg.tol = 1e-10;
  cfg.max_terms = 0;
  CHECK_THROWS_AS(cfg.validate(), std::domain_error);
}

TEST_CASE("selftest passes at default tolerance and reports failures at an "
          "unattainable one", "[io]") {
  const std::vector<gkpkit::SelftestCheck> checks = gkpkit::run_selftest();
  REQUIRE(checks.size() >= 30);
  for (const gkpkit::SelftestCheck& c : checks) {
    INFO(c.check_name << " residual=" << c.residual << " tol=" << c.tolerance);
    CHECK(c.pass);
  }

  SECTION("names are unique") {
    for (std::size_t a = 0; a < checks.size(); ++a)
      for (std::size_t b = a + 1; b < checks.size(); ++b)
        CHECK(checks[a].check_name != checks[b].check_name);
  }

  SECTION("substring filter selects a subset") {
    const std::vector<gkpkit::SelftestCheck> subset =
        gkpkit::run_selftest(SeriesControl{}, "theta");
    REQUIRE(!subset.empty());
    CHECK(subset.size() < checks.size());
    for (const gkpkit::SelftestCheck& c : subset)
      CHECK(c.check_name.find("theta") != std::string::npos);
  }

  SECTION("unattainable tolerance produces honest failures") {
    const std::vector<gkpkit::SelftestCheck> strict =
        gkpkit::run_selftest(SeriesControl{1e-20, 1000000}, "params");
    bool any_fail = false;
    for (const gkpkit::SelftestCheck& c : strict) any_fail = any_fail || !c.pass;
    CHECK(any_fail);
  }

  SECTION("json report carries the schema") {
    std::ostringstream out;
    gkpkit::write_selftest_json(out, checks);
    const std::string text = out.str();
    CHECK(text.find("\"check_name\": \"theta.jacobi_identity\"") != std::string::npos);
    CHECK(text.find("\"residual\": ") != std::string::npos);
    CHECK(text.find("\"tolerance\": ") != std::string::npos);
    CHECK(text.find("\"pass\": true") != std::string::npos);
  }
}
