// Copyright (c) 2026 gkpkit contributors
// SPDX-License-Identifier: MIT

#pragma once

#include <stdexcept>
#include <string>

namespace gkpkit {

/// Thrown when a truncated series cannot meet the requested tolerance within
/// the configured summation cap. Distinct from std::domain_error so callers
/// can tell "bad input" apart from "tolerance unattainable at this budget".
class nonconvergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by cross-checked evaluators when independent evaluation routes of
/// the same quantity disagree by more than the diagnostic threshold
/// (10x the requested tolerance). Disagreement at that level indicates an
/// implementation or conditioning problem, not truncation noise.
class route_disagreement_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gkpkit
