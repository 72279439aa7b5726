// Copyright (c) 2026 gkpkit contributors
// SPDX-License-Identifier: MIT
//
// Umbrella header: pulls in the full public surface of the library.

#pragma once

#define GKPKIT_VERSION "1.0.0"

#include "gkpkit/code_params.hpp"
#include "gkpkit/comb.hpp"
#include "gkpkit/errors.hpp"
#include "gkpkit/hermite.hpp"
#include "gkpkit/io.hpp"
#include "gkpkit/observables.hpp"
#include "gkpkit/parallel.hpp"
#include "gkpkit/photon.hpp"
#include "gkpkit/quadrature.hpp"
#include "gkpkit/riemann_theta.hpp"
#include "gkpkit/selftest.hpp"
#include "gkpkit/series.hpp"
#include "gkpkit/state_reps.hpp"
#include "gkpkit/sweep.hpp"
#include "gkpkit/theta.hpp"
#include "gkpkit/wigner.hpp"
