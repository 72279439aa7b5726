// Copyright (c) 2026 gkpkit contributors
// SPDX-License-Identifier: MIT
//
// Thin adaptive-quadrature wrapper (Gauss-Kronrod 15-point, boost.math).

#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <utility>

namespace gkpkit {
namespace detail {

// Adaptive integral of f over [a, b] to relative tolerance `tol`.
template <typename F>
double integrate(F&& f, double a, double b, double tol = 1e-10) {
  double error = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      std::forward<F>(f), a, b, 15, tol, &error);
}

}  // namespace detail
}  // namespace gkpkit
