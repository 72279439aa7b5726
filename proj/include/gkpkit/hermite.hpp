// Copyright (c) 2026 gkpkit contributors
// SPDX-License-Identifier: MIT
//
// Orthonormal Hermite functions and Gauss-Hermite quadrature.
//
// The functions psi_n are the L²-orthonormal eigenfunctions of the
// harmonic oscillator (number basis),
//
//   psi_0(x) = pi^{-1/4} e^{-x²/2},
//   psi_{n+1}(x) = sqrt(2/(n+1)) x psi_n(x) - sqrt(n/(n+1)) psi_{n-1}(x).
//
// The three-term recurrence is run in a mantissa · 2^exponent
// representation: psi_0 underflows a plain double for |x| ≳ 38 while the
// values needed near the classical turning points are O(1), so the
// power-of-two exponent is tracked explicitly and folded back in only
// when a value is materialized.
//
// The quadrature rule returned by hermite_rule uses the zeros of psi_m
// with *total* weights w_i = 1/(m·psi_{m-1}(x_i)²) — the classical
// Gauss-Hermite weights with the e^{x²} factor absorbed — so that
// ∫ f(x) dx ≈ Σ w_i f(x_i) directly for integrands with Gaussian decay.

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gkpkit/series.hpp"

namespace gkpkit {
namespace detail {

/// (psi_{n-1}(x), psi_n(x)) as (prev, curr) · 2^exp2.
struct ScaledHermitePair {
  double prev = 0.0;
  double curr = 0.0;
  int exp2 = 0;
};

inline void renormalize_pair(ScaledHermitePair& p) {
  const double mag = std::max(std::fabs(p.prev), std::fabs(p.curr));
  if (mag > 0x1p512) {
    p.prev = std::ldexp(p.prev, -512);
    p.curr = std::ldexp(p.curr, -512);
    p.exp2 += 512;
  } else if (mag > 0.0 && mag < 0x1p-512) {
    p.prev = std::ldexp(p.prev, 512);
    p.curr = std::ldexp(p.curr, 512);
    p.exp2 -= 512;
  }
}

/// Scaled psi_0: pi^{-1/4} e^{-x²/2} = mantissa · 2^exp2 with the
/// exponent split off exactly.
inline ScaledHermitePair hermite_seed(double x) {
  const double log2_psi = -0.5 * x * x / std::log(2.0);
  const double e = std::floor(log2_psi);
  ScaledHermitePair p;
  p.prev = 0.0;
  p.curr = std::pow(pi, -0.25) * std::exp2(log2_psi - e);
  p.exp2 = static_cast<int>(e);
  return p;
}

/// Advance the recurrence from (psi_{k-1}, psi_k) to (psi_k, psi_{k+1}).
inline void hermite_step(ScaledHermitePair& p, int k, double x) {
  const double next = std::sqrt(2.0 / (k + 1.0)) * x * p.curr -
                      std::sqrt(k / (k + 1.0)) * p.prev;
  p.prev = p.curr;
  p.curr = next;
  renormalize_pair(p);
}

/// (psi_{n-1}(x), psi_n(x)) in scaled form; requires n >= 1.
inline ScaledHermitePair hermite_pair(int n, double x) {
  if (n < 1) throw std::domain_error("hermite_pair: order must be >= 1");
  ScaledHermitePair p = hermite_seed(x);
  for (int k = 0; k < n; ++k) hermite_step(p, k, x);
  return p;
}

}  // namespace detail

/// psi_0(x) .. psi_n_max(x) as plain doubles; values below the double
/// range flush to zero (they are genuinely negligible there).
inline std::vector<double> hermite_functions(int n_max, double x) {
  if (n_max < 0) throw std::domain_error("hermite_functions: n_max must be >= 0");
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
  detail::ScaledHermitePair p = detail::hermite_seed(x);
  out[0] = std::ldexp(p.curr, p.exp2);
  for (int k = 0; k < n_max; ++k) {
    detail::hermite_step(p, k, x);
    out[static_cast<std::size_t>(k) + 1] = std::ldexp(p.curr, p.exp2);
  }
  return out;
}

/// Gauss-Hermite rule in total-weight form: ∫ f ≈ Σ weights[i]·f(nodes[i])
/// for smooth f with Gaussian decay.  Nodes ascend and are symmetric
/// about zero.
struct HermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

namespace detail {

/// One Newton-polished zero of psi_m near `guess`, kept inside
/// (lo, guess + step_cap) to preserve the node ordering.
inline double hermite_newton(int m, double guess, double lo, double step_cap) {
  double x = guess;
  const double root_2m = std::sqrt(2.0 * m);
  for (int iter = 0; iter < 64; ++iter) {
    const ScaledHermitePair p = hermite_pair(m, x);
    const double deriv = root_2m * p.prev - x * p.curr;  // psi_m'(x), same scale
    if (deriv == 0.0) break;
    double step = -p.curr / deriv;
    if (step > step_cap) step = step_cap;
    if (step < -step_cap) step = -step_cap;
    double next = x + step;
    if (next <= lo) next = 0.5 * (x + lo);
    const double done = std::fabs(next - x) <= 1e-15 * std::max(1.0, std::fabs(next));
    x = next;
    if (done) return x;
  }
  throw std::runtime_error("hermite_rule: node iteration failed to converge");
}

}  // namespace detail

inline HermiteRule hermite_rule(int n_nodes) {
  if (n_nodes < 1) throw std::domain_error("hermite_rule: need at least one node");
  const int m = n_nodes;
  const double band = 2.0 * m + 1.0;  // classically allowed |x| < sqrt(band)
  const auto spacing = [&](double x) {
    return detail::pi / std::sqrt(std::max(band - x * x, std::cbrt(band)));
  };

  std::vector<double> pos;  // strictly positive zeros, ascending
  pos.reserve(static_cast<std::size_t>(m) / 2);
  double prev = 0.0;
  for (int k = 0; k < m / 2; ++k) {
    const bool first = (k == 0);
    const double s = spacing(prev);
    const double guess = prev + ((first && m % 2 == 0) ? 0.5 * s : s);
    const double lo = first && m % 2 == 0 ? 0.0 : prev;
    const double x = detail::hermite_newton(m, guess, lo, 0.75 * s);
    pos.push_back(x);
    prev = x;
  }

  HermiteRule rule;
  rule.nodes.reserve(static_cast<std::size_t>(m));
  rule.weights.reserve(static_cast<std::size_t>(m));
  const auto total_weight = [&](double x) {
    const detail::ScaledHermitePair p = detail::hermite_pair(m, x);
    const double prev_val = std::ldexp(p.prev, p.exp2);
    return 1.0 / (m * prev_val * prev_val);
  };
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) {
    rule.nodes.push_back(-*it);
    rule.weights.push_back(total_weight(*it));
  }
  if (m % 2 == 1) {
    rule.nodes.push_back(0.0);
    rule.weights.push_back(total_weight(0.0));
  }
  for (std::size_t k = 0; k < pos.size(); ++k) {
    rule.nodes.push_back(pos[k]);
    rule.weights.push_back(rule.weights[pos.size() - 1 - k]);
  }
  return rule;
}

}  // namespace gkpkit
