// Copyright The Akhiezer Transform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <limits>
#include <span>
#include <vector>

#include "akhiezer/grid.hpp"
#include "akhiezer/kernels.hpp"

namespace akhiezer::quadrature {

struct PVConfig {
  /// Largest pairing offset u considered.
  double pairing_halfwidth = std::numeric_limits<double>::infinity();
  /// Offsets beyond tail_cut/omega are dropped (S has decayed below e^{-tail_cut}).
  double tail_cut = 40.0;
  /// A step-doubling error estimate above quad_tol * max(1, max|x|) is fatal.
  double quad_tol = 1e-3;

  void validate() const;
};

/// How the S kernel is evaluated by the pairing scheme.
enum class KernelForm {
  kSplit,   // 1/(pi u) handled analytically near 0, r(u) numerically
  kDirect,  // S(u) used as is, limit value at u = 0
};

struct DirectResult {
  std::vector<cdouble> values;
  bool coarse_grid = false;  // delta*omega > 1
};

struct PvResult {
  std::vector<cdouble> values;
  std::vector<double> error_estimates;  // |y_delta - y_{2 delta}| per point
};

/// All node abscissae of a grid.
std::vector<double> grid_nodes(const GridDesc& grid);

/// (C x)(t) by the composite trapezoid rule over the grid, x = 0 off grid.
/// Any real t is allowed.
DirectResult convolve_C_direct(const OmegaParam& omega, const GridSignal& x,
                               std::span<const double> eval_at);

/// p.v. (S x)(t) at grid nodes through the pairing identity
///   y(t) = int_0^inf S(u) [x(t-u) - x(t+u)] du.
/// On (0, delta] the integrand is integrated against a local cubic model of x
/// (derivatives from centered differences); the rest uses the trapezoid rule
/// with its leading endpoint correction. Throws kInvalidArgument for non-node
/// points and QuadratureError when the step-doubling estimate exceeds the
/// configured tolerance.
PvResult convolve_S_pv(const OmegaParam& omega, const GridSignal& x,
                       std::span<const double> eval_at, const PVConfig& cfg = {},
                       KernelForm form = KernelForm::kSplit);

/// Hilbert transform p.v. (1/pi) int x(tau)/(t - tau) dtau by the same scheme.
PvResult hilbert_pv(const GridSignal& x, std::span<const double> eval_at,
                    const PVConfig& cfg = {});

struct EpsilonSweep {
  std::vector<cdouble> values;       // one per epsilon
  std::vector<double> differences;   // |v_{k+1} - v_k|
  cdouble limit;                     // Neville extrapolation to eps = 0
  bool converged = false;
};

/// Truncated integrals int_{|t-tau| >= eps} S(t-tau) x(tau) dtau for a
/// strictly decreasing list of eps, t a grid node. x between nodes comes from
/// 4-point Lagrange interpolation; each grid cell is integrated with 5-point
/// Gauss-Legendre. `converged` is set when successive differences contract
/// by a factor <= 0.75 at every step (or are below 1e-12). The truncated
/// values approach the p.v. only linearly in eps; `limit` is the polynomial
/// extrapolation of the sweep to eps = 0.
EpsilonSweep epsilon_sweep_pv(const OmegaParam& omega, const GridSignal& x,
                              double t, std::span<const double> epsilons);

}  // namespace akhiezer::quadrature
