// Copyright The Akhiezer Transform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "akhiezer/transform.hpp"

namespace akhiezer::verify {

/// One named invariant. For defect checks `value` is the measured defect,
/// `bound_or_target` the ideal value and `tolerance` the allowed distance.
/// For bound checks `value` must not exceed `bound_or_target`.
struct CheckResult {
  std::string name;
  std::string paper_ref;  // the property being checked, in words
  double value = 0.0;
  double bound_or_target = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

enum class Fault {
  kNone,
  kMultiplierTable,  // S table scaled by 1.01 in every spectral check
};

struct SuiteOptions {
  double omega = 1.0;
  double sigma = 0.0;  // added to the bound and round-trip sweeps when > 0
  std::uint64_t seed = 1;
  Fault fault = Fault::kNone;
  int random_signals = 20;  // Pythagoras draws
  int bound_trials = 10;
  transform::Tolerances tol;
};

struct Report {
  double omega = 0.0;
  double sigma = 0.0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  std::vector<std::string> failing() const;
  /// {"omega", "sigma", "seed", "all_pass", "checks": [...]} with stable key
  /// order; no timings, so identical options give identical text.
  std::string to_json() const;
};

Report run_suite(const SuiteOptions& opts);

// Individual checks, shared by the suite and the acceptance driver.

std::vector<CheckResult> check_kernel_envelopes(const OmegaParam& omega, int points);

CheckResult check_crucial_identity(std::span<const double> omegas, int points, double tol);

CheckResult check_matrix_unitarity(const OmegaParam& omega, int points, double tol);

CheckResult check_table_unitarity(const transform::TransformPlan& plan, double tol);

/// Grid FT of sampled C (delta = 0.02/omega, support 40/omega) against c_hat
/// on [-20 omega, 20 omega].
CheckResult check_fourier_C(const OmegaParam& omega, int points, double tol);

/// Epsilon-extrapolated truncated FT of S against s_hat on
/// [-25 omega, 25 omega].
CheckResult check_fourier_S(const OmegaParam& omega, int points, double tol);

/// |rho(omega, eps)| strictly decreasing over eps = {0.2, 0.1, 0.05, 0.025}/omega.
CheckResult check_remainder_decay(const OmegaParam& omega);

/// sup |rho| over lambda in [-50 omega, 50 omega] and eps = pi/(4 omega) 2^-k,
/// against 2 Si(pi)/pi (S positive and decreasing on (0, inf)).
CheckResult check_remainder_sup(const OmegaParam& omega, int lambdas, int levels);

/// Grid used by the L² checks: [-L, L] with L = 20 max(1, 1/omega).
GridDesc l2_grid(const OmegaParam& omega, std::size_t n);

/// Random smooth well-contained signals: modulated gaussians with random
/// center, width and carrier.
std::vector<GridSignal> random_smooth_signals(const GridDesc& grid, int count,
                                              std::uint64_t seed);

/// Fixed vector test signals well inside `grid`.
std::vector<VectorSignal> standard_vector_signals(const GridDesc& grid);

CheckResult check_pythagoras(const transform::TransformPlan& plan,
                             std::span<const GridSignal> signals, double tol);

/// isometry_phi, isometry_psi, inversion_psi_phi, inversion_phi_psi.
std::vector<CheckResult> check_isometry_inversion(const transform::TransformPlan& plan,
                                                  std::span<const VectorSignal> signals,
                                                  double tol);

/// Norm preservation and H^2 = -I for the pairing-scheme Hilbert transform on
/// derivatives of gaussians and a modulated gaussian over [-L, L] with n nodes.
std::vector<CheckResult> check_hilbert(double half_width, std::size_t n, double norm_tol,
                                       double square_tol);

/// Both closed-form integrals against adaptive quadrature for a = 0, 0.1, .., 0.9.
std::vector<CheckResult> check_closed_forms(double tol);

CheckResult bound_check(const transform::TransformPlan& plan, double sigma,
                        transform::Operator op, int trials, std::uint64_t seed);

/// [-60, 60]/omega with 8192 nodes: random weighted signals live
/// on the central half, so outputs decay by e^{-30(1-a)} before the edge.
GridDesc roundtrip_grid(const OmegaParam& omega);

/// Worst weighted round-trip error (both orders) over `count` random
/// growth-admitting signals with growth below sigma.
CheckResult check_weighted_roundtrip(const transform::TransformPlan& plan, double sigma_ratio,
                                     int count, std::uint64_t seed, double tol);

/// Max node-wise deviation between the spectral and direct paths for a
/// gaussian on [-8, 8] max(1, 1/omega) at n nodes (every node).
std::vector<CheckResult> check_cross_path(const transform::TransformPlan& plan, double c_tol,
                                          double s_tol);

}  // namespace akhiezer::verify
