// Copyright The Akhiezer Transform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "akhiezer/grid.hpp"
#include "akhiezer/kernels.hpp"
#include "akhiezer/quadrature.hpp"

namespace akhiezer::transform {

/// Tolerances used by the verification drivers. Defaults are the contract
/// values; tests refer to these rather than repeating literals.
struct Tolerances {
  double table_unitarity = 1e-12;
  double crucial_identity = 1e-12;
  double c_cross_path = 1e-6;
  double s_cross_path = 1e-4;
  double isometry = 1e-6;
  double inversion = 1e-6;
  double pythagoras = 1e-6;
  double weighted_roundtrip = 1e-4;
  double fourier_c = 1e-6;
  double fourier_s = 1e-6;
  double hilbert_norm = 1e-3;
  double hilbert_square = 1e-4;
  double closed_form = 1e-8;
};

enum class Operator { kC, kS, kPhi, kPsi };

const char* to_string(Operator op);

/// Zero-padded FFT plan with tabulated multipliers for one omega and grid.
/// Immutable after construction and safe to share between threads.
class TransformPlan {
 public:
  TransformPlan(const OmegaParam& omega, const GridDesc& grid);

  const OmegaParam& omega() const noexcept { return omega_; }
  const GridDesc& grid() const noexcept { return grid_; }
  std::size_t padded_length() const noexcept { return m_; }

  /// Discrete frequency of FFT bin j (bin m/2 is taken as +pi/delta).
  double frequency(std::size_t j) const;

  std::span<const double> c_table() const noexcept { return c_table_; }
  std::span<const cdouble> s_table() const noexcept { return s_table_; }

  /// max_j | |c_j|^2 + |s_j|^2 - 1 |
  double table_unitarity_defect() const;

  /// Fourier convention of the tables, for reports.
  static constexpr const char* kConvention =
      "f^(lambda) = int f(t) exp(+i lambda t) dt; inverse (1/2pi) int exp(-i lambda t)";

  /// Copy whose S table is scaled by `factor`; used to check that the
  /// verification suite notices a broken multiplier.
  TransformPlan with_scaled_s_table(double factor) const;

  // Spectral application of the convolution operators. Inputs must live on
  // the plan's grid (kGridMismatch otherwise).
  GridSignal apply_C(const GridSignal& x) const;
  GridSignal apply_S(const GridSignal& x) const;
  VectorSignal apply_phi(const VectorSignal& x) const;
  VectorSignal apply_psi(const VectorSignal& x) const;

 private:
  struct FftHandles;

  std::vector<cdouble> forward(const GridSignal& x) const;
  GridSignal inverse(std::vector<cdouble> spectrum) const;
  VectorSignal apply_block(const VectorSignal& x, double s_sign) const;

  OmegaParam omega_;
  GridDesc grid_;
  std::size_t m_ = 0;
  std::vector<double> c_table_;
  std::vector<cdouble> s_table_;
  std::shared_ptr<const FftHandles> fft_;
};

inline TransformPlan make_plan(const OmegaParam& omega, const GridDesc& grid) {
  return TransformPlan(omega, grid);
}

inline GridSignal apply_C_spectral(const TransformPlan& plan, const GridSignal& x) {
  return plan.apply_C(x);
}
inline GridSignal apply_S_spectral(const TransformPlan& plan, const GridSignal& x) {
  return plan.apply_S(x);
}
inline VectorSignal apply_phi(const TransformPlan& plan, const VectorSignal& x) {
  return plan.apply_phi(x);
}
inline VectorSignal apply_psi(const TransformPlan& plan, const VectorSignal& x) {
  return plan.apply_psi(x);
}

/// Apply one operator; scalar operators act on each component separately.
VectorSignal apply(const TransformPlan& plan, Operator op, const VectorSignal& x);

/// Quadrature counterpart of apply(): C by the trapezoid rule and S by the
/// pairing scheme, evaluated at every grid node. O(n^2).
VectorSignal apply_direct(const OmegaParam& omega, Operator op, const VectorSignal& x,
                          const quadrature::PVConfig& cfg = {});

// sqrt(delta * sum |x_k|^2)
double l2_norm(const GridSignal& x);
// sqrt(delta * sum |x_k|^2 e^{-2 sigma |t_k|})
double weighted_norm(const GridSignal& x, const SigmaParam& sigma);
double l2_norm(const VectorSignal& x);
double weighted_norm(const VectorSignal& x, const SigmaParam& sigma);

enum class WeightDirection { kForward, kInverse };

/// Multiplies samples by e^{-sigma|t|} (forward) or e^{+sigma|t|} (inverse).
/// Throws kOverflow if the inverse weight leaves the double range.
GridSignal conjugate_weight(const GridSignal& x, const SigmaParam& sigma,
                            WeightDirection direction);

GridSignal subtract(const GridSignal& a, const GridSignal& b);
VectorSignal subtract(const VectorSignal& a, const VectorSignal& b);

struct BoundReport {
  double sigma = 0.0;
  double omega = 0.0;
  Operator op = Operator::kC;
  double empirical_ratio = 0.0;
  double paper_bound = 0.0;
  bool satisfied = false;
  int trials_run = 0;
  int trials_skipped = 0;  // zero-norm draws
  std::string derivation;
};

/// Theoretical operator-norm bound in L²_sigma:
///   C: 2/(1-a),  S: (pi+1)/(1-a)^2,
///   phi, psi: M/(1-a) with M = 2 + (pi+1)/(1-a)  (||C|| + ||S|| for the blocks).
double operator_bound(Operator op, double a);

/// Empirical lower estimate of the L²_sigma operator norm from `trials`
/// random growth-admitting signals (see signals::random_weighted_signal).
BoundReport weighted_bound_report(const TransformPlan& plan, const SigmaParam& sigma,
                                  Operator op, int trials, std::uint64_t seed);

/// ||Psi Phi x - x|| / ||x|| in L²_sigma + L²_sigma.
double roundtrip_error(const TransformPlan& plan, const VectorSignal& x,
                       const SigmaParam& sigma);

/// Same, with Phi applied after Psi.
double reverse_roundtrip_error(const TransformPlan& plan, const VectorSignal& x,
                               const SigmaParam& sigma);

}  // namespace akhiezer::transform
