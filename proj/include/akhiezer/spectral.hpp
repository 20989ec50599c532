// Copyright The Akhiezer Transform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <span>
#include <vector>

#include "akhiezer/grid.hpp"
#include "akhiezer/kernels.hpp"

namespace akhiezer::spectral {

// Fourier convention throughout: f^(lambda) = int f(t) e^{i lambda t} dt,
// inverse carries 1/(2 pi).

/// Multiplier of the C kernel: sech(pi lambda / (2 omega)).
double c_hat(const OmegaParam& omega, double lambda);

/// Multiplier of the S kernel: i tanh(pi lambda / (2 omega)).
cdouble s_hat(const OmegaParam& omega, double lambda);

/// |c^|^2 + |s^|^2, identically 1.
double verify_crucial_identity(const OmegaParam& omega, double lambda);

enum class MultiplierKind { kPhi, kPsi };

struct MultiplierMatrix {
  std::array<std::array<cdouble, 2>, 2> entries{};
  double lambda = 0.0;
  MultiplierKind kind = MultiplierKind::kPhi;

  MultiplierMatrix operator*(const MultiplierMatrix& rhs) const;
  MultiplierMatrix adjoint() const;

  /// max |(M^H M - I)_ij|
  double unitarity_defect() const;
  /// max |M_ij - I_ij|
  double identity_defect() const;
};

/// [[c, s], [s, c]] at lambda.
MultiplierMatrix phi_hat_matrix(const OmegaParam& omega, double lambda);
/// [[c, -s], [-s, c]] at lambda.
MultiplierMatrix psi_hat_matrix(const OmegaParam& omega, double lambda);

struct QuadratureOptions {
  double tol = 1e-13;              // truncation tolerance and quadrature target
  double fail_threshold = 1e-8;    // estimate above this raises QuadratureError
  double oscillation_limit = 50.0; // |lambda|*(T - eps) beyond which we split
};

struct TruncatedTransform {
  cdouble value;          // purely imaginary
  double error_estimate;  // quadrature estimate + analytic tail bound
  double cutoff;          // finite upper limit T actually used
  double tail_bound;
};

/// int_{|t|>=eps} S(t) e^{i lambda t} dt = 2i int_eps^inf S(t) sin(lambda t) dt,
/// integrated to T = ln(2/(pi tol))/omega with the remainder bounded through
/// the exponential envelope of S.
TruncatedTransform s_hat_truncated(const OmegaParam& omega, double lambda,
                                   double epsilon,
                                   const QuadratureOptions& opts = {});

struct TruncationRemainder {
  double lambda;
  double epsilon;
  cdouble rho;  // s_hat - s_hat_truncated
};

TruncationRemainder remainder_rho(const OmegaParam& omega, double lambda,
                                  double epsilon,
                                  const QuadratureOptions& opts = {});

struct Extrapolation {
  cdouble value;
  int levels = 0;
  double last_change = 0.0;
  bool converged = false;
};

/// Richardson extrapolation of s_hat_truncated along eps_k = eps0 2^{-k}.
/// The remainder is an odd analytic function of eps, so the table removes
/// eps, eps^3, eps^5, ... in turn. Stops once successive diagonal entries
/// differ by less than `stop`. eps0 <= 0 picks min(pi/(4 omega), 0.5/|lambda|).
Extrapolation extrapolate_s_hat(const OmegaParam& omega, double lambda,
                                double eps0 = 0.0, double stop = 1e-8,
                                int max_levels = 14,
                                const QuadratureOptions& opts = {});

struct RemainderSup {
  double sup = 0.0;
  double lambda_at = 0.0;
  double epsilon_at = 0.0;
  std::size_t evaluations = 0;
};

/// sup |rho| over the product grid lambdas x epsilons.
RemainderSup remainder_grid_sup(const OmegaParam& omega,
                                std::span<const double> lambdas,
                                std::span<const double> epsilons,
                                const QuadratureOptions& opts = {});

/// Riemann-sum Fourier transform delta * sum_k x_k e^{i lambda t_k}.
cdouble grid_fourier_transform(const GridSignal& x, double lambda);

}  // namespace akhiezer::spectral
