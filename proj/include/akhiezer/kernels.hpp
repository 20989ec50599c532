// Copyright The Akhiezer Transform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <numbers>

namespace akhiezer {

/// Transform scale parameter, omega > 0.
class OmegaParam {
 public:
  explicit OmegaParam(double omega);
  double value() const noexcept { return omega_; }

 private:
  double omega_;
};

/// Weight exponent of L²_σ, sigma >= 0. Pairing with an omega additionally
/// requires sigma < omega; see ratio().
class SigmaParam {
 public:
  explicit SigmaParam(double sigma);
  double value() const noexcept { return sigma_; }

  /// a = sigma/omega. Throws kDomain unless a < 1.
  double ratio(const OmegaParam& omega) const;

 private:
  double sigma_;
};

namespace kernels {

inline constexpr double kPi = std::numbers::pi;

/// Effective support of the kernels in double precision: beyond |omega*xi|
/// of about 745 exp(-|omega*xi|) underflows and both kernels evaluate to 0.
inline constexpr double kUnderflowArgument = 745.0;

/// |omega*xi| below which eval_r switches to its Taylor series.
inline constexpr double kSeriesThreshold = 1e-3;

// C(xi) = (omega/pi) sech(omega xi)
double eval_C(const OmegaParam& omega, double xi);

// S(xi) = (omega/pi) / sinh(omega xi). Throws kDomain at xi == 0.
double eval_S(const OmegaParam& omega, double xi);

/// Regular part of S: r(xi) = S(xi) - 1/(pi xi), continuously extended by
/// r(0) = 0. Odd and bounded by omega^2 |xi|/(6 pi) near the origin.
double eval_r(const OmegaParam& omega, double xi);

struct CEnvelope {
  double lower;
  double upper;
  double value;
  bool holds;  // lower <= value <= upper (strict upper up to rounding)
};

struct SEnvelope {
  double bound;
  double value;       // |S(xi)|
  double rel_slack;   // (bound - value) / bound
  bool holds;         // value <= bound within a few ulp
};

CEnvelope check_C_envelope(const OmegaParam& omega, double xi);

/// The majorant (2 omega/pi) e^{-omega|xi|}/(1 - e^{-2 omega|xi|}) coincides
/// with |S(xi)| as a real number, so `holds` is the non-strict comparison up
/// to rounding and rel_slack is expected to be O(1e-16).
SEnvelope check_S_envelope(const OmegaParam& omega, double xi);

/// (omega/pi) e^{sigma|xi|} / cosh(omega xi), the majorant of the weighted
/// C kernel. Requires sigma < omega.
double eval_kc_envelope(const OmegaParam& omega, const SigmaParam& sigma,
                        double xi);

/// (omega/pi) sigma|xi| e^{sigma|xi|} / sinh(omega|xi|), the majorant of the
/// weighted S kernel remainder; equals sigma/pi at xi = 0.
double eval_ks_envelope(const OmegaParam& omega, const SigmaParam& sigma,
                        double xi);

/// Exact value of int_0^inf cosh(a x)/cosh(x) dx = pi / (2 cos(pi a/2)),
/// 0 <= a < 1.
double closed_form_cosh_integral(double a);

/// Exact value of int_0^inf x cosh(a x)/sinh(x) dx
///   = pi^2 / (4 sin^2(pi (1-a)/2)),  0 <= a < 1.
double closed_form_sinh_integral(double a);

/// Upper bounds on the L¹ norms of the weighted envelope kernels:
/// ||k^c|| < 2/(1-a), ||k^s|| < pi/(1-a)^2.
double kc_l1_bound(double a);
double ks_l1_bound(double a);

}  // namespace kernels
}  // namespace akhiezer
