// Copyright The Akhiezer Transform Authors
// SPDX-License-Identifier: Apache-2.0

#include "akhiezer/kernels.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "akhiezer/error.hpp"

namespace akhiezer {

OmegaParam::OmegaParam(double omega) : omega_(omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw Error(ErrorCode::kInvalidArgument,
                "omega must be a finite positive number, got " +
                    std::to_string(omega));
  }
}

SigmaParam::SigmaParam(double sigma) : sigma_(sigma) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw Error(ErrorCode::kInvalidArgument,
                "sigma must be finite and non-negative, got " +
                    std::to_string(sigma));
  }
}

double SigmaParam::ratio(const OmegaParam& omega) const {
  const double a = sigma_ / omega.value();
  if (!(a < 1.0)) {
    throw Error(ErrorCode::kDomain, "sigma must be strictly below omega (sigma=" +
                                        std::to_string(sigma_) + ", omega=" +
                                        std::to_string(omega.value()) + ")");
  }
  return a;
}

namespace kernels {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// sech(x) through e^{-|x|}; flushes to zero past the underflow argument.
double sech(double x) {
  const double e = std::exp(-std::abs(x));
  return 2.0 * e / (1.0 + e * e);
}

// 1/sinh(x) for x != 0.
double csch(double x) {
  const double ax = std::abs(x);
  double v;
  if (ax < 1.0) {
    v = 1.0 / std::sinh(ax);
  } else {
    v = 2.0 * std::exp(-ax) / -std::expm1(-2.0 * ax);
  }
  return std::copysign(v, x);
}

void require_ratio(double a, const char* what) {
  if (!(a >= 0.0 && a < 1.0)) {
    throw Error(ErrorCode::kDomain, std::string(what) +
                                        ": ratio a must satisfy 0 <= a < 1, got " +
                                        std::to_string(a));
  }
}

}  // namespace

double eval_C(const OmegaParam& omega, double xi) {
  const double w = omega.value();
  return w / kPi * sech(w * xi);
}

double eval_S(const OmegaParam& omega, double xi) {
  if (xi == 0.0) {
    throw Error(ErrorCode::kDomain, "S kernel is singular at xi = 0");
  }
  const double w = omega.value();
  return w / kPi * csch(w * xi);
}

double eval_r(const OmegaParam& omega, double xi) {
  const double w = omega.value();
  const double x = w * xi;
  if (std::abs(x) < kSeriesThreshold) {
    const double x2 = x * x;
    return w / kPi * x * (-1.0 / 6.0 + 7.0 * x2 / 360.0);
  }
  return eval_S(omega, xi) - 1.0 / (kPi * xi);
}

CEnvelope check_C_envelope(const OmegaParam& omega, double xi) {
  const double w = omega.value();
  const double e = std::exp(-w * std::abs(xi));
  CEnvelope env{};
  env.lower = w / kPi * e;
  env.upper = 2.0 * w / kPi * e;
  env.value = eval_C(omega, xi);
  // value/upper = 1/(1 + e^{-2w|xi|}) rounds to 1 once w|xi| > 18.4, so the
  // strict upper inequality is only testable up to rounding.
  env.holds = env.lower <= env.value && env.value <= env.upper;
  return env;
}

SEnvelope check_S_envelope(const OmegaParam& omega, double xi) {
  if (xi == 0.0) {
    throw Error(ErrorCode::kDomain, "S envelope undefined at xi = 0");
  }
  const double w = omega.value();
  const double x = w * std::abs(xi);
  SEnvelope env{};
  env.bound = 2.0 * w / kPi * std::exp(-x) / -std::expm1(-2.0 * x);
  env.value = std::abs(eval_S(omega, xi));
  env.rel_slack = env.bound > 0.0 ? (env.bound - env.value) / env.bound : 0.0;
  env.holds = env.value <= env.bound * (1.0 + 8.0 * kEps);
  return env;
}

double eval_kc_envelope(const OmegaParam& omega, const SigmaParam& sigma,
                        double xi) {
  sigma.ratio(omega);
  const double w = omega.value();
  const double ax = std::abs(xi);
  const double e = std::exp(-2.0 * w * ax);
  return w / kPi * 2.0 * std::exp((sigma.value() - w) * ax) / (1.0 + e);
}

double eval_ks_envelope(const OmegaParam& omega, const SigmaParam& sigma,
                        double xi) {
  sigma.ratio(omega);
  const double w = omega.value();
  const double s = sigma.value();
  const double ax = std::abs(xi);
  if (w * ax < kSeriesThreshold) {
    // x/sinh(x) = 1 - x^2/6 + O(x^4)
    const double x = w * ax;
    return s / kPi * std::exp(s * ax) * (1.0 - x * x / 6.0);
  }
  return w / kPi * s * ax * 2.0 * std::exp((s - w) * ax) /
         -std::expm1(-2.0 * w * ax);
}

double closed_form_cosh_integral(double a) {
  require_ratio(a, "closed_form_cosh_integral");
  return kPi / (2.0 * std::cos(kPi * a / 2.0));
}

double closed_form_sinh_integral(double a) {
  require_ratio(a, "closed_form_sinh_integral");
  const double s = std::sin(kPi * (1.0 - a) / 2.0);
  return kPi * kPi / (4.0 * s * s);
}

double kc_l1_bound(double a) {
  require_ratio(a, "kc_l1_bound");
  return 2.0 / (1.0 - a);
}

double ks_l1_bound(double a) {
  require_ratio(a, "ks_l1_bound");
  return kPi / ((1.0 - a) * (1.0 - a));
}

}  // namespace kernels
}  // namespace akhiezer
