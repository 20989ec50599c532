// Copyright The Akhiezer Transform Authors
// SPDX-License-Identifier: Apache-2.0

#include "akhiezer/spectral.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <queue>
#include <string>

#include "akhiezer/error.hpp"
#include "summation.hpp"

namespace akhiezer::spectral {
namespace {

using kernels::kPi;
using GaussKronrod = boost::math::quadrature::gauss_kronrod<double, 15>;

constexpr cdouble kI{0.0, 1.0};

struct Interval {
  double a, b, value, error;
  bool operator<(const Interval& o) const { return error < o.error; }
};

struct Estimate {
  double value;
  double error;
};

Interval gk15(const auto& f, double a, double b) {
  double err = 0.0;
  const double v = GaussKronrod::integrate(f, a, b, 0, 0.0, &err);
  return {a, b, v, err};
}

// Globally adaptive Gauss-Kronrod over an initial partition: the interval
// with the largest error estimate is bisected until the summed estimate
// meets abs_tol or the interval budget runs out.
Estimate global_adaptive(const auto& f, std::span<const double> breaks, double abs_tol,
                         std::size_t max_intervals) {
  std::priority_queue<Interval> heap;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i + 1] > breaks[i])) continue;
    const Interval iv = gk15(f, breaks[i], breaks[i + 1]);
    total_err += iv.error;
    heap.push(iv);
  }
  while (total_err > abs_tol && heap.size() < max_intervals) {
    const Interval worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      heap.push(worst);
      break;
    }
    const Interval left = gk15(f, worst.a, mid);
    const Interval right = gk15(f, mid, worst.b);
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  detail::CompensatedSum<double> sum;
  double err = 0.0;
  std::vector<Interval> all;
  all.reserve(heap.size());
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(), [](const Interval& x, const Interval& y) { return x.a < y.a; });
  for (const Interval& iv : all) {
    sum.add(iv.value);
    err += iv.error;
  }
  return {sum.value(), err};
}

double scaled(const OmegaParam& omega, double lambda) {
  return kPi * lambda / (2.0 * omega.value());
}

}  // namespace

double c_hat(const OmegaParam& omega, double lambda) {
  const double e = std::exp(-std::abs(scaled(omega, lambda)));
  return 2.0 * e / (1.0 + e * e);
}

cdouble s_hat(const OmegaParam& omega, double lambda) {
  return kI * std::tanh(scaled(omega, lambda));
}

double verify_crucial_identity(const OmegaParam& omega, double lambda) {
  return std::norm(cdouble(c_hat(omega, lambda))) + std::norm(s_hat(omega, lambda));
}

MultiplierMatrix MultiplierMatrix::operator*(const MultiplierMatrix& rhs) const {
  MultiplierMatrix out;
  out.lambda = lambda;
  out.kind = kind;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.entries[i][j] = entries[i][0] * rhs.entries[0][j] +
                          entries[i][1] * rhs.entries[1][j];
    }
  }
  return out;
}

MultiplierMatrix MultiplierMatrix::adjoint() const {
  MultiplierMatrix out = *this;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.entries[i][j] = std::conj(entries[j][i]);
  }
  return out;
}

double MultiplierMatrix::identity_defect() const {
  double d = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      d = std::max(d, std::abs(entries[i][j] - cdouble(i == j ? 1.0 : 0.0)));
    }
  }
  return d;
}

double MultiplierMatrix::unitarity_defect() const {
  return (adjoint() * *this).identity_defect();
}

MultiplierMatrix phi_hat_matrix(const OmegaParam& omega, double lambda) {
  const cdouble c = c_hat(omega, lambda);
  const cdouble s = s_hat(omega, lambda);
  return MultiplierMatrix{{{{c, s}, {s, c}}}, lambda, MultiplierKind::kPhi};
}

MultiplierMatrix psi_hat_matrix(const OmegaParam& omega, double lambda) {
  const cdouble c = c_hat(omega, lambda);
  const cdouble s = s_hat(omega, lambda);
  return MultiplierMatrix{{{{c, -s}, {-s, c}}}, lambda, MultiplierKind::kPsi};
}

TruncatedTransform s_hat_truncated(const OmegaParam& omega, double lambda,
                                   double epsilon,
                                   const QuadratureOptions& opts) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must be positive");
  }
  if (!std::isfinite(lambda)) {
    throw Error(ErrorCode::kInvalidArgument, "lambda must be finite");
  }
  const double w = omega.value();
  const double cutoff = std::max(epsilon, std::log(2.0 / (kPi * opts.tol)) / w);
  // int_T^inf |S| <= (2/pi) e^{-wT} / (1 - e^{-2wT})
  const double tail = 2.0 / kPi * std::exp(-w * cutoff) / -std::expm1(-2.0 * w * cutoff);

  TruncatedTransform out{cdouble{}, 2.0 * tail, cutoff, 2.0 * tail};
  if (lambda == 0.0 || cutoff == epsilon) return out;

  auto integrand = [&](double t) {
    return kernels::eval_S(omega, t) * std::sin(lambda * t);
  };

  std::vector<double> breaks{epsilon};
  const double freq = std::abs(lambda);
  if (freq * (cutoff - epsilon) > opts.oscillation_limit) {
    // One piece per half-period of sin(lambda t).
    const double half = kPi / freq;
    double node = std::ceil(epsilon / half) * half;
    if (node <= epsilon) node += half;
    for (; node < cutoff; node += half) breaks.push_back(node);
  }
  breaks.push_back(cutoff);

  const Estimate est = global_adaptive(integrand, breaks, opts.tol, breaks.size() + 4000);
  const double quad_err = est.error;
  out.value = 2.0 * kI * est.value;
  out.error_estimate = 2.0 * (quad_err + tail);
  if (!(out.error_estimate <= opts.fail_threshold)) {
    throw QuadratureError("truncated S transform did not converge at lambda=" +
                              std::to_string(lambda),
                          out.error_estimate);
  }
  return out;
}

TruncationRemainder remainder_rho(const OmegaParam& omega, double lambda,
                                  double epsilon,
                                  const QuadratureOptions& opts) {
  const TruncatedTransform tr = s_hat_truncated(omega, lambda, epsilon, opts);
  return {lambda, epsilon, s_hat(omega, lambda) - tr.value};
}

Extrapolation extrapolate_s_hat(const OmegaParam& omega, double lambda,
                                double eps0, double stop, int max_levels,
                                const QuadratureOptions& opts) {
  if (eps0 <= 0.0) {
    eps0 = kPi / (4.0 * omega.value());
    if (lambda != 0.0) eps0 = std::min(eps0, 0.5 / std::abs(lambda));
  }
  // Row k of the Richardson table; only the previous row is kept.
  std::vector<double> prev, cur;
  Extrapolation out;
  double eps = eps0;
  double prev_diag = 0.0;
  for (int k = 0; k < max_levels; ++k, eps *= 0.5) {
    cur.assign(static_cast<std::size_t>(k) + 1, 0.0);
    cur[0] = s_hat_truncated(omega, lambda, eps, opts).value.imag();
    for (int j = 1; j <= k; ++j) {
      const double factor = std::ldexp(1.0, 2 * j - 1) - 1.0;
      cur[j] = cur[j - 1] + (cur[j - 1] - prev[j - 1]) / factor;
    }
    const double diag = cur[k];
    out.levels = k + 1;
    out.value = cdouble(0.0, diag);
    if (k > 0) {
      out.last_change = std::abs(diag - prev_diag);
      if (out.last_change < stop) {
        out.converged = true;
        break;
      }
    }
    prev_diag = diag;
    prev.swap(cur);
  }
  return out;
}

RemainderSup remainder_grid_sup(const OmegaParam& omega,
                                std::span<const double> lambdas,
                                std::span<const double> epsilons,
                                const QuadratureOptions& opts) {
  RemainderSup out;
  for (double lambda : lambdas) {
    for (double eps : epsilons) {
      const double r = std::abs(remainder_rho(omega, lambda, eps, opts).rho);
      ++out.evaluations;
      if (r > out.sup) {
        out.sup = r;
        out.lambda_at = lambda;
        out.epsilon_at = eps;
      }
    }
  }
  return out;
}

cdouble grid_fourier_transform(const GridSignal& x, double lambda) {
  const GridDesc& g = x.grid();
  detail::CompensatedSum<double> re, im;
  for (std::size_t k = 0; k < g.n; ++k) {
    const cdouble v = x[k] * std::polar(1.0, lambda * g.t(k));
    re.add(v.real());
    im.add(v.imag());
  }
  return g.delta * cdouble(re.value(), im.value());
}

}  // namespace akhiezer::spectral
