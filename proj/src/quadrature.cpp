// Copyright The Akhiezer Transform Authors
// SPDX-License-Identifier: Apache-2.0

#include "akhiezer/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <string>

#include "akhiezer/error.hpp"
#include "summation.hpp"

namespace akhiezer::quadrature {
namespace {

using kernels::kPi;
using Index = std::ptrdiff_t;

struct ComplexSum {
  detail::CompensatedSum<double> re, im;
  void add(cdouble v) {
    re.add(v.real());
    im.add(v.imag());
  }
  cdouble value() const { return {re.value(), im.value()}; }
};

double max_abs(const GridSignal& x) {
  double m = 0.0;
  for (const cdouble& v : x.samples()) m = std::max(m, std::abs(v));
  return m;
}

// int_0^{K h} kernel(u) [x(t-u) - x(t+u)] du with t = node j and pairing
// step h = stride*delta. `full` is the whole kernel for u > 0; `regular` its
// part without 1/(pi u) (used only when split is true).
template <class Full, class Regular>
cdouble pair_value(const GridSignal& x, Index j, Index stride, Index steps,
                   double h, const Full& full, const Regular& regular,
                   bool split) {
  if (steps < 1) return {};
  auto d = [&](Index k) { return x.at_offset(j - stride * k) - x.at_offset(j + stride * k); };
  const cdouble d1 = d(1);
  const cdouble d2 = d(2);
  // Local model x(t-u) - x(t+u) = -2 x' u - x''' u^3 / 3.
  const cdouble slope = (d2 - 8.0 * d1) / (12.0 * h);
  const cdouble third = (2.0 * d1 - d2) / (2.0 * h * h * h);
  auto model = [&](double u) { return -2.0 * slope * u - third * (u * u * u / 3.0); };
  const cdouble g0 = -2.0 * slope / kPi;

  const double mid = 0.5 * h;
  cdouble near;
  if (split) {
    near = (-2.0 * slope * h - third * (h * h * h / 9.0)) / kPi +
           h / 6.0 * (4.0 * regular(mid) * model(mid) + regular(h) * d1);
  } else {
    near = h / 6.0 * (g0 + 4.0 * full(mid) * model(mid) + full(h) * d1);
  }
  if (steps < 2) return near;

  ComplexSum far;
  cdouble g2;
  for (Index k = 1; k <= steps; ++k) {
    const cdouble gk = full(static_cast<double>(k) * h) * d(k);
    if (k == 2) g2 = gk;
    far.add((k == 1 || k == steps) ? 0.5 * gk : gk);
  }
  // Euler-Maclaurin correction at the lower end, g'(h) ~ (g2 - g0)/(2h).
  const cdouble correction = h * h / 12.0 * (g2 - g0) / (2.0 * h);
  return near + h * far.value() + correction;
}

template <class Full, class Regular>
PvResult pairing_scheme(const GridSignal& x, std::span<const double> eval_at,
                        const PVConfig& cfg, double reach, const Full& full,
                        const Regular& regular, bool split) {
  cfg.validate();
  const GridDesc& g = x.grid();
  const Index n = static_cast<Index>(g.n);
  const double scale = std::max(1.0, max_abs(x));
  const double limit = std::min(cfg.pairing_halfwidth, reach);

  PvResult out;
  out.values.reserve(eval_at.size());
  out.error_estimates.reserve(eval_at.size());
  for (double t : eval_at) {
    const Index j = static_cast<Index>(g.node_index(t));
    const Index extent = std::max(j, n - 1 - j);
    auto steps_for = [&](Index stride) {
      const double h = g.delta * static_cast<double>(stride);
      Index k = extent / stride;
      if (std::isfinite(limit)) {
        k = std::min<Index>(k, static_cast<Index>(std::ceil(limit / h)));
      }
      return k;
    };
    const cdouble fine = pair_value(x, j, 1, steps_for(1), g.delta, full, regular, split);
    const cdouble coarse =
        pair_value(x, j, 2, steps_for(2), 2.0 * g.delta, full, regular, split);
    const double estimate = std::abs(fine - coarse);
    if (!std::isfinite(fine.real()) || !std::isfinite(fine.imag()) ||
        estimate > cfg.quad_tol * scale) {
      throw QuadratureError("principal value quadrature did not converge at t=" +
                                std::to_string(t),
                            estimate);
    }
    out.values.push_back(fine);
    out.error_estimates.push_back(estimate);
  }
  return out;
}

// 4-point Lagrange interpolation of x at fractional index pos, zero off grid.
cdouble interpolate(const GridSignal& x, double pos) {
  const double base = std::floor(pos);
  const double f = pos - base;
  const Index i = static_cast<Index>(base);
  const double w0 = -f * (f - 1.0) * (f - 2.0) / 6.0;
  const double w1 = (f + 1.0) * (f - 1.0) * (f - 2.0) / 2.0;
  const double w2 = -(f + 1.0) * f * (f - 2.0) / 2.0;
  const double w3 = (f + 1.0) * f * (f - 1.0) / 6.0;
  return w0 * x.at_offset(i - 1) + w1 * x.at_offset(i) + w2 * x.at_offset(i + 1) +
         w3 * x.at_offset(i + 2);
}

}  // namespace

void PVConfig::validate() const {
  if (!(pairing_halfwidth > 0.0) || !(tail_cut > 0.0) || !(quad_tol > 0.0) ||
      !(quad_tol < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "PVConfig fields must be positive and quad_tol < 1");
  }
}

std::vector<double> grid_nodes(const GridDesc& grid) {
  std::vector<double> t(grid.n);
  for (std::size_t k = 0; k < grid.n; ++k) t[k] = grid.t(k);
  return t;
}

DirectResult convolve_C_direct(const OmegaParam& omega, const GridSignal& x,
                               std::span<const double> eval_at) {
  const GridDesc& g = x.grid();
  DirectResult out;
  out.coarse_grid = g.delta * omega.value() > 1.0;
  out.values.reserve(eval_at.size());
  for (double t : eval_at) {
    ComplexSum sum;
    for (std::size_t k = 0; k < g.n; ++k) {
      const double w = (k == 0 || k + 1 == g.n) ? 0.5 : 1.0;
      sum.add(w * kernels::eval_C(omega, t - g.t(k)) * x[k]);
    }
    out.values.push_back(g.delta * sum.value());
  }
  return out;
}

PvResult convolve_S_pv(const OmegaParam& omega, const GridSignal& x,
                       std::span<const double> eval_at, const PVConfig& cfg,
                       KernelForm form) {
  const double reach = cfg.tail_cut / omega.value();
  if (form == KernelForm::kSplit) {
    auto regular = [&](double u) { return kernels::eval_r(omega, u); };
    auto full = [&](double u) { return 1.0 / (kPi * u) + kernels::eval_r(omega, u); };
    return pairing_scheme(x, eval_at, cfg, reach, full, regular, true);
  }
  auto full = [&](double u) { return kernels::eval_S(omega, u); };
  auto unused = [](double) { return 0.0; };
  return pairing_scheme(x, eval_at, cfg, reach, full, unused, false);
}

PvResult hilbert_pv(const GridSignal& x, std::span<const double> eval_at,
                    const PVConfig& cfg) {
  auto full = [](double u) { return 1.0 / (kPi * u); };
  auto regular = [](double) { return 0.0; };
  return pairing_scheme(x, eval_at, cfg, std::numeric_limits<double>::infinity(),
                        full, regular, true);
}

EpsilonSweep epsilon_sweep_pv(const OmegaParam& omega, const GridSignal& x,
                              double t, std::span<const double> epsilons) {
  const GridDesc& g = x.grid();
  const Index j = static_cast<Index>(g.node_index(t));
  for (std::size_t k = 0; k < epsilons.size(); ++k) {
    if (!(epsilons[k] > 0.0) || (k > 0 && !(epsilons[k] < epsilons[k - 1]))) {
      throw Error(ErrorCode::kInvalidArgument,
                  "epsilons must be positive and strictly decreasing");
    }
  }
  const Index n = static_cast<Index>(g.n);
  const double reach = std::min(static_cast<double>(std::max(j, n - 1 - j) + 2) * g.delta,
                                40.0 / omega.value());
  const double jd = static_cast<double>(j);

  auto integrand = [&](double u) {
    const double off = u / g.delta;
    return kernels::eval_S(omega, u) * (interpolate(x, jd - off) - interpolate(x, jd + off));
  };
  using GL5 = boost::math::quadrature::gauss<double, 5>;
  auto cell = [&](double a, double b) {
    const double re = GL5::integrate([&](double u) { return integrand(u).real(); }, a, b);
    const double im = GL5::integrate([&](double u) { return integrand(u).imag(); }, a, b);
    return cdouble(re, im);
  };

  EpsilonSweep out;
  for (double eps : epsilons) {
    ComplexSum sum;
    if (eps < reach) {
      double a = eps;
      double b = std::ceil(eps / g.delta) * g.delta;
      if (b <= a) b += g.delta;
      while (a < reach) {
        const double end = std::min(b, reach);
        sum.add(cell(a, end));
        a = end;
        b += g.delta;
      }
    }
    out.values.push_back(sum.value());
  }
  for (std::size_t k = 1; k < out.values.size(); ++k) {
    out.differences.push_back(std::abs(out.values[k] - out.values[k - 1]));
  }
  out.converged = out.differences.size() >= 2;
  for (std::size_t k = 1; k < out.differences.size(); ++k) {
    const double dk = out.differences[k];
    if (!(dk < 1e-12 || dk <= 0.75 * out.differences[k - 1])) out.converged = false;
  }

  // Neville's scheme evaluated at eps = 0.
  std::vector<cdouble> p(out.values);
  const std::size_t m = p.size();
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = 0; i + level < m; ++i) {
      const double ei = epsilons[i];
      const double ek = epsilons[i + level];
      p[i] = (ei * p[i + 1] - ek * p[i]) / (ei - ek);
    }
  }
  out.limit = m > 0 ? p[0] : cdouble{};
  return out;
}

}  // namespace akhiezer::quadrature
