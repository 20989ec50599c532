// Copyright The Akhiezer Transform Authors
// SPDX-License-Identifier: Apache-2.0

#include "akhiezer/transform.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>
#include <numbers>
#include <random>

#include "akhiezer/error.hpp"
#include "akhiezer/signals.hpp"
#include "akhiezer/spectral.hpp"
#include "summation.hpp"

namespace akhiezer::transform {
namespace {

constexpr std::size_t kMaxPadded = std::size_t{1} << 30;

// The FFTW planner is not thread safe; execution on distinct arrays is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwBuffer {
  explicit FftwBuffer(std::size_t m)
      : data(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * m))) {
    if (data == nullptr) throw Error(ErrorCode::kOverflow, "FFT buffer allocation failed");
  }
  ~FftwBuffer() { fftw_free(data); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;

  cdouble* complex() { return reinterpret_cast<cdouble*>(data); }

  fftw_complex* data;
};

}  // namespace

struct TransformPlan::FftHandles {
  explicit FftHandles(std::size_t m) : size(m) {
    FftwBuffer scratch(m);
    std::lock_guard lock(planner_mutex());
    const int len = static_cast<int>(m);
    // +i exponent for the analysis transform, -i for synthesis.
    analysis = fftw_plan_dft_1d(len, scratch.data, scratch.data, FFTW_BACKWARD, FFTW_ESTIMATE);
    synthesis = fftw_plan_dft_1d(len, scratch.data, scratch.data, FFTW_FORWARD, FFTW_ESTIMATE);
    if (analysis == nullptr || synthesis == nullptr) {
      throw Error(ErrorCode::kInternal, "FFTW planning failed");
    }
  }
  ~FftHandles() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(analysis);
    fftw_destroy_plan(synthesis);
  }
  FftHandles(const FftHandles&) = delete;
  FftHandles& operator=(const FftHandles&) = delete;

  std::size_t size;
  fftw_plan analysis = nullptr;
  fftw_plan synthesis = nullptr;
};

const char* to_string(Operator op) {
  switch (op) {
    case Operator::kC: return "C";
    case Operator::kS: return "S";
    case Operator::kPhi: return "phi";
    case Operator::kPsi: return "psi";
  }
  return "?";
}

TransformPlan::TransformPlan(const OmegaParam& omega, const GridDesc& grid)
    : omega_(omega), grid_(grid) {
  grid_.validate();
  if (grid_.n > kMaxPadded / 2 ||
      !std::isfinite(static_cast<double>(grid_.n) * grid_.delta * omega.value())) {
    throw Error(ErrorCode::kOverflow, "grid too large for a padded FFT plan");
  }
  m_ = std::bit_ceil(2 * grid_.n);
  c_table_.resize(m_);
  s_table_.resize(m_);
  for (std::size_t j = 0; j < m_; ++j) {
    const double lambda = frequency(j);
    c_table_[j] = spectral::c_hat(omega_, lambda);
    s_table_[j] = spectral::s_hat(omega_, lambda);
  }
  fft_ = std::make_shared<const FftHandles>(m_);
}

double TransformPlan::frequency(std::size_t j) const {
  const double base = 2.0 * std::numbers::pi / (static_cast<double>(m_) * grid_.delta);
  const auto jj = static_cast<double>(j);
  return j <= m_ / 2 ? base * jj : base * (jj - static_cast<double>(m_));
}

double TransformPlan::table_unitarity_defect() const {
  double d = 0.0;
  for (std::size_t j = 0; j < m_; ++j) {
    d = std::max(d, std::abs(c_table_[j] * c_table_[j] + std::norm(s_table_[j]) - 1.0));
  }
  return d;
}

TransformPlan TransformPlan::with_scaled_s_table(double factor) const {
  TransformPlan copy = *this;
  for (cdouble& s : copy.s_table_) s *= factor;
  return copy;
}

std::vector<cdouble> TransformPlan::forward(const GridSignal& x) const {
  require_same_grid(grid_, x.grid());
  FftwBuffer buf(m_);
  cdouble* data = buf.complex();
  std::copy(x.samples().begin(), x.samples().end(), data);
  std::fill(data + grid_.n, data + m_, cdouble{});
  fftw_execute_dft(fft_->analysis, buf.data, buf.data);
  return std::vector<cdouble>(data, data + m_);
}

GridSignal TransformPlan::inverse(std::vector<cdouble> spectrum) const {
  FftwBuffer buf(m_);
  cdouble* data = buf.complex();
  std::copy(spectrum.begin(), spectrum.end(), data);
  fftw_execute_dft(fft_->synthesis, buf.data, buf.data);
  const double scale = 1.0 / static_cast<double>(m_);
  std::vector<cdouble> out(grid_.n);
  for (std::size_t k = 0; k < grid_.n; ++k) out[k] = data[k] * scale;
  return GridSignal(grid_, std::move(out));
}

GridSignal TransformPlan::apply_C(const GridSignal& x) const {
  auto spec = forward(x);
  for (std::size_t j = 0; j < m_; ++j) spec[j] *= c_table_[j];
  return inverse(std::move(spec));
}

GridSignal TransformPlan::apply_S(const GridSignal& x) const {
  auto spec = forward(x);
  for (std::size_t j = 0; j < m_; ++j) spec[j] *= s_table_[j];
  return inverse(std::move(spec));
}

VectorSignal TransformPlan::apply_block(const VectorSignal& x, double s_sign) const {
  const auto a = forward(x.x1);
  const auto b = forward(x.x2);
  std::vector<cdouble> y1(m_), y2(m_);
  for (std::size_t j = 0; j < m_; ++j) {
    const cdouble c = c_table_[j];
    const cdouble s = s_sign * s_table_[j];
    y1[j] = c * a[j] + s * b[j];
    y2[j] = s * a[j] + c * b[j];
  }
  return VectorSignal(inverse(std::move(y1)), inverse(std::move(y2)));
}

VectorSignal TransformPlan::apply_phi(const VectorSignal& x) const {
  return apply_block(x, 1.0);
}

VectorSignal TransformPlan::apply_psi(const VectorSignal& x) const {
  return apply_block(x, -1.0);
}

VectorSignal apply(const TransformPlan& plan, Operator op, const VectorSignal& x) {
  switch (op) {
    case Operator::kC:
      return VectorSignal(plan.apply_C(x.x1), plan.apply_C(x.x2));
    case Operator::kS:
      return VectorSignal(plan.apply_S(x.x1), plan.apply_S(x.x2));
    case Operator::kPhi:
      return plan.apply_phi(x);
    case Operator::kPsi:
      return plan.apply_psi(x);
  }
  throw Error(ErrorCode::kInternal, "unhandled operator");
}

VectorSignal apply_direct(const OmegaParam& omega, Operator op, const VectorSignal& x,
                          const quadrature::PVConfig& cfg) {
  const std::vector<double> nodes = quadrature::grid_nodes(x.grid());
  auto C = [&](const GridSignal& f) {
    return GridSignal(f.grid(), quadrature::convolve_C_direct(omega, f, nodes).values);
  };
  auto S = [&](const GridSignal& f) {
    return GridSignal(f.grid(), quadrature::convolve_S_pv(omega, f, nodes, cfg).values);
  };
  auto combine = [](const GridSignal& a, const GridSignal& b, double sign) {
    std::vector<cdouble> v(a.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = a[k] + sign * b[k];
    return GridSignal(a.grid(), std::move(v));
  };
  switch (op) {
    case Operator::kC:
      return VectorSignal(C(x.x1), C(x.x2));
    case Operator::kS:
      return VectorSignal(S(x.x1), S(x.x2));
    case Operator::kPhi:
    case Operator::kPsi: {
      const double sign = op == Operator::kPhi ? 1.0 : -1.0;
      const GridSignal c1 = C(x.x1), c2 = C(x.x2), s1 = S(x.x1), s2 = S(x.x2);
      return VectorSignal(combine(c1, s2, sign), combine(c2, s1, sign));
    }
  }
  throw Error(ErrorCode::kInternal, "unhandled operator");
}

double l2_norm(const GridSignal& x) {
  detail::CompensatedSum<double> sum;
  for (const cdouble& v : x.samples()) sum.add(std::norm(v));
  return std::sqrt(x.grid().delta * sum.value());
}

double weighted_norm(const GridSignal& x, const SigmaParam& sigma) {
  const GridDesc& g = x.grid();
  detail::CompensatedSum<double> sum;
  for (std::size_t k = 0; k < g.n; ++k) {
    sum.add(std::norm(x[k]) * std::exp(-2.0 * sigma.value() * std::abs(g.t(k))));
  }
  return std::sqrt(g.delta * sum.value());
}

double l2_norm(const VectorSignal& x) {
  return std::hypot(l2_norm(x.x1), l2_norm(x.x2));
}

double weighted_norm(const VectorSignal& x, const SigmaParam& sigma) {
  return std::hypot(weighted_norm(x.x1, sigma), weighted_norm(x.x2, sigma));
}

GridSignal conjugate_weight(const GridSignal& x, const SigmaParam& sigma,
                            WeightDirection direction) {
  const GridDesc& g = x.grid();
  const double sign = direction == WeightDirection::kForward ? -1.0 : 1.0;
  std::vector<cdouble> out(g.n);
  for (std::size_t k = 0; k < g.n; ++k) {
    const double w = std::exp(sign * sigma.value() * std::abs(g.t(k)));
    out[k] = x[k] * w;
    if (!std::isfinite(w) || !std::isfinite(out[k].real()) || !std::isfinite(out[k].imag())) {
      throw Error(ErrorCode::kOverflow, "weighting overflows at t=" + std::to_string(g.t(k)));
    }
  }
  return GridSignal(g, std::move(out));
}

GridSignal subtract(const GridSignal& a, const GridSignal& b) {
  require_same_grid(a.grid(), b.grid());
  std::vector<cdouble> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
  return GridSignal(a.grid(), std::move(out));
}

VectorSignal subtract(const VectorSignal& a, const VectorSignal& b) {
  return VectorSignal(subtract(a.x1, b.x1), subtract(a.x2, b.x2));
}

double operator_bound(Operator op, double a) {
  if (!(a >= 0.0 && a < 1.0)) {
    throw Error(ErrorCode::kDomain, "sigma/omega must lie in [0, 1)");
  }
  const double mc = 2.0;
  const double ms = std::numbers::pi + 1.0;
  switch (op) {
    case Operator::kC: return mc / (1.0 - a);
    case Operator::kS: return ms / ((1.0 - a) * (1.0 - a));
    case Operator::kPhi:
    case Operator::kPsi: return (mc + ms / (1.0 - a)) / (1.0 - a);
  }
  throw Error(ErrorCode::kInternal, "unhandled operator");
}

BoundReport weighted_bound_report(const TransformPlan& plan, const SigmaParam& sigma,
                                  Operator op, int trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
  const double a = sigma.ratio(plan.omega());

  BoundReport report;
  report.sigma = sigma.value();
  report.omega = plan.omega().value();
  report.op = op;
  report.paper_bound = operator_bound(op, a);
  switch (op) {
    case Operator::kC: report.derivation = "M_c/(1-a), M_c = 2"; break;
    case Operator::kS: report.derivation = "M_s/(1-a)^2, M_s = pi+1"; break;
    default:
      report.derivation =
          "M/(1-a), M = M_c + M_s/(1-a) from ||[[C,+-S],[+-S,C]]|| <= ||C|| + ||S||";
  }

  std::mt19937_64 rng(seed);
  const bool vector_op = op == Operator::kPhi || op == Operator::kPsi;
  for (int i = 0; i < trials; ++i) {
    GridSignal f1 = signals::random_weighted_signal(plan.grid(), sigma.value(), rng);
    GridSignal f2 = vector_op ? signals::random_weighted_signal(plan.grid(), sigma.value(), rng)
                              : GridSignal(plan.grid());
    const VectorSignal f(std::move(f1), std::move(f2));
    const double denom = weighted_norm(f, sigma);
    if (!(denom > 0.0)) {
      ++report.trials_skipped;
      continue;
    }
    const double ratio = weighted_norm(apply(plan, op, f), sigma) / denom;
    report.empirical_ratio = std::max(report.empirical_ratio, ratio);
    ++report.trials_run;
  }
  report.satisfied = report.trials_run > 0 && report.empirical_ratio <= report.paper_bound;
  return report;
}

namespace {

double relative_defect(const VectorSignal& out, const VectorSignal& x,
                       const SigmaParam& sigma) {
  const double denom = weighted_norm(x, sigma);
  if (!(denom > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "round trip of a zero-norm signal");
  }
  return weighted_norm(subtract(out, x), sigma) / denom;
}

}  // namespace

double roundtrip_error(const TransformPlan& plan, const VectorSignal& x,
                       const SigmaParam& sigma) {
  sigma.ratio(plan.omega());
  return relative_defect(plan.apply_psi(plan.apply_phi(x)), x, sigma);
}

double reverse_roundtrip_error(const TransformPlan& plan, const VectorSignal& x,
                               const SigmaParam& sigma) {
  sigma.ratio(plan.omega());
  return relative_defect(plan.apply_phi(plan.apply_psi(x)), x, sigma);
}

}  // namespace akhiezer::transform
