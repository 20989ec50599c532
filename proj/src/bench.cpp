// Copyright The Akhiezer Transform Authors
// SPDX-License-Identifier: Apache-2.0

#include "akhiezer/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "akhiezer/error.hpp"
#include "akhiezer/quadrature.hpp"
#include "akhiezer/signals.hpp"
#include "akhiezer/transform.hpp"

namespace akhiezer::bench {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Nodes are processed in blocks so the deadline is checked regularly.
constexpr std::size_t kBlock = 64;

BenchRow run_size(const OmegaParam& omega, const BenchOptions& opts, std::size_t n) {
  BenchRow row;
  row.n = n;
  const GridDesc grid = GridDesc::from_range(opts.t_min, opts.t_max, n);
  const GridSignal x = signals::generate(grid, {.kind = signals::Kind::kGaussian});
  const std::vector<double> nodes = quadrature::grid_nodes(grid);

  auto start = Clock::now();
  const transform::TransformPlan plan(omega, grid);
  const GridSignal c_spec = plan.apply_C(x);
  const GridSignal s_spec = plan.apply_S(x);
  row.spectral_seconds = seconds_since(start);

  // Loose p.v. budget: the deviation column reports the accuracy instead.
  quadrature::PVConfig cfg;
  cfg.quad_tol = 0.5;
  start = Clock::now();
  row.status = "ok";
  for (std::size_t k0 = 0; k0 < n; k0 += kBlock) {
    const std::span<const double> block(nodes.data() + k0, std::min(kBlock, n - k0));
    const auto c = quadrature::convolve_C_direct(omega, x, block).values;
    const auto s = quadrature::convolve_S_pv(omega, x, block, cfg).values;
    for (std::size_t i = 0; i < block.size(); ++i) {
      row.max_deviation = std::max({row.max_deviation, std::abs(c[i] - c_spec[k0 + i]),
                                    std::abs(s[i] - s_spec[k0 + i])});
    }
    if (seconds_since(start) > opts.timeout_seconds && k0 + kBlock < n) {
      row.status = "timeout";
      break;
    }
  }
  row.direct_seconds = seconds_since(start);
  return row;
}

}  // namespace

std::vector<BenchRow> run(const BenchOptions& opts) {
  const OmegaParam omega(opts.omega);
  if (!(opts.t_max > opts.t_min)) {
    throw Error(ErrorCode::kInvalidArgument, "bench needs t_max > t_min");
  }
  std::vector<BenchRow> rows;
  for (std::size_t n : opts.sizes) {
    try {
      rows.push_back(run_size(omega, opts, n));
    } catch (const Error& e) {
      BenchRow row;
      row.n = n;
      row.status = e.what();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string to_csv(const std::vector<BenchRow>& rows) {
  std::string out = "n,direct_seconds,spectral_seconds,speedup,max_deviation,status\n";
  char buf[256];
  for (const BenchRow& r : rows) {
    const double speedup = r.spectral_seconds > 0.0 ? r.direct_seconds / r.spectral_seconds : 0.0;
    std::string status = r.status;
    std::replace(status.begin(), status.end(), ',', ';');
    std::replace(status.begin(), status.end(), '\n', ' ');
    std::snprintf(buf, sizeof buf, "%zu,%.6g,%.6g,%.6g,%.17g,", r.n, r.direct_seconds,
                  r.spectral_seconds, speedup, r.max_deviation);
    out += buf;
    out += status;
    out += '\n';
  }
  return out;
}

}  // namespace akhiezer::bench
