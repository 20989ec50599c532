// Copyright The Akhiezer Transform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "akhiezer/grid.hpp"

namespace akhiezer::bench {

struct BenchOptions {
  double omega = 1.0;
  double t_min = -8.0;
  double t_max = 8.0;
  std::vector<std::size_t> sizes = {256, 1024, 4096};
  /// Budget for the direct path of one size; exceeding it stops that size.
  double timeout_seconds = 120.0;
};

struct BenchRow {
  std::size_t n = 0;
  double direct_seconds = 0.0;
  double spectral_seconds = 0.0;
  double max_deviation = 0.0;  // over C and S, every node the direct path reached
  std::string status;          // "ok", "timeout" or an error message
};

/// Times the direct (trapezoid C plus pairing p.v. S, O(n^2)) and spectral
/// (O(n log n)) paths on a gaussian for each size. Problems at one size are
/// recorded in its row and never abort the run.
std::vector<BenchRow> run(const BenchOptions& opts);

/// n,direct_seconds,spectral_seconds,speedup,max_deviation,status
std::string to_csv(const std::vector<BenchRow>& rows);

}  // namespace akhiezer::bench
