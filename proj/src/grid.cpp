// Copyright The Akhiezer Transform Authors
// SPDX-License-Identifier: Apache-2.0

#include "akhiezer/grid.hpp"

#include <cmath>
#include <string>

#include "akhiezer/error.hpp"

namespace akhiezer {

void GridDesc::validate() const {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument, "grid needs at least 2 points");
  }
  if (!(delta > 0.0) || !std::isfinite(delta) || !std::isfinite(t_min) ||
      !std::isfinite(t_max())) {
    throw Error(ErrorCode::kInvalidArgument,
                "grid step must be positive and the grid finite");
  }
}

GridDesc GridDesc::from_range(double t_min, double t_max, std::size_t n) {
  if (n < 2 || !(t_max > t_min)) {
    throw Error(ErrorCode::kInvalidArgument,
                "grid range needs t_max > t_min and n >= 2");
  }
  GridDesc g{t_min, (t_max - t_min) / static_cast<double>(n - 1), n};
  g.validate();
  return g;
}

std::size_t GridDesc::node_index(double t) const {
  const double pos = (t - t_min) / delta;
  const double k = std::round(pos);
  if (!(std::abs(pos - k) <= 1e-9) || k < 0.0 || k > static_cast<double>(n - 1)) {
    throw Error(ErrorCode::kInvalidArgument,
                "evaluation point " + std::to_string(t) + " is not a grid node");
  }
  return static_cast<std::size_t>(k);
}

GridSignal::GridSignal(GridDesc grid, std::vector<cdouble> samples)
    : grid_(grid), samples_(std::move(samples)) {
  grid_.validate();
  if (samples_.size() != grid_.n) {
    throw Error(ErrorCode::kInvalidArgument,
                "sample count " + std::to_string(samples_.size()) +
                    " does not match grid size " + std::to_string(grid_.n));
  }
  for (const cdouble& v : samples_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorCode::kInvalidArgument, "signal contains non-finite samples");
    }
  }
}

GridSignal::GridSignal(GridDesc grid)
    : GridSignal(grid, std::vector<cdouble>(grid.n)) {}

void require_same_grid(const GridDesc& a, const GridDesc& b) {
  if (!(a == b)) {
    throw Error(ErrorCode::kGridMismatch, "signals live on different grids");
  }
}

VectorSignal::VectorSignal(GridSignal first, GridSignal second)
    : x1(std::move(first)), x2(std::move(second)) {
  require_same_grid(x1.grid(), x2.grid());
}

}  // namespace akhiezer
