// Copyright The Akhiezer Transform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace akhiezer {

using cdouble = std::complex<double>;

/// Uniform grid t_k = t_min + k*delta, k = 0..n-1.
struct GridDesc {
  double t_min = 0.0;
  double delta = 1.0;
  std::size_t n = 2;

  /// Throws kInvalidArgument unless n >= 2, delta > 0 and everything finite.
  void validate() const;

  double t(std::size_t k) const { return t_min + static_cast<double>(k) * delta; }
  double t_max() const { return t(n - 1); }

  /// Grid with n points spanning [t_min, t_max] inclusive.
  static GridDesc from_range(double t_min, double t_max, std::size_t n);

  /// Index k with t(k) == t up to 1e-9*delta, or throws kInvalidArgument.
  std::size_t node_index(double t) const;

  friend bool operator==(const GridDesc&, const GridDesc&) = default;
};

/// Complex samples of one function on a uniform grid; zero off the grid.
class GridSignal {
 public:
  GridSignal(GridDesc grid, std::vector<cdouble> samples);
  explicit GridSignal(GridDesc grid);  // all zeros

  const GridDesc& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return samples_.size(); }
  std::span<const cdouble> samples() const noexcept { return samples_; }
  std::span<cdouble> samples() noexcept { return samples_; }
  cdouble operator[](std::size_t k) const { return samples_[k]; }
  cdouble& operator[](std::size_t k) { return samples_[k]; }

  /// Sample at integer offset k from node 0; zero outside [0, n).
  cdouble at_offset(std::ptrdiff_t k) const {
    return (k < 0 || k >= static_cast<std::ptrdiff_t>(samples_.size()))
               ? cdouble{}
               : samples_[static_cast<std::size_t>(k)];
  }

  template <class F>
  static GridSignal sample(const GridDesc& grid, F&& f) {
    std::vector<cdouble> v(grid.n);
    for (std::size_t k = 0; k < grid.n; ++k) v[k] = cdouble(f(grid.t(k)));
    return GridSignal(grid, std::move(v));
  }

 private:
  GridDesc grid_;
  std::vector<cdouble> samples_;
};

/// Throws kGridMismatch unless both grids are identical.
void require_same_grid(const GridDesc& a, const GridDesc& b);

/// Column [x1; x2] of two signals on one grid.
struct VectorSignal {
  GridSignal x1;
  GridSignal x2;

  VectorSignal(GridSignal first, GridSignal second);
  const GridDesc& grid() const noexcept { return x1.grid(); }
};

}  // namespace akhiezer
