// Copyright The Akhiezer Transform Authors
// SPDX-License-Identifier: Apache-2.0

// Reference computations written independently of the library code paths.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>

namespace oracle {

inline constexpr long double kPiL = std::numbers::pi_v<long double>;

// Composite Simpson on [a, b] with an even number of panels, long double.
inline long double simpson(const std::function<long double(long double)>& f, long double a,
                           long double b, int panels) {
  if (panels % 2) ++panels;
  const long double h = (b - a) / panels;
  long double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0L : 2.0L) * f(a + h * i);
  return s * h / 3.0L;
}

inline long double C(long double w, long double x) { return w / kPiL / std::cosh(w * x); }
inline long double S(long double w, long double x) { return w / kPiL / std::sinh(w * x); }

// Uniform doubles in [lo, hi) from a seeded engine.
struct Uniform {
  std::mt19937_64 rng;
  explicit Uniform(std::uint64_t seed) : rng(seed) {}
  double operator()(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  }
};

}  // namespace oracle
