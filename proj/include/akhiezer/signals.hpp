// Copyright The Akhiezer Transform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "akhiezer/grid.hpp"

namespace akhiezer::signals {

enum class Kind { kGaussian, kBump, kSechPower, kGrownBump, kBandlimitedNoise };

/// Parameters of a generated test signal. Fields not used by a kind are
/// ignored.
struct SignalSpec {
  Kind kind = Kind::kGaussian;
  double center = 0.0;
  double width = 1.0;       // gaussian width, bump/noise half-width, sech scale
  double amplitude = 1.0;
  double power = 2.0;       // sech_power exponent
  double growth = 0.0;      // grown_bump e^{growth |t|}
  double bandwidth = 4.0;   // noise: highest angular frequency
  int modes = 16;           // noise: number of random sinusoids
  std::uint64_t seed = 1;
};

/// Parses "gaussian", "bump", "sech_power", "grown_bump", "bandlimited_noise".
Kind parse_kind(const std::string& name);
const char* to_string(Kind kind);

GridSignal generate(const GridDesc& grid, const SignalSpec& spec);

/// exp(1 - 1/(1 - s^2)) for |s| < 1, else 0. Smooth, peak 1 at s = 0.
double bump(double s);

/// Band-limited noise times e^{gamma |t|} times a bump window covering
/// the central half of the grid, gamma uniform in [0, max_growth).
GridSignal random_weighted_signal(const GridDesc& grid, double max_growth,
                                  std::mt19937_64& rng);

}  // namespace akhiezer::signals
