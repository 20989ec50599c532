// Copyright The Akhiezer Transform Authors
// SPDX-License-Identifier: Apache-2.0

#include "akhiezer/signals.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "akhiezer/error.hpp"

namespace akhiezer::signals {
namespace {

struct Mode {
  double amplitude;
  double frequency;
  double phase;
};

std::vector<Mode> draw_modes(int count, double bandwidth, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> freq(0.0, bandwidth);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::normal_distribution<double> amp(0.0, 1.0 / std::sqrt(static_cast<double>(count)));
  std::vector<Mode> modes(static_cast<std::size_t>(count));
  for (Mode& m : modes) {
    m.amplitude = amp(rng);
    m.frequency = freq(rng);
    m.phase = phase(rng);
  }
  return modes;
}

double evaluate(const std::vector<Mode>& modes, double t) {
  double v = 0.0;
  for (const Mode& m : modes) v += m.amplitude * std::cos(m.frequency * t + m.phase);
  return v;
}

}  // namespace

double bump(double s) {
  const double q = 1.0 - s * s;
  return q > 0.0 ? std::exp(1.0 - 1.0 / q) : 0.0;
}

Kind parse_kind(const std::string& name) {
  if (name == "gaussian") return Kind::kGaussian;
  if (name == "bump") return Kind::kBump;
  if (name == "sech_power") return Kind::kSechPower;
  if (name == "grown_bump") return Kind::kGrownBump;
  if (name == "bandlimited_noise") return Kind::kBandlimitedNoise;
  throw Error(ErrorCode::kInvalidArgument, "unknown signal kind '" + name + "'");
}

const char* to_string(Kind kind) {
  switch (kind) {
    case Kind::kGaussian: return "gaussian";
    case Kind::kBump: return "bump";
    case Kind::kSechPower: return "sech_power";
    case Kind::kGrownBump: return "grown_bump";
    case Kind::kBandlimitedNoise: return "bandlimited_noise";
  }
  return "unknown";
}

GridSignal generate(const GridDesc& grid, const SignalSpec& spec) {
  grid.validate();
  if (!(spec.width > 0.0) || !std::isfinite(spec.amplitude)) {
    throw Error(ErrorCode::kInvalidArgument, "signal width must be positive");
  }
  const double c = spec.center;
  const double w = spec.width;
  const double a = spec.amplitude;
  switch (spec.kind) {
    case Kind::kGaussian:
      return GridSignal::sample(grid, [&](double t) {
        const double s = (t - c) / w;
        return a * std::exp(-s * s);
      });
    case Kind::kBump:
      return GridSignal::sample(grid, [&](double t) { return a * bump((t - c) / w); });
    case Kind::kSechPower:
      return GridSignal::sample(grid, [&](double t) {
        const double e = std::exp(-std::abs((t - c) / w));
        return a * std::pow(2.0 * e / (1.0 + e * e), spec.power);
      });
    case Kind::kGrownBump:
      if (!(spec.growth >= 0.0)) {
        throw Error(ErrorCode::kInvalidArgument, "growth must be non-negative");
      }
      return GridSignal::sample(grid, [&](double t) {
        const double b = bump((t - c) / w);
        return b > 0.0 ? a * std::exp(spec.growth * std::abs(t - c)) * b : 0.0;
      });
    case Kind::kBandlimitedNoise: {
      if (spec.modes < 1 || !(spec.bandwidth > 0.0)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "noise needs at least one mode and a positive bandwidth");
      }
      std::mt19937_64 rng(spec.seed);
      const auto modes = draw_modes(spec.modes, spec.bandwidth, rng);
      return GridSignal::sample(grid, [&](double t) {
        return a * evaluate(modes, t - c) * bump((t - c) / w);
      });
    }
  }
  throw Error(ErrorCode::kInternal, "unhandled signal kind");
}

GridSignal random_weighted_signal(const GridDesc& grid, double max_growth,
                                  std::mt19937_64& rng) {
  const double center = 0.5 * (grid.t_min + grid.t_max());
  const double half = 0.25 * (grid.t_max() - grid.t_min);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double gamma = max_growth > 0.0 ? max_growth * unit(rng) : 0.0;
  const double bandwidth = 0.5 + 3.5 * unit(rng);
  const auto modes = draw_modes(12, bandwidth, rng);
  const double phase = 2.0 * std::numbers::pi * unit(rng);
  return GridSignal::sample(grid, [&](double t) {
    const double s = t - center;
    const double b = bump(s / half);
    if (b == 0.0) return cdouble{};
    // Complex-valued on purpose: the operators act on C-valued functions.
    const cdouble carrier = std::polar(1.0, phase + 0.3 * s);
    return carrier * evaluate(modes, s) * std::exp(gamma * std::abs(t)) * b;
  });
}

}  // namespace akhiezer::signals
