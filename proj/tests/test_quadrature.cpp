// Copyright The Akhiezer Transform Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>

#include "akhiezer/error.hpp"
#include "akhiezer/quadrature.hpp"
#include "akhiezer/signals.hpp"
#include "akhiezer/transform.hpp"
#include "oracles.hpp"

using namespace akhiezer;
using namespace akhiezer::quadrature;
using kernels::kPi;

namespace {

GridSignal gaussian(const GridDesc& g) {
  return GridSignal::sample(g, [](double t) { return std::exp(-t * t); });
}

double max_diff(std::span<const cdouble> a, std::span<const cdouble> b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

}  // namespace

TEST_CASE("PV configuration validation") {
  PVConfig c;
  CHECK_NOTHROW(c.validate());
  c.quad_tol = 1.0;
  CHECK_THROWS_AS(c.validate(), Error);
  c = {};
  c.tail_cut = 0.0;
  CHECK_THROWS_AS(c.validate(), Error);
  c = {};
  c.pairing_halfwidth = -1.0;
  CHECK_THROWS_AS(c.validate(), Error);
}

TEST_CASE("direct C convolution") {
  const OmegaParam one(1.0);
  const GridDesc g = GridDesc::from_range(-20.0, 20.0, 1024);
  const std::vector<double> nodes = grid_nodes(g);
  const DirectResult zero = convolve_C_direct(one, GridSignal(g), nodes);
  CHECK(std::all_of(zero.values.begin(), zero.values.end(),
                    [](cdouble v) { return v == cdouble{}; }));
  CHECK_FALSE(zero.coarse_grid);
  CHECK(convolve_C_direct(OmegaParam(50.0), GridSignal(g), nodes).coarse_grid);

  // Mass is preserved: int C = c^(0) = 1.
  const DirectResult y = convolve_C_direct(one, gaussian(g), nodes);
  double mass = 0.0;
  for (const cdouble& v : y.values) mass += v.real() * g.delta;
  CHECK(mass == doctest::Approx(std::sqrt(kPi)).epsilon(1e-6));

  // (C * C)(0) = (1/2pi) int sech^2(pi l/2) dl = 2/pi^2, here via an
  // independent Parseval integral.
  const GridDesc wide = GridDesc::from_range(-40.0, 40.0, 8192);
  const GridSignal c1 =
      GridSignal::sample(wide, [&](double t) { return kernels::eval_C(one, t); });
  const double at0 = convolve_C_direct(one, c1, std::vector<double>{0.0}).values[0].real();
  const long double parseval =
      oracle::simpson([](long double l) { return 1.0L / std::pow(std::cosh(oracle::kPiL * l / 2), 2); },
                      -40.0L, 40.0L, 200000) /
      (2.0L * oracle::kPiL);
  CHECK(at0 == doctest::Approx(static_cast<double>(parseval)).epsilon(1e-8));
  CHECK(at0 == doctest::Approx(2.0 / (kPi * kPi)).epsilon(1e-8));
}

TEST_CASE("pairing p.v. for S") {
  const OmegaParam one(1.0);
  const GridDesc huge = GridDesc::from_range(-200.0, 200.0, 40001);
  const GridSignal constant = GridSignal::sample(huge, [](double) { return 2.5; });
  CHECK(std::abs(convolve_S_pv(one, constant, std::vector<double>{0.0}).values[0]) < 1e-14);

  const GridDesc g = GridDesc::from_range(-20.0, 20.0, 4000 + 1);
  const GridSignal x = gaussian(g);
  CHECK(std::abs(convolve_S_pv(one, x, std::vector<double>{0.0}).values[0]) < 1e-14);

  // t = 1 against the spectral path on the same grid.
  const transform::TransformPlan plan(one, g);
  const GridSignal spec = plan.apply_S(x);
  const PvResult at1 = convolve_S_pv(one, x, std::vector<double>{g.t(g.node_index(1.0))});
  CHECK(std::abs(at1.values[0] - spec[g.node_index(1.0)]) < 1e-4);
  CHECK(at1.error_estimates[0] < 1e-4);

  CHECK_THROWS_AS(convolve_S_pv(one, x, std::vector<double>{0.001}), Error);
  // A grid too coarse for the requested accuracy is reported, not hidden.
  const GridDesc coarse = GridDesc::from_range(-3.0, 3.0, 7);
  PVConfig tight;
  tight.quad_tol = 1e-12;
  CHECK_THROWS_AS(convolve_S_pv(one, gaussian(coarse), grid_nodes(coarse), tight),
                  QuadratureError);
}

TEST_CASE("split and direct kernel forms agree") {
  oracle::Uniform u(21);
  for (double w : {0.5, 1.0, 4.0}) {
    const GridDesc g = GridDesc::from_range(-12.0, 12.0, 2049);
    const double c = u(-2, 2), s = u(0.6, 1.5);
    const GridSignal x = GridSignal::sample(g, [&](double t) {
      return std::exp(-(t - c) * (t - c) / (s * s)) * std::polar(1.0, 0.7 * t);
    });
    const auto nodes = grid_nodes(g);
    const auto a = convolve_S_pv(OmegaParam(w), x, nodes, {}, KernelForm::kSplit);
    const auto b = convolve_S_pv(OmegaParam(w), x, nodes, {}, KernelForm::kDirect);
    CHECK(max_diff(a.values, b.values) < 1e-6);
  }
}

TEST_CASE("linearity of the direct operators") {
  oracle::Uniform u(22);
  const OmegaParam om(1.3);
  const GridDesc g = GridDesc::from_range(-10.0, 10.0, 513);
  const auto nodes = grid_nodes(g);
  for (int trial = 0; trial < 5; ++trial) {
    const GridSignal x = signals::generate(
        g, {.kind = signals::Kind::kBandlimitedNoise, .width = 6.0,
            .seed = static_cast<std::uint64_t>(trial + 1)});
    const GridSignal y = signals::generate(g, {.kind = signals::Kind::kGaussian,
                                               .center = u(-3, 3), .width = u(0.5, 2)});
    const cdouble alpha(u(-2, 2), u(-2, 2));
    std::vector<cdouble> comb(g.n);
    for (std::size_t k = 0; k < g.n; ++k) comb[k] = alpha * x[k] + y[k];
    const GridSignal z(g, comb);
    for (int op = 0; op < 3; ++op) {
      auto run = [&](const GridSignal& f) {
        if (op == 0) return convolve_C_direct(om, f, nodes).values;
        if (op == 1) return convolve_S_pv(om, f, nodes).values;
        return hilbert_pv(f, nodes).values;
      };
      const auto fx = run(x), fy = run(y), fz = run(z);
      double d = 0.0;
      for (std::size_t k = 0; k < g.n; ++k) d = std::max(d, std::abs(fz[k] - alpha * fx[k] - fy[k]));
      CHECK(d < 1e-12);
    }
  }
}

TEST_CASE("Hilbert transform") {
  const GridDesc g = GridDesc::from_range(-20.0, 20.0, 2049);
  CHECK(std::abs(hilbert_pv(gaussian(g), std::vector<double>{0.0}).values[0]) < 1e-14);

  // H[1/(1+t^2)] = t/(1+t^2); the closed form is first confirmed by
  // integrating (1/pi) int_0^inf [x(t-u) - x(t+u)]/u du directly.
  auto x = [](double t) { return 1.0 / (1.0 + t * t); };
  boost::math::quadrature::exp_sinh<double> es;
  const GridDesc big = GridDesc::from_range(-200.0, 200.0, 1 << 15);
  const GridSignal xs = GridSignal::sample(big, x);
  for (double t : {0.5, 1.0, 2.0}) {
    const double ref =
        es.integrate([&](double u) { return (x(t - u) - x(t + u)) / u; }, 1e-12) / kPi;
    CHECK(ref == doctest::Approx(t / (1.0 + t * t)).epsilon(1e-9));
    const double node = big.t(static_cast<std::size_t>(std::lround((t - big.t_min) / big.delta)));
    const double want = node / (1.0 + node * node);
    const cdouble got = hilbert_pv(xs, std::vector<double>{node}).values[0];
    CHECK(std::abs(got - want) < 1e-4);
  }
}

TEST_CASE("epsilon sweep") {
  const OmegaParam one(1.0);
  const GridDesc g = GridDesc::from_range(-10.0, 10.0, 2001);
  const std::vector<double> eps = {0.4, 0.2, 0.1, 0.05};
  const EpsilonSweep even = epsilon_sweep_pv(one, gaussian(g), 0.0, eps);
  for (const cdouble& v : even.values) CHECK(std::abs(v) < 1e-14);

  // Truncated values approach the p.v. linearly in eps; the extrapolated limit
  // matches the pairing-scheme value.
  const EpsilonSweep s = epsilon_sweep_pv(one, gaussian(g), 1.0, eps);
  CHECK(s.converged);
  REQUIRE(s.differences.size() == 3);
  CHECK(s.differences[1] < s.differences[0]);
  CHECK(s.differences[2] < s.differences[1]);
  const cdouble pv = convolve_S_pv(one, gaussian(g), std::vector<double>{1.0}).values[0];
  CHECK(std::abs(s.limit - pv) < 1e-3);
  CHECK(std::abs(s.values.back() - pv) < 0.05);

  // A jump at t: the truncated integrals diverge logarithmically.
  const GridSignal step = GridSignal::sample(g, [](double t) { return t < 1.0 ? 0.0 : 1.0; });
  const std::vector<double> fine = {0.4, 0.2, 0.1, 0.05, 0.025};
  CHECK_FALSE(epsilon_sweep_pv(one, step, 1.0, fine).converged);

  CHECK_THROWS_AS(epsilon_sweep_pv(one, gaussian(g), 1.0, std::vector<double>{0.1, 0.2}), Error);
  CHECK_THROWS_AS(epsilon_sweep_pv(one, gaussian(g), 1.0, std::vector<double>{0.1, -0.2}), Error);
}
