// Copyright The Akhiezer Transform Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "akhiezer/error.hpp"
#include "akhiezer/spectral.hpp"
#include "oracles.hpp"

using namespace akhiezer;
using namespace akhiezer::spectral;
using kernels::kPi;

TEST_CASE("scalar multipliers") {
  for (double w : {0.3, 1.0, 7.0}) {
    CHECK(c_hat(OmegaParam(w), 0.0) == 1.0);
    CHECK(s_hat(OmegaParam(w), 0.0) == cdouble(0.0, 0.0));
  }
  const OmegaParam half_pi(kPi / 2);
  CHECK(c_hat(half_pi, 1.0) == doctest::Approx(0.6480543).epsilon(1e-7));
  CHECK(s_hat(half_pi, 1.0).imag() == doctest::Approx(0.7615942).epsilon(1e-7));
  CHECK(s_hat(half_pi, 1.0).real() == 0.0);
  CHECK(c_hat(OmegaParam(1.0), 2.0) == doctest::Approx(0.0862667).epsilon(1e-6));
  CHECK(s_hat(OmegaParam(1.0), -2.0) == -s_hat(OmegaParam(1.0), 2.0));
  // Far tails: no overflow, limits reached.
  CHECK(c_hat(OmegaParam(1.0), 1e6) == 0.0);
  CHECK(s_hat(OmegaParam(1.0), -1e6).imag() == -1.0);
}

TEST_CASE("crucial identity") {
  CHECK(verify_crucial_identity(OmegaParam(1.0), 0.0) == 1.0);
  CHECK(std::abs(verify_crucial_identity(OmegaParam(kPi / 2), 1.0) - 1.0) < 1e-15);
  CHECK(std::abs(verify_crucial_identity(OmegaParam(3.0), 17.23) - 1.0) < 1e-12);
  oracle::Uniform u(11);
  for (double w : {0.5, 1.0, kPi, 10.0}) {
    for (int i = 0; i < 1000; ++i) {
      const double lambda = u(-100.0 * w, 100.0 * w);
      REQUIRE(std::abs(verify_crucial_identity(OmegaParam(w), lambda) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("matrix multipliers") {
  const OmegaParam one(1.0);
  CHECK(phi_hat_matrix(one, 0.0).identity_defect() == 0.0);
  CHECK(psi_hat_matrix(one, 0.0).identity_defect() == 0.0);
  CHECK((phi_hat_matrix(OmegaParam(kPi / 2), 1.0) * psi_hat_matrix(OmegaParam(kPi / 2), 1.0))
            .identity_defect() < 1e-12);
  CHECK(phi_hat_matrix(one, 3.0).unitarity_defect() < 1e-12);
  CHECK(phi_hat_matrix(one, 3.0).kind == MultiplierKind::kPhi);
  CHECK(psi_hat_matrix(one, 3.0).lambda == 3.0);
  oracle::Uniform u(12);
  for (int i = 0; i < 500; ++i) {
    const OmegaParam w(u(0.1, 20.0));
    const double lambda = u(-300.0, 300.0);
    const auto phi = phi_hat_matrix(w, lambda);
    const auto psi = psi_hat_matrix(w, lambda);
    REQUIRE(phi.unitarity_defect() < 1e-12);
    REQUIRE(psi.unitarity_defect() < 1e-12);
    REQUIRE((phi * psi).identity_defect() < 1e-12);
    REQUIRE((psi * phi).identity_defect() < 1e-12);
    // psi is the adjoint of phi: s^ is purely imaginary.
    REQUIRE((phi.adjoint() * psi.adjoint()).identity_defect() < 1e-12);
  }
}

TEST_CASE("truncated S transform") {
  const OmegaParam one(1.0);
  CHECK(s_hat_truncated(one, 0.0, 0.1).value == cdouble(0.0, 0.0));
  const TruncatedTransform tr = s_hat_truncated(one, 3.0, 0.05);
  CHECK(tr.value.real() == 0.0);
  CHECK(tr.error_estimate < 1e-10);
  CHECK(tr.cutoff > 0.05);

  // Oracle: 2 int_eps^T S(t) sin(lt) dt by long-double Simpson.
  for (double lambda : {0.5, 3.0, -7.0}) {
    const long double q = 2.0L * oracle::simpson(
        [&](long double t) { return oracle::S(1.0L, t) * std::sin(lambda * t); }, 0.05L, 40.0L,
        200000);
    CHECK(s_hat_truncated(one, lambda, 0.05).value.imag() ==
          doctest::Approx(static_cast<double>(q)).epsilon(1e-9));
  }

  CHECK_THROWS_AS(s_hat_truncated(one, 1.0, 0.0), Error);
  CHECK_THROWS_AS(s_hat_truncated(one, 1.0, -1.0), Error);
  CHECK_THROWS_AS(s_hat_truncated(one, NAN, 0.1), Error);
  // An unreachable tolerance surfaces as a quadrature error with its estimate.
  QuadratureOptions strict;
  strict.fail_threshold = 1e-30;
  try {
    s_hat_truncated(one, 2.0, 0.1, strict);
    FAIL("expected a quadrature error");
  } catch (const QuadratureError& e) {
    CHECK(e.code() == ErrorCode::kQuadrature);
    CHECK(e.achieved_error() > 1e-30);
  }
}

TEST_CASE("epsilon extrapolation reaches the multiplier") {
  const auto ex = extrapolate_s_hat(OmegaParam(kPi / 2), 1.0);
  CHECK(ex.converged);
  CHECK(std::abs(ex.value - cdouble(0.0, std::tanh(1.0))) < 1e-6);
  for (double lambda : {-25.0, -3.3, 0.7, 12.0, 25.0}) {
    const auto e = extrapolate_s_hat(OmegaParam(1.0), lambda);
    CHECK(std::abs(e.value - s_hat(OmegaParam(1.0), lambda)) < 1e-6);
  }
}

TEST_CASE("truncation remainder") {
  const OmegaParam one(1.0);
  CHECK(remainder_rho(one, 0.0, 0.3).rho == cdouble(0.0, 0.0));
  double prev = INFINITY;
  for (double eps : {0.2, 0.1, 0.05, 0.025}) {
    const double r = std::abs(remainder_rho(one, 1.0, eps).rho);
    CHECK(r < prev);
    prev = r;
  }
  CHECK(prev < 0.02);

  std::vector<double> lambdas, epsilons;
  for (int i = 0; i <= 100; ++i) lambdas.push_back(-50.0 + i);
  for (int k = 0; k < 6; ++k) epsilons.push_back(kPi / 4 / std::ldexp(1.0, k));
  const RemainderSup sup = remainder_grid_sup(one, lambdas, epsilons);
  CHECK(sup.evaluations == 606);
  CHECK(std::isfinite(sup.sup));
  // S positive and decreasing gives |rho| <= 2 Si(pi)/pi.
  CHECK(sup.sup <= 2.0 * 1.8519370519824662 / kPi);
  CHECK(std::abs(remainder_rho(one, 5.0, kPi / 4).rho) <= sup.sup);
}

TEST_CASE("grid Fourier transform of sampled C reproduces sech") {
  for (double w : {0.5, 1.0, kPi, 10.0}) {
    const OmegaParam om(w);
    const GridDesc g = GridDesc::from_range(-40.0 / w, 40.0 / w, 4001);
    const GridSignal c = GridSignal::sample(g, [&](double t) { return kernels::eval_C(om, t); });
    for (int i = 0; i <= 40; ++i) {
      const double lambda = -20.0 * w + i * w;
      REQUIRE(std::abs(grid_fourier_transform(c, lambda) - c_hat(om, lambda)) < 1e-6);
    }
  }
}
