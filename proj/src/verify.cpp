// Copyright The Akhiezer Transform Authors
// SPDX-License-Identifier: Apache-2.0

#include "akhiezer/verify.hpp"

#include <algorithm>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <random>

#include "akhiezer/error.hpp"
#include "akhiezer/quadrature.hpp"
#include "akhiezer/signals.hpp"
#include "akhiezer/spectral.hpp"

namespace akhiezer::verify {
namespace {

using kernels::kPi;
using transform::Operator;

constexpr double kSiPi = 1.8519370519824661703;  // Si(pi)

CheckResult defect(std::string name, std::string ref, double value, double tol) {
  return {std::move(name), std::move(ref), value, 0.0, tol, value <= tol};
}

CheckResult bounded(std::string name, std::string ref, double value, double bound) {
  return {std::move(name), std::move(ref), value, bound, 0.0, value <= bound};
}

double scale(const OmegaParam& omega) { return std::max(1.0, 1.0 / omega.value()); }

std::vector<double> linspace(double a, double b, int count) {
  std::vector<double> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    v[static_cast<std::size_t>(i)] = count == 1 ? a : a + (b - a) * i / (count - 1);
  }
  return v;
}

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

double max_abs_diff(const GridSignal& a, const GridSignal& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

double max_abs(const GridSignal& a) {
  double d = 0.0;
  for (const cdouble& v : a.samples()) d = std::max(d, std::abs(v));
  return d;
}

}  // namespace

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::vector<std::string> Report::failing() const {
  std::vector<std::string> out;
  for (const CheckResult& c : checks) {
    if (!c.pass) out.push_back(c.name);
  }
  return out;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["omega"] = omega;
  j["sigma"] = sigma;
  j["seed"] = seed;
  j["all_pass"] = all_pass();
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : checks) {
    nlohmann::ordered_json o;
    o["name"] = c.name;
    o["paper_ref"] = c.paper_ref;
    o["value"] = c.value;
    o["bound_or_target"] = c.bound_or_target;
    o["tolerance"] = c.tolerance;
    o["pass"] = c.pass;
    arr.push_back(std::move(o));
  }
  return j.dump(2) + "\n";
}

std::vector<CheckResult> check_kernel_envelopes(const OmegaParam& omega, int points) {
  // Log-spaced |xi| from 1e-6/omega to 30/omega, both signs.
  int c_fail = 0, s_fail = 0;
  double residual = 0.0;
  const double w = omega.value();
  for (int i = 0; i < points; ++i) {
    const double mag = std::pow(10.0, -6.0 + (std::log10(30.0) + 6.0) * i / (points - 1)) / w;
    for (double xi : {mag, -mag}) {
      if (!kernels::check_C_envelope(omega, xi).holds) ++c_fail;
      if (!kernels::check_S_envelope(omega, xi).holds) ++s_fail;
      const double s = kernels::eval_S(omega, xi);
      const double sing = 1.0 / (kPi * xi);
      const double r = kernels::eval_r(omega, xi);
      const double ref = std::max({1.0, std::abs(s), std::abs(sing)});
      residual = std::max(residual, std::abs(s - sing - r) / ref);
    }
  }
  return {
      defect("kernel_envelope_C", "(w/pi) e^{-w|x|} < C(x) <= (2w/pi) e^{-w|x|}", c_fail, 0.0),
      defect("kernel_envelope_S", "|S(x)| <= (2w/pi) e^{-w|x|} / (1 - e^{-2w|x|})", s_fail, 0.0),
      defect("kernel_decomposition", "S(x) - 1/(pi x) - r(x) = 0", residual, 1e-12),
  };
}

CheckResult check_crucial_identity(std::span<const double> omegas, int points, double tol) {
  double worst = 0.0;
  for (double w : omegas) {
    const OmegaParam omega(w);
    for (double lambda : linspace(-100.0 * w, 100.0 * w, points)) {
      worst = std::max(worst, std::abs(spectral::verify_crucial_identity(omega, lambda) - 1.0));
    }
  }
  return defect("crucial_identity", "|c^(l)|^2 + |s^(l)|^2 = 1", worst, tol);
}

CheckResult check_matrix_unitarity(const OmegaParam& omega, int points, double tol) {
  double worst = 0.0;
  const double w = omega.value();
  for (double lambda : linspace(-100.0 * w, 100.0 * w, points)) {
    const auto phi = spectral::phi_hat_matrix(omega, lambda);
    const auto psi = spectral::psi_hat_matrix(omega, lambda);
    worst = std::max({worst, phi.unitarity_defect(), psi.unitarity_defect(),
                      (psi * phi).identity_defect()});
  }
  return defect("matrix_multiplier_unitarity", "Phi^ and Psi^ unitary, Psi^ Phi^ = I", worst,
                tol);
}

CheckResult check_table_unitarity(const transform::TransformPlan& plan, double tol) {
  return defect("multiplier_table_unitarity", "|c_j|^2 + |s_j|^2 = 1 on the FFT frequencies",
                plan.table_unitarity_defect(), tol);
}

CheckResult check_fourier_C(const OmegaParam& omega, int points, double tol) {
  const double w = omega.value();
  const GridDesc grid = GridDesc::from_range(-40.0 / w, 40.0 / w, 4001);
  const GridSignal c =
      GridSignal::sample(grid, [&](double t) { return kernels::eval_C(omega, t); });
  double worst = 0.0;
  for (double lambda : linspace(-20.0 * w, 20.0 * w, points)) {
    worst = std::max(worst, std::abs(spectral::grid_fourier_transform(c, lambda) -
                                     spectral::c_hat(omega, lambda)));
  }
  return defect("fourier_C", "FT of C equals sech(pi l / 2w)", worst, tol);
}

CheckResult check_fourier_S(const OmegaParam& omega, int points, double tol) {
  const double w = omega.value();
  double worst = 0.0;
  for (double lambda : linspace(-25.0 * w, 25.0 * w, points)) {
    const auto ex = spectral::extrapolate_s_hat(omega, lambda);
    worst = std::max(worst, std::abs(ex.value - spectral::s_hat(omega, lambda)));
  }
  return defect("fourier_S", "lim eps->0 of truncated FT of S equals i tanh(pi l / 2w)", worst,
                tol);
}

CheckResult check_remainder_decay(const OmegaParam& omega) {
  const double w = omega.value();
  int violations = 0;
  double prev = INFINITY;
  for (double eps : {0.2, 0.1, 0.05, 0.025}) {
    const double r = std::abs(spectral::remainder_rho(omega, w, eps / w).rho);
    if (!(r < prev)) ++violations;
    prev = r;
  }
  return defect("remainder_decay", "rho(l, eps) -> 0 monotonically as eps -> 0", violations,
                0.0);
}

CheckResult check_remainder_sup(const OmegaParam& omega, int lambdas, int levels) {
  const double w = omega.value();
  std::vector<double> eps;
  for (int k = 0; k < levels; ++k) eps.push_back(std::ldexp(kPi / (4.0 * w), -k));
  const auto lam = linspace(-50.0 * w, 50.0 * w, lambdas);
  const auto sup = spectral::remainder_grid_sup(omega, lam, eps);
  return bounded("remainder_sup", "sup over l, eps <= pi/4w of |rho(l, eps)| is finite",
                 sup.sup, 2.0 * kSiPi / kPi);
}

GridDesc l2_grid(const OmegaParam& omega, std::size_t n) {
  const double L = 20.0 * scale(omega);
  return GridDesc::from_range(-L, L, n);
}

std::vector<GridSignal> random_smooth_signals(const GridDesc& grid, int count,
                                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double L = 0.5 * (grid.t_max() - grid.t_min);
  const double mid = 0.5 * (grid.t_max() + grid.t_min);
  std::vector<GridSignal> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double center = mid + 0.2 * L * (2.0 * unit(rng) - 1.0);
    const double width = 0.5 + 1.5 * unit(rng);
    const double freq = 3.0 * (2.0 * unit(rng) - 1.0);
    const double phase = 2.0 * kPi * unit(rng);
    const double amp = 0.5 + unit(rng);
    out.push_back(GridSignal::sample(grid, [&](double t) {
      const double s = (t - center) / width;
      return amp * std::exp(-s * s) * std::polar(1.0, freq * t + phase);
    }));
  }
  return out;
}

std::vector<VectorSignal> standard_vector_signals(const GridDesc& grid) {
  using signals::Kind;
  auto gen = [&](signals::SignalSpec spec) { return signals::generate(grid, spec); };
  const GridSignal g = gen({.kind = Kind::kGaussian});
  const GridSignal tg =
      GridSignal::sample(grid, [](double t) { return t * std::exp(-t * t); });
  const GridSignal modulated = GridSignal::sample(
      grid, [](double t) { return std::exp(-t * t) * std::polar(1.0, 2.0 * t); });
  std::vector<VectorSignal> out;
  out.emplace_back(g, tg);
  out.emplace_back(gen({.kind = Kind::kSechPower, .power = 4.0}),
                   gen({.kind = Kind::kGaussian, .center = 2.0}));
  out.emplace_back(gen({.kind = Kind::kBump, .width = 3.0}), modulated);
  out.emplace_back(GridSignal(grid), gen({.kind = Kind::kGaussian, .width = 2.0}));
  return out;
}

CheckResult check_pythagoras(const transform::TransformPlan& plan,
                             std::span<const GridSignal> signals, double tol) {
  double worst = 0.0;
  for (const GridSignal& f : signals) {
    const double nc = transform::l2_norm(plan.apply_C(f));
    const double ns = transform::l2_norm(plan.apply_S(f));
    const double nf = transform::l2_norm(f);
    worst = std::max(worst, std::abs(nc * nc + ns * ns - nf * nf) / (nf * nf));
  }
  return defect("pythagoras", "||Cf||^2 + ||Sf||^2 = ||f||^2", worst, tol);
}

std::vector<CheckResult> check_isometry_inversion(const transform::TransformPlan& plan,
                                                  std::span<const VectorSignal> signals,
                                                  double tol) {
  double iso_phi = 0.0, iso_psi = 0.0, inv_a = 0.0, inv_b = 0.0;
  for (const VectorSignal& x : signals) {
    const double nx = transform::l2_norm(x);
    const VectorSignal y = plan.apply_phi(x);
    const VectorSignal z = plan.apply_psi(x);
    iso_phi = std::max(iso_phi, std::abs(transform::l2_norm(y) - nx) / nx);
    iso_psi = std::max(iso_psi, std::abs(transform::l2_norm(z) - nx) / nx);
    inv_a = std::max(inv_a, transform::l2_norm(transform::subtract(plan.apply_psi(y), x)) / nx);
    inv_b = std::max(inv_b, transform::l2_norm(transform::subtract(plan.apply_phi(z), x)) / nx);
  }
  return {
      defect("isometry_phi", "||Phi x|| = ||x|| in L2+L2", iso_phi, tol),
      defect("isometry_psi", "||Psi x|| = ||x|| in L2+L2", iso_psi, tol),
      defect("inversion_psi_phi", "Psi Phi x = x", inv_a, tol),
      defect("inversion_phi_psi", "Phi Psi x = x", inv_b, tol),
  };
}

std::vector<CheckResult> check_hilbert(double half_width, std::size_t n, double norm_tol,
                                       double square_tol) {
  const GridDesc grid = GridDesc::from_range(-half_width, half_width, n);
  const std::vector<double> nodes = quadrature::grid_nodes(grid);
  // Derivatives of e^{-t^2}: k vanishing moments make Hx decay like t^{-k-1},
  // so truncating Hx to the grid costs little in the second application.
  const std::vector<GridSignal> xs = {
      GridSignal::sample(grid, [](double t) { return (4.0 * t * t - 2.0) * std::exp(-t * t); }),
      GridSignal::sample(grid, [](double t) { return (12.0 - 8.0 * t * t) * t * std::exp(-t * t); }),
      GridSignal::sample(grid, [](double t) {
        const double u = t * t;
        return (16.0 * u * u - 48.0 * u + 12.0) * std::exp(-u);
      }),
      GridSignal::sample(grid, [](double t) { return std::sin(5.0 * t) * std::exp(-t * t); }),
  };
  double norm_defect = 0.0, square_defect = 0.0;
  for (const GridSignal& x : xs) {
    const GridSignal hx(grid, quadrature::hilbert_pv(x, nodes).values);
    const GridSignal hhx(grid, quadrature::hilbert_pv(hx, nodes).values);
    const double nx = transform::l2_norm(x);
    norm_defect = std::max(norm_defect, std::abs(transform::l2_norm(hx) - nx) / nx);
    double d = 0.0;
    for (std::size_t k = 0; k < n; ++k) d = std::max(d, std::abs(hhx[k] + x[k]));
    square_defect = std::max(square_defect, d / max_abs(x));
  }
  return {
      defect("hilbert_norm", "||Hx|| = ||x||", norm_defect, norm_tol),
      defect("hilbert_square", "H^2 x = -x", square_defect, square_tol),
  };
}

std::vector<CheckResult> check_closed_forms(double tol) {
  boost::math::quadrature::exp_sinh<double> integrator;
  double worst_c = 0.0, worst_s = 0.0;
  for (int i = 0; i <= 9; ++i) {
    const double a = 0.1 * i;
    // cosh(ax)/cosh(x) and x cosh(ax)/sinh(x) in overflow-free form.
    auto fc = [a](double x) {
      return (std::exp((a - 1.0) * x) + std::exp(-(a + 1.0) * x)) / (1.0 + std::exp(-2.0 * x));
    };
    auto fs = [a](double x) {
      if (x == 0.0) return 1.0;
      return x * (std::exp((a - 1.0) * x) + std::exp(-(a + 1.0) * x)) / -std::expm1(-2.0 * x);
    };
    const double qc = integrator.integrate(fc, 1e-14);
    const double qs = integrator.integrate(fs, 1e-14);
    const double ec = kernels::closed_form_cosh_integral(a);
    const double es = kernels::closed_form_sinh_integral(a);
    worst_c = std::max(worst_c, std::abs(qc - ec) / ec);
    worst_s = std::max(worst_s, std::abs(qs - es) / es);
  }
  return {
      defect("closed_form_cosh", "int_0^inf cosh(ax)/cosh(x) dx = pi / (2 cos(pi a/2))",
             worst_c, tol),
      defect("closed_form_sinh",
             "int_0^inf x cosh(ax)/sinh(x) dx = pi^2 / (4 sin^2(pi (1-a)/2))", worst_s, tol),
  };
}

CheckResult bound_check(const transform::TransformPlan& plan, double sigma, Operator op,
                        int trials, std::uint64_t seed) {
  const auto rep = transform::weighted_bound_report(plan, SigmaParam(sigma), op, trials, seed);
  const double a = sigma / plan.omega().value();
  CheckResult c = bounded(std::string("bound_") + transform::to_string(op) + "_a" + fixed2(a),
                          "||op||_sigma <= " + rep.derivation, rep.empirical_ratio,
                          rep.paper_bound);
  c.pass = rep.satisfied;
  return c;
}

GridDesc roundtrip_grid(const OmegaParam& omega) {
  // Scaling with 1/omega keeps the growth range e^{30 a} independent of omega;
  // FFT rounding is relative to the largest sample.
  const double L = 60.0 / omega.value();
  return GridDesc::from_range(-L, L, 8192);
}

CheckResult check_weighted_roundtrip(const transform::TransformPlan& plan, double sigma_ratio,
                                     int count, std::uint64_t seed, double tol) {
  const SigmaParam sigma(sigma_ratio * plan.omega().value());
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int i = 0; i < count; ++i) {
    GridSignal a = signals::random_weighted_signal(plan.grid(), sigma.value(), rng);
    GridSignal b = signals::random_weighted_signal(plan.grid(), sigma.value(), rng);
    const VectorSignal x(std::move(a), std::move(b));
    worst = std::max({worst, transform::roundtrip_error(plan, x, sigma),
                      transform::reverse_roundtrip_error(plan, x, sigma)});
  }
  return defect("weighted_roundtrip_a" + fixed2(sigma_ratio),
                "Psi Phi x = x and Phi Psi x = x in L2_sigma + L2_sigma", worst, tol);
}

std::vector<CheckResult> check_cross_path(const transform::TransformPlan& plan, double c_tol,
                                          double s_tol) {
  const GridSignal x = signals::generate(plan.grid(), {.kind = signals::Kind::kGaussian});
  const auto nodes = quadrature::grid_nodes(plan.grid());
  const GridSignal c_direct(plan.grid(),
                            quadrature::convolve_C_direct(plan.omega(), x, nodes).values);
  const GridSignal s_direct(plan.grid(),
                            quadrature::convolve_S_pv(plan.omega(), x, nodes).values);
  return {
      defect("cross_path_C", "FFT multiplier path = direct trapezoid convolution",
             max_abs_diff(plan.apply_C(x), c_direct), c_tol),
      defect("cross_path_S", "FFT multiplier path = p.v. pairing quadrature",
             max_abs_diff(plan.apply_S(x), s_direct), s_tol),
  };
}

Report run_suite(const SuiteOptions& opts) {
  const OmegaParam omega(opts.omega);
  const SigmaParam sigma(opts.sigma);
  sigma.ratio(omega);
  const transform::Tolerances& tol = opts.tol;
  auto faulty = [&](transform::TransformPlan plan) {
    return opts.fault == Fault::kMultiplierTable ? plan.with_scaled_s_table(1.01) : plan;
  };

  Report rep;
  rep.omega = opts.omega;
  rep.sigma = opts.sigma;
  rep.seed = opts.seed;
  auto add = [&](auto&& v) {
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, CheckResult>) {
      rep.checks.push_back(std::move(v));
    } else {
      for (auto& c : v) rep.checks.push_back(std::move(c));
    }
  };

  add(check_kernel_envelopes(omega, 1000));
  const double omegas[] = {opts.omega};
  add(check_crucial_identity(omegas, 1000, tol.crucial_identity));
  add(check_matrix_unitarity(omega, 1000, tol.crucial_identity));

  const auto l2_plan = faulty(transform::make_plan(omega, l2_grid(omega, 4096)));
  add(check_table_unitarity(l2_plan, tol.table_unitarity));
  add(check_fourier_C(omega, 201, tol.fourier_c));
  add(check_fourier_S(omega, 11, tol.fourier_s));
  add(check_remainder_decay(omega));
  add(check_remainder_sup(omega, 41, 6));

  const auto smooth = random_smooth_signals(l2_plan.grid(), opts.random_signals, opts.seed);
  add(check_pythagoras(l2_plan, smooth, tol.pythagoras));
  const auto standard = standard_vector_signals(l2_plan.grid());
  add(check_isometry_inversion(l2_plan, standard, tol.isometry));

  add(check_hilbert(48.0, 4096, tol.hilbert_norm, tol.hilbert_square));
  add(check_closed_forms(tol.closed_form));

  std::vector<double> ratios = {0.0, 0.25, 0.5, 0.75};
  const double config_ratio = opts.sigma / opts.omega;
  if (std::find(ratios.begin(), ratios.end(), config_ratio) == ratios.end()) {
    ratios.push_back(config_ratio);
  }
  const auto rt_plan = faulty(transform::make_plan(omega, roundtrip_grid(omega)));
  for (double a : ratios) {
    for (Operator op : {Operator::kC, Operator::kS, Operator::kPhi, Operator::kPsi}) {
      add(bound_check(rt_plan, a * opts.omega, op, opts.bound_trials, opts.seed));
    }
  }
  {
    auto c = bound_check(rt_plan, 0.0, Operator::kC, opts.bound_trials, opts.seed);
    c.name = "contractive_C";
    c.paper_ref = "||Cf|| <= ||f|| in L2";
    c.bound_or_target = 1.0;
    c.tolerance = tol.isometry;
    c.pass = c.value <= 1.0 + tol.isometry;
    add(std::move(c));
  }
  std::vector<double> rt_ratios = {0.25, 0.5};
  if (config_ratio > 0.0 &&
      std::find(rt_ratios.begin(), rt_ratios.end(), config_ratio) == rt_ratios.end()) {
    rt_ratios.push_back(config_ratio);
  }
  for (double a : rt_ratios) {
    add(check_weighted_roundtrip(rt_plan, a, 3, opts.seed, tol.weighted_roundtrip));
  }

  const double L = 8.0 * scale(omega);
  add(check_cross_path(faulty(transform::make_plan(omega, GridDesc::from_range(-L, L, 256))),
                       tol.c_cross_path, tol.s_cross_path));
  return rep;
}

}  // namespace akhiezer::verify
