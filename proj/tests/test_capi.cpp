// Copyright The Akhiezer Transform Authors
// SPDX-License-Identifier: Apache-2.0

// Exercises the shared library through akhiezer.h alone.

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <memory>
#include <string>
#include <vector>

#include "akhiezer/akhiezer.h"

namespace {

struct SignalDeleter {
  void operator()(akz_signal* s) const { akz_signal_destroy(s); }
};
struct PlanDeleter {
  void operator()(akz_plan* p) const { akz_plan_destroy(p); }
};
using Signal = std::unique_ptr<akz_signal, SignalDeleter>;
using Plan = std::unique_ptr<akz_plan, PlanDeleter>;

Signal gaussian_pair(double t_min, double t_max, size_t n) {
  akz_signal_spec a, b;
  akz_signal_spec_default(&a);
  akz_signal_spec_default(&b);
  b.center = 0.5;
  b.width = 0.7;
  akz_signal* s = nullptr;
  REQUIRE(akz_signal_generate(t_min, t_max, n, &a, &b, &s) == AKZ_OK);
  return Signal(s);
}

std::filesystem::path temp_path(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("status names and last error") {
  CHECK(std::string(akz_version()).size() > 0);
  CHECK(std::string(akz_status_name(AKZ_OK)) == "ok");
  CHECK(std::string(akz_status_name(AKZ_ERR_QUADRATURE)).size() > 0);
  double v = 0.0;
  CHECK(akz_kernel_c(-1.0, 0.0, &v) == AKZ_ERR_INVALID_ARGUMENT);
  CHECK(std::string(akz_last_error()).size() > 0);
  CHECK(akz_kernel_c(1.0, 0.0, &v) == AKZ_OK);
  CHECK(std::string(akz_last_error()).empty());
  CHECK(v == doctest::Approx(1.0 / M_PI));
  CHECK(akz_kernel_s(1.0, 0.0, &v) == AKZ_ERR_DOMAIN);
  CHECK(akz_kernel_r(1.0, 0.0, &v) == AKZ_OK);
  CHECK(v == doctest::Approx(0.0));
  double c = 0.0, s = 0.0;
  CHECK(akz_multipliers(1.0, 2.0, &c, &s) == AKZ_OK);
  CHECK(c * c + s * s == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(akz_kernel_c(1.0, 0.0, nullptr) == AKZ_ERR_INVALID_ARGUMENT);

  akz_signal_kind k;
  CHECK(akz_signal_kind_parse("sech_power", &k) == AKZ_OK);
  CHECK(k == AKZ_SIGNAL_SECH_POWER);
  CHECK(akz_signal_kind_parse("triangle", &k) == AKZ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("signal accessors") {
  akz_signal* raw = nullptr;
  CHECK(akz_signal_create(0.0, 1.0, 1, &raw) == AKZ_ERR_INVALID_ARGUMENT);
  REQUIRE(akz_signal_create(-1.0, 1.0, 5, &raw) == AKZ_OK);
  const Signal sig(raw);
  double t0 = 0, d = 0;
  size_t n = 0;
  REQUIRE(akz_signal_grid(sig.get(), &t0, &d, &n) == AKZ_OK);
  CHECK(t0 == -1.0);
  CHECK(d == 0.5);
  CHECK(n == 5);
  const std::vector<double> re{1, 2, 3, 4, 5}, im{0, 0, 1, 0, 0};
  REQUIRE(akz_signal_set(sig.get(), 2, re.data(), im.data()) == AKZ_OK);
  std::vector<double> r2(5), i2(5);
  REQUIRE(akz_signal_get(sig.get(), 2, r2.data(), i2.data()) == AKZ_OK);
  CHECK(r2 == re);
  CHECK(i2 == im);
  CHECK(akz_signal_get(sig.get(), 3, r2.data(), i2.data()) == AKZ_ERR_INVALID_ARGUMENT);
  double norm = 0.0;
  REQUIRE(akz_signal_norm(sig.get(), 0.0, &norm) == AKZ_OK);
  CHECK(norm == doctest::Approx(std::sqrt(0.5 * 56.0)));
}

TEST_CASE("apply, round trip and csv through the C API") {
  const Signal x = gaussian_pair(-8.0, 8.0, 256);
  akz_plan* praw = nullptr;
  CHECK(akz_plan_create(0.0, x.get(), &praw) == AKZ_ERR_INVALID_ARGUMENT);
  REQUIRE(akz_plan_create(1.0, x.get(), &praw) == AKZ_OK);
  const Plan plan(praw);
  size_t m = 0;
  REQUIRE(akz_plan_padded_length(plan.get(), &m) == AKZ_OK);
  CHECK(m == 512);

  for (akz_operator op : {AKZ_OP_C, AKZ_OP_S, AKZ_OP_PHI, AKZ_OP_PSI}) {
    akz_signal *a = nullptr, *b = nullptr;
    REQUIRE(akz_apply(plan.get(), op, AKZ_METHOD_SPECTRAL, x.get(), &a) == AKZ_OK);
    REQUIRE(akz_apply(plan.get(), op, AKZ_METHOD_DIRECT, x.get(), &b) == AKZ_OK);
    const Signal sa(a), sb(b);
    double dev = 1.0;
    REQUIRE(akz_signal_max_deviation(sa.get(), sb.get(), &dev) == AKZ_OK);
    CHECK(dev < (op == AKZ_OP_C ? 1e-6 : 1e-4));
  }
  akz_signal* h = nullptr;
  CHECK(akz_apply(plan.get(), AKZ_OP_HILBERT, AKZ_METHOD_SPECTRAL, x.get(), &h) ==
        AKZ_ERR_INVALID_ARGUMENT);
  REQUIRE(akz_apply(plan.get(), AKZ_OP_HILBERT, AKZ_METHOD_DIRECT, x.get(), &h) == AKZ_OK);
  akz_signal_destroy(h);
  CHECK(akz_apply(plan.get(), static_cast<akz_operator>(9), AKZ_METHOD_SPECTRAL, x.get(), &h) ==
        AKZ_ERR_INVALID_ARGUMENT);
  CHECK(akz_apply(nullptr, AKZ_OP_C, AKZ_METHOD_SPECTRAL, x.get(), &h) ==
        AKZ_ERR_INVALID_ARGUMENT);

  const Signal other = gaussian_pair(-8.0, 8.0, 255);
  CHECK(akz_apply(plan.get(), AKZ_OP_C, AKZ_METHOD_SPECTRAL, other.get(), &h) ==
        AKZ_ERR_GRID_MISMATCH);

  // Phi x decays like e^{-|t|}, so the round trip needs a wider window.
  const Signal wide = gaussian_pair(-30.0, 30.0, 1024);
  akz_plan* wraw = nullptr;
  REQUIRE(akz_plan_create_grid(1.0, -30.0, 30.0, 1024, &wraw) == AKZ_OK);
  const Plan wplan(wraw);
  double rt = 1.0;
  REQUIRE(akz_roundtrip_error(wplan.get(), wide.get(), 0.0, &rt) == AKZ_OK);
  CHECK(rt < 1e-6);
  CHECK(akz_roundtrip_error(wplan.get(), wide.get(), 1.0, &rt) == AKZ_ERR_DOMAIN);

  const auto path = temp_path("akz_capi_roundtrip.csv");
  REQUIRE(akz_signal_write_csv(x.get(), path.c_str()) == AKZ_OK);
  akz_signal* back = nullptr;
  REQUIRE(akz_signal_read_csv(path.c_str(), &back) == AKZ_OK);
  const Signal sback(back);
  double dev = 1.0;
  REQUIRE(akz_signal_max_deviation(x.get(), sback.get(), &dev) == AKZ_OK);
  CHECK(dev == 0.0);
  const auto devpath = temp_path("akz_capi_dev.csv");
  CHECK(akz_signal_write_deviation_csv(x.get(), sback.get(), devpath.c_str()) == AKZ_OK);
  std::filesystem::remove(path);
  std::filesystem::remove(devpath);

  CHECK(akz_signal_read_csv("/nonexistent/dir/x.csv", &back) == AKZ_ERR_IO);
  const auto bad = temp_path("akz_capi_bad.csv");
  std::ofstream(bad) << "t,re1,im1,re2,im2\n0,1,0,0\n";
  CHECK(akz_signal_read_csv(bad.c_str(), &back) == AKZ_ERR_PARSE);
  std::filesystem::remove(bad);
}

TEST_CASE("suites through the C API") {
  akz_verify_options opts;
  akz_verify_options_default(&opts);
  CHECK(opts.omega == 1.0);
  char* json = nullptr;
  int passed = 0;
  REQUIRE(akz_verify(&opts, &json, &passed) == AKZ_OK);
  CHECK(passed == 1);
  CHECK(nlohmann::json::parse(json)["all_pass"] == true);
  akz_string_free(json);
  opts.inject_fault = 1;
  REQUIRE(akz_verify(&opts, &json, &passed) == AKZ_OK);
  CHECK(passed == 0);
  akz_string_free(json);
  opts.omega = -1.0;
  CHECK(akz_verify(&opts, &json, &passed) == AKZ_ERR_INVALID_ARGUMENT);

  const size_t sizes[] = {2, 64};
  const akz_bench_options b{1.0, -8.0, 8.0, sizes, 2, 30.0};
  char* csv = nullptr;
  REQUIRE(akz_bench(&b, &csv) == AKZ_OK);
  const std::string text(csv);
  akz_string_free(csv);
  CHECK(text.rfind("n,direct_seconds", 0) == 0);
  CHECK(text.find("\n2,") != std::string::npos);
  CHECK(text.find("\n64,") != std::string::npos);
}
