// Copyright The Akhiezer Transform Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 success, 1 invariant failure, 2 input error.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "akhiezer/akhiezer.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SignalDeleter {
  void operator()(akz_signal* s) const { akz_signal_destroy(s); }
};
struct PlanDeleter {
  void operator()(akz_plan* p) const { akz_plan_destroy(p); }
};
using SignalPtr = std::unique_ptr<akz_signal, SignalDeleter>;
using PlanPtr = std::unique_ptr<akz_plan, PlanDeleter>;

// Numerical failures are invariant failures; everything else is bad input.
void check(akz_status st) {
  if (st == AKZ_OK) return;
  std::string msg = std::string(akz_status_name(st)) + ": " + akz_last_error();
  if (st == AKZ_ERR_QUADRATURE || st == AKZ_ERR_INTERNAL) throw InvariantError(msg);
  throw InputError(msg);
}

struct GridArg {
  double t_min = -20.0;
  double t_max = 20.0;
  std::size_t n = 4096;
};

GridArg parse_grid(const std::string& text) {
  GridArg g;
  std::istringstream in(text);
  char c1 = 0, c2 = 0;
  long long n = 0;
  if (!(in >> g.t_min >> c1 >> g.t_max >> c2 >> n) || c1 != ':' || c2 != ':' ||
      !(in >> std::ws).eof()) {
    throw InputError("--grid expects tmin:tmax:n, got '" + text + "'");
  }
  if (n < 2) throw InputError("grid needs n >= 2");
  if (!(g.t_max > g.t_min) || !std::isfinite(g.t_min) || !std::isfinite(g.t_max)) {
    throw InputError("grid needs finite t_max > t_min");
  }
  g.n = static_cast<std::size_t>(n);
  return g;
}

struct RunConfig {
  double omega = 1.0;
  double sigma = 0.0;
  std::string grid = "-20:20:4096";
  std::string method = "spectral";
  std::string transform = "C";
  std::uint64_t seed = 1;
  std::string out;
  std::optional<double> tolerance;

  void validate() const {
    if (!(omega > 0.0) || !std::isfinite(omega)) throw InputError("omega must be positive");
    if (!(sigma >= 0.0) || !(sigma < omega)) throw InputError("sigma must satisfy 0 <= sigma < omega");
    parse_grid(grid);
  }
};

struct SignalArgs {
  std::string kind = "gaussian";
  std::string kind2;
  std::string input;
  double center = 0.0;
  double width = 1.0;
  double amplitude = 1.0;
  double power = 2.0;
  double growth = 0.0;
  double bandwidth = 4.0;
  int modes = 16;
};

akz_signal_spec make_spec(const SignalArgs& a, const std::string& kind, std::uint64_t seed) {
  akz_signal_spec spec;
  akz_signal_spec_default(&spec);
  check(akz_signal_kind_parse(kind.c_str(), &spec.kind));
  spec.center = a.center;
  spec.width = a.width;
  spec.amplitude = a.amplitude;
  spec.power = a.power;
  spec.growth = a.growth;
  spec.bandwidth = a.bandwidth;
  spec.modes = a.modes;
  spec.seed = seed;
  return spec;
}

SignalPtr load_signal(const RunConfig& cfg, const SignalArgs& a) {
  akz_signal* raw = nullptr;
  if (!a.input.empty()) {
    check(akz_signal_read_csv(a.input.c_str(), &raw));
    return SignalPtr(raw);
  }
  const bool grown = a.kind == "grown_bump" || a.kind2 == "grown_bump";
  if (grown && a.growth > 0.0 && !(a.growth < cfg.sigma)) {
    throw InputError("grown_bump needs growth < sigma");
  }
  const GridArg g = parse_grid(cfg.grid);
  const akz_signal_spec first = make_spec(a, a.kind, cfg.seed);
  std::optional<akz_signal_spec> second;
  if (!a.kind2.empty()) second = make_spec(a, a.kind2, cfg.seed + 1);
  check(akz_signal_generate(g.t_min, g.t_max, g.n, &first, second ? &*second : nullptr, &raw));
  return SignalPtr(raw);
}

akz_operator parse_operator(const std::string& name) {
  static const std::map<std::string, akz_operator> ops = {
      {"C", AKZ_OP_C}, {"S", AKZ_OP_S}, {"phi", AKZ_OP_PHI}, {"psi", AKZ_OP_PSI},
      {"hilbert", AKZ_OP_HILBERT}};
  return ops.at(name);
}

// Cross-path budget per operator when no override is given.
double default_tolerance(akz_operator op) { return op == AKZ_OP_C ? 1e-6 : 1e-4; }

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out.flush()) throw InputError("cannot write '" + path + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw InputError("cannot write '" + path + "'");
  }
}

int cmd_generate(const RunConfig& cfg, const SignalArgs& a) {
  cfg.validate();
  if (cfg.out.empty()) throw InputError("--out is required");
  const SignalPtr x = load_signal(cfg, a);
  check(akz_signal_write_csv(x.get(), cfg.out.c_str()));
  return kExitOk;
}

int cmd_apply(const RunConfig& cfg, const SignalArgs& a, std::string deviation_out) {
  cfg.validate();
  if (cfg.out.empty()) throw InputError("--out is required");
  const akz_operator op = parse_operator(cfg.transform);
  const SignalPtr x = load_signal(cfg, a);
  akz_plan* raw_plan = nullptr;
  check(akz_plan_create(cfg.omega, x.get(), &raw_plan));
  const PlanPtr plan(raw_plan);

  auto run = [&](akz_method m) {
    akz_signal* y = nullptr;
    check(akz_apply(plan.get(), op, m, x.get(), &y));
    return SignalPtr(y);
  };

  if (cfg.method == "spectral" || cfg.method == "direct") {
    const SignalPtr y = run(cfg.method == "direct" ? AKZ_METHOD_DIRECT : AKZ_METHOD_SPECTRAL);
    check(akz_signal_write_csv(y.get(), cfg.out.c_str()));
    return kExitOk;
  }

  // both: spectral result is the output, the direct path is the oracle.
  if (op == AKZ_OP_HILBERT) throw InputError("hilbert supports --method direct only");
  const SignalPtr direct = run(AKZ_METHOD_DIRECT);
  const SignalPtr spectral = run(AKZ_METHOD_SPECTRAL);
  double dev = 0.0;
  check(akz_signal_max_deviation(spectral.get(), direct.get(), &dev));
  if (deviation_out.empty()) deviation_out = cfg.out + ".deviation.csv";
  check(akz_signal_write_csv(spectral.get(), cfg.out.c_str()));
  check(akz_signal_write_deviation_csv(spectral.get(), direct.get(), deviation_out.c_str()));

  const double tol = cfg.tolerance.value_or(default_tolerance(op));
  const bool ok = dev <= tol;
  std::printf("transform=%s max_deviation=%.3e tolerance=%.1e %s\n", cfg.transform.c_str(), dev,
              tol, ok ? "PASS" : "FAIL");
  return ok ? kExitOk : kExitInvariant;
}

int cmd_verify(const RunConfig& cfg, bool inject_fault) {
  cfg.validate();
  akz_verify_options opts;
  akz_verify_options_default(&opts);
  opts.omega = cfg.omega;
  opts.sigma = cfg.sigma;
  opts.seed = cfg.seed;
  opts.inject_fault = inject_fault ? 1 : 0;
  char* json = nullptr;
  int passed = 0;
  check(akz_verify(&opts, &json, &passed));
  const std::string report(json);
  akz_string_free(json);
  if (cfg.out.empty()) {
    std::cout << report;
  } else {
    write_text(cfg.out, report);
  }
  // The names of failing checks go to stderr so stdout stays valid JSON.
  const std::string key = "\"name\": \"";
  for (std::size_t pos = report.find(key); pos != std::string::npos;
       pos = report.find(key, pos + 1)) {
    const std::size_t start = pos + key.size();
    const std::string name = report.substr(start, report.find('"', start) - start);
    const std::size_t pass_at = report.find("\"pass\": ", start);
    if (report.compare(pass_at + 8, 5, "false") == 0) std::cerr << "FAIL " << name << '\n';
  }
  std::cerr << (passed ? "all checks passed" : "verification failed") << '\n';
  return passed ? kExitOk : kExitInvariant;
}

int cmd_bench(const RunConfig& cfg, const std::vector<std::size_t>& sizes, double timeout) {
  cfg.validate();
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] < sizes[i - 1]) throw InputError("--sizes must be ascending");
  }
  const GridArg g = parse_grid(cfg.grid);
  akz_bench_options opts{cfg.omega, g.t_min, g.t_max, sizes.data(), sizes.size(), timeout};
  char* csv = nullptr;
  check(akz_bench(&opts, &csv));
  const std::string table(csv);
  akz_string_free(csv);
  write_text(cfg.out, table);
  return kExitOk;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--omega", cfg.omega, "kernel parameter omega > 0")
      ->envname("AKHIEZER_OMEGA")
      ->capture_default_str();
  sub->add_option("--sigma", cfg.sigma, "weight exponent, 0 <= sigma < omega")
      ->envname("AKHIEZER_SIGMA")
      ->capture_default_str();
  sub->add_option("--grid", cfg.grid, "tmin:tmax:n (use --grid=... for negative tmin)")
      ->envname("AKHIEZER_GRID")
      ->capture_default_str();
  sub->add_option("--seed", cfg.seed, "random seed")->envname("AKHIEZER_SEED")->capture_default_str();
  sub->add_option("--out", cfg.out, "output path")->envname("AKHIEZER_OUT");
}

void add_signal(CLI::App* sub, SignalArgs& a) {
  const auto kinds =
      CLI::IsMember({"gaussian", "bump", "sech_power", "grown_bump", "bandlimited_noise"});
  sub->add_option("--signal", a.kind, "first component kind")->check(kinds)->capture_default_str();
  sub->add_option("--signal2", a.kind2, "second component kind (default zero)")->check(kinds);
  sub->add_option("--input", a.input, "read the signal from a CSV file instead");
  sub->add_option("--center", a.center)->capture_default_str();
  sub->add_option("--width", a.width)->capture_default_str();
  sub->add_option("--amplitude", a.amplitude)->capture_default_str();
  sub->add_option("--power", a.power)->capture_default_str();
  sub->add_option("--growth", a.growth)->capture_default_str();
  sub->add_option("--bandwidth", a.bandwidth)->capture_default_str();
  sub->add_option("--modes", a.modes)->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Akhiezer transform toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  SignalArgs sig;
  std::string deviation_out;
  bool inject_fault = false;
  std::vector<std::size_t> sizes = {256, 1024, 4096};
  double timeout = 120.0;

  auto* gen = app.add_subcommand("generate", "write a test signal as CSV");
  add_common(gen, cfg);
  add_signal(gen, sig);

  auto* apply = app.add_subcommand("apply", "apply C, S, phi, psi or hilbert to a signal");
  add_common(apply, cfg);
  add_signal(apply, sig);
  apply->add_option("--method", cfg.method)
      ->check(CLI::IsMember({"direct", "spectral", "both"}))
      ->envname("AKHIEZER_METHOD")
      ->capture_default_str();
  apply->add_option("--transform", cfg.transform)
      ->check(CLI::IsMember({"C", "S", "phi", "psi", "hilbert"}))
      ->envname("AKHIEZER_TRANSFORM")
      ->capture_default_str();
  apply->add_option("--deviation-out", deviation_out, "deviation CSV for --method both");
  apply->add_option("--tolerance", cfg.tolerance, "cross-path tolerance for --method both")
      ->envname("AKHIEZER_TOLERANCE");

  auto* ver = app.add_subcommand("verify", "run the invariant suite, JSON report");
  add_common(ver, cfg);
  ver->add_flag("--inject-fault", inject_fault, "corrupt the S multiplier table (test hook)");

  auto* ben = app.add_subcommand("bench", "time direct against spectral paths");
  add_common(ben, cfg);
  ben->add_option("--sizes", sizes, "grid sizes, ascending")->delimiter(',');
  ben->add_option("--timeout", timeout, "seconds per size for the direct path")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  if (*ben && ben->count("--grid") == 0 && std::getenv("AKHIEZER_GRID") == nullptr) {
    cfg.grid = "-8:8:256";
  }

  try {
    if (*gen) return cmd_generate(cfg, sig);
    if (*apply) return cmd_apply(cfg, sig, deviation_out);
    if (*ver) return cmd_verify(cfg, inject_fault);
    return cmd_bench(cfg, sizes, timeout);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InvariantError& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return kExitInvariant;
  }
}
