// Copyright The Akhiezer Transform Authors
// SPDX-License-Identifier: Apache-2.0

#include "akhiezer/akhiezer.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "akhiezer/bench.hpp"
#include "akhiezer/csv_io.hpp"
#include "akhiezer/error.hpp"
#include "akhiezer/quadrature.hpp"
#include "akhiezer/signals.hpp"
#include "akhiezer/spectral.hpp"
#include "akhiezer/transform.hpp"
#include "akhiezer/verify.hpp"

struct akz_signal {
  akhiezer::VectorSignal value;
};

struct akz_plan {
  akhiezer::transform::TransformPlan value;
};

namespace {

using namespace akhiezer;

thread_local std::string last_error;

akz_status fail(akz_status status, const char* message) {
  last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
akz_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return AKZ_OK;
  } catch (const Error& e) {
    return fail(static_cast<akz_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(AKZ_ERR_OVERFLOW, "out of memory");
  } catch (const std::exception& e) {
    return fail(AKZ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(AKZ_ERR_INTERNAL, "unknown error");
  }
}

void require(bool cond, const char* what) {
  if (!cond) throw Error(ErrorCode::kInvalidArgument, what);
}

signals::SignalSpec to_spec(const akz_signal_spec& s) {
  require(s.kind >= AKZ_SIGNAL_GAUSSIAN && s.kind <= AKZ_SIGNAL_BANDLIMITED_NOISE,
          "unknown signal kind");
  signals::SignalSpec out;
  out.kind = static_cast<signals::Kind>(s.kind);
  out.center = s.center;
  out.width = s.width;
  out.amplitude = s.amplitude;
  out.power = s.power;
  out.growth = s.growth;
  out.bandwidth = s.bandwidth;
  out.modes = s.modes;
  out.seed = s.seed;
  return out;
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

GridSignal& component(VectorSignal& x, int c) {
  require(c == 1 || c == 2, "component must be 1 or 2");
  return c == 1 ? x.x1 : x.x2;
}

GridSignal hilbert_direct(const GridSignal& f) {
  return GridSignal(f.grid(), quadrature::hilbert_pv(f, quadrature::grid_nodes(f.grid())).values);
}

}  // namespace

extern "C" {

const char* akz_version(void) { return "1.0.0"; }

const char* akz_status_name(akz_status status) {
  switch (status) {
    case AKZ_OK: return "ok";
    case AKZ_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case AKZ_ERR_DOMAIN: return "domain";
    case AKZ_ERR_GRID_MISMATCH: return "grid_mismatch";
    case AKZ_ERR_QUADRATURE: return "quadrature";
    case AKZ_ERR_OVERFLOW: return "overflow";
    case AKZ_ERR_IO: return "io";
    case AKZ_ERR_PARSE: return "parse";
    case AKZ_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* akz_last_error(void) { return last_error.c_str(); }

void akz_signal_spec_default(akz_signal_spec* spec) {
  if (spec == nullptr) return;
  const signals::SignalSpec d;
  *spec = akz_signal_spec{static_cast<akz_signal_kind>(d.kind), d.center, d.width, d.amplitude,
                          d.power, d.growth, d.bandwidth, d.modes, d.seed};
}

akz_status akz_signal_kind_parse(const char* name, akz_signal_kind* out) {
  return guarded([&] {
    require(name != nullptr && out != nullptr, "null argument");
    *out = static_cast<akz_signal_kind>(signals::parse_kind(name));
  });
}

akz_status akz_kernel_c(double omega, double xi, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = kernels::eval_C(OmegaParam(omega), xi);
  });
}

akz_status akz_kernel_s(double omega, double xi, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = kernels::eval_S(OmegaParam(omega), xi);
  });
}

akz_status akz_kernel_r(double omega, double xi, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = kernels::eval_r(OmegaParam(omega), xi);
  });
}

akz_status akz_multipliers(double omega, double lambda, double* c_hat, double* s_hat_imag) {
  return guarded([&] {
    require(c_hat != nullptr && s_hat_imag != nullptr, "null output");
    require(std::isfinite(lambda), "lambda must be finite");
    const OmegaParam w(omega);
    *c_hat = spectral::c_hat(w, lambda);
    *s_hat_imag = spectral::s_hat(w, lambda).imag();
  });
}

akz_status akz_signal_create(double t_min, double t_max, size_t n, akz_signal** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const GridDesc g = GridDesc::from_range(t_min, t_max, n);
    *out = new akz_signal{VectorSignal(GridSignal(g), GridSignal(g))};
  });
}

akz_status akz_signal_generate(double t_min, double t_max, size_t n,
                               const akz_signal_spec* first, const akz_signal_spec* second,
                               akz_signal** out) {
  return guarded([&] {
    require(out != nullptr && first != nullptr, "null argument");
    const GridDesc g = GridDesc::from_range(t_min, t_max, n);
    GridSignal a = signals::generate(g, to_spec(*first));
    GridSignal b = second ? signals::generate(g, to_spec(*second)) : GridSignal(g);
    *out = new akz_signal{VectorSignal(std::move(a), std::move(b))};
  });
}

akz_status akz_signal_read_csv(const char* path, akz_signal** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = new akz_signal{io::read_csv_file(path)};
  });
}

akz_status akz_signal_write_csv(const akz_signal* signal, const char* path) {
  return guarded([&] {
    require(signal != nullptr && path != nullptr, "null argument");
    io::write_csv_file(path, signal->value);
  });
}

akz_status akz_signal_grid(const akz_signal* signal, double* t_min, double* delta, size_t* n) {
  return guarded([&] {
    require(signal != nullptr, "null signal");
    const GridDesc& g = signal->value.grid();
    if (t_min) *t_min = g.t_min;
    if (delta) *delta = g.delta;
    if (n) *n = g.n;
  });
}

akz_status akz_signal_get(const akz_signal* signal, int c, double* re, double* im) {
  return guarded([&] {
    require(signal != nullptr && re != nullptr && im != nullptr, "null argument");
    const GridSignal& x = component(const_cast<VectorSignal&>(signal->value), c);
    for (std::size_t k = 0; k < x.size(); ++k) {
      re[k] = x[k].real();
      im[k] = x[k].imag();
    }
  });
}

akz_status akz_signal_set(akz_signal* signal, int c, const double* re, const double* im) {
  return guarded([&] {
    require(signal != nullptr && re != nullptr && im != nullptr, "null argument");
    GridSignal& x = component(signal->value, c);
    std::vector<cdouble> v(x.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = cdouble(re[k], im[k]);
    x = GridSignal(x.grid(), std::move(v));  // validates finiteness first
  });
}

akz_status akz_signal_norm(const akz_signal* signal, double sigma, double* out) {
  return guarded([&] {
    require(signal != nullptr && out != nullptr, "null argument");
    *out = transform::weighted_norm(signal->value, SigmaParam(sigma));
  });
}

akz_status akz_signal_max_deviation(const akz_signal* a, const akz_signal* b, double* out) {
  return guarded([&] {
    require(a != nullptr && b != nullptr && out != nullptr, "null argument");
    require_same_grid(a->value.grid(), b->value.grid());
    double d = 0.0;
    for (std::size_t k = 0; k < a->value.grid().n; ++k) {
      d = std::max({d, std::abs(a->value.x1[k] - b->value.x1[k]),
                    std::abs(a->value.x2[k] - b->value.x2[k])});
    }
    *out = d;
  });
}

akz_status akz_signal_write_deviation_csv(const akz_signal* a, const akz_signal* b,
                                          const char* path) {
  return guarded([&] {
    require(a != nullptr && b != nullptr && path != nullptr, "null argument");
    io::write_deviation_csv_file(path, a->value, b->value);
  });
}

void akz_signal_destroy(akz_signal* signal) { delete signal; }

akz_status akz_plan_create(double omega, const akz_signal* like, akz_plan** out) {
  return guarded([&] {
    require(like != nullptr && out != nullptr, "null argument");
    *out = new akz_plan{transform::TransformPlan(OmegaParam(omega), like->value.grid())};
  });
}

akz_status akz_plan_create_grid(double omega, double t_min, double t_max, size_t n,
                                akz_plan** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = new akz_plan{
        transform::TransformPlan(OmegaParam(omega), GridDesc::from_range(t_min, t_max, n))};
  });
}

akz_status akz_plan_padded_length(const akz_plan* plan, size_t* out) {
  return guarded([&] {
    require(plan != nullptr && out != nullptr, "null argument");
    *out = plan->value.padded_length();
  });
}

void akz_plan_destroy(akz_plan* plan) { delete plan; }

akz_status akz_apply(const akz_plan* plan, akz_operator op, akz_method method,
                     const akz_signal* in, akz_signal** out) {
  return guarded([&] {
    require(plan != nullptr && in != nullptr && out != nullptr, "null argument");
    require(method == AKZ_METHOD_SPECTRAL || method == AKZ_METHOD_DIRECT, "unknown method");
    require_same_grid(plan->value.grid(), in->value.grid());
    if (op == AKZ_OP_HILBERT) {
      require(method == AKZ_METHOD_DIRECT, "the Hilbert transform has no spectral path");
      *out = new akz_signal{
          VectorSignal(hilbert_direct(in->value.x1), hilbert_direct(in->value.x2))};
      return;
    }
    require(op >= AKZ_OP_C && op <= AKZ_OP_PSI, "unknown operator");
    const auto o = static_cast<transform::Operator>(op);
    *out = new akz_signal{method == AKZ_METHOD_SPECTRAL
                              ? transform::apply(plan->value, o, in->value)
                              : transform::apply_direct(plan->value.omega(), o, in->value)};
  });
}

akz_status akz_roundtrip_error(const akz_plan* plan, const akz_signal* x, double sigma,
                               double* out) {
  return guarded([&] {
    require(plan != nullptr && x != nullptr && out != nullptr, "null argument");
    *out = transform::roundtrip_error(plan->value, x->value, SigmaParam(sigma));
  });
}

void akz_verify_options_default(akz_verify_options* opts) {
  if (opts == nullptr) return;
  const verify::SuiteOptions d;
  *opts = akz_verify_options{d.omega, d.sigma, d.seed, 0};
}

akz_status akz_verify(const akz_verify_options* opts, char** report_json, int* all_passed) {
  return guarded([&] {
    require(opts != nullptr && report_json != nullptr, "null argument");
    verify::SuiteOptions o;
    o.omega = opts->omega;
    o.sigma = opts->sigma;
    o.seed = opts->seed;
    o.fault = opts->inject_fault ? verify::Fault::kMultiplierTable : verify::Fault::kNone;
    const verify::Report rep = verify::run_suite(o);
    *report_json = duplicate(rep.to_json());
    if (all_passed) *all_passed = rep.all_pass() ? 1 : 0;
  });
}

akz_status akz_bench(const akz_bench_options* opts, char** csv) {
  return guarded([&] {
    require(opts != nullptr && csv != nullptr, "null argument");
    require(opts->sizes != nullptr || opts->size_count == 0, "null sizes");
    bench::BenchOptions o;
    o.omega = opts->omega;
    o.t_min = opts->t_min;
    o.t_max = opts->t_max;
    o.sizes.assign(opts->sizes, opts->sizes + opts->size_count);
    if (opts->timeout_seconds > 0.0) o.timeout_seconds = opts->timeout_seconds;
    *csv = duplicate(bench::to_csv(bench::run(o)));
  });
}

void akz_string_free(char* s) { std::free(s); }

}  // extern "C"
