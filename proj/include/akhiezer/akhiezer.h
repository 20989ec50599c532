/* Copyright The Akhiezer Transform Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the Akhiezer transform library. Every function that can
 * fail returns an akz_status; on failure akz_last_error() describes the
 * problem for the calling thread. Objects are opaque and owned by the
 * caller once created.
 */
#ifndef AKHIEZER_AKHIEZER_H_
#define AKHIEZER_AKHIEZER_H_

#include <stddef.h>
#include <stdint.h>

#if defined(AKZ_BUILDING_LIBRARY)
#define AKZ_API __attribute__((visibility("default")))
#else
#define AKZ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum akz_status {
  AKZ_OK = 0,
  AKZ_ERR_INVALID_ARGUMENT = 1,
  AKZ_ERR_DOMAIN = 2,
  AKZ_ERR_GRID_MISMATCH = 3,
  AKZ_ERR_QUADRATURE = 4,
  AKZ_ERR_OVERFLOW = 5,
  AKZ_ERR_IO = 6,
  AKZ_ERR_PARSE = 7,
  AKZ_ERR_INTERNAL = 99
} akz_status;

typedef enum akz_operator {
  AKZ_OP_C = 0,
  AKZ_OP_S = 1,
  AKZ_OP_PHI = 2,
  AKZ_OP_PSI = 3,
  AKZ_OP_HILBERT = 4 /* direct method only */
} akz_operator;

typedef enum akz_method {
  AKZ_METHOD_SPECTRAL = 0,
  AKZ_METHOD_DIRECT = 1
} akz_method;

typedef enum akz_signal_kind {
  AKZ_SIGNAL_GAUSSIAN = 0,
  AKZ_SIGNAL_BUMP = 1,
  AKZ_SIGNAL_SECH_POWER = 2,
  AKZ_SIGNAL_GROWN_BUMP = 3,
  AKZ_SIGNAL_BANDLIMITED_NOISE = 4
} akz_signal_kind;

/* Two-component complex signal on a uniform grid. */
typedef struct akz_signal akz_signal;
/* FFT plan for one omega and grid; immutable, shareable across threads. */
typedef struct akz_plan akz_plan;

typedef struct akz_signal_spec {
  akz_signal_kind kind;
  double center;
  double width;
  double amplitude;
  double power;     /* sech_power exponent */
  double growth;    /* grown_bump rate */
  double bandwidth; /* noise highest angular frequency */
  int modes;        /* noise sinusoids */
  uint64_t seed;
} akz_signal_spec;

typedef struct akz_verify_options {
  double omega;
  double sigma;
  uint64_t seed;
  int inject_fault; /* nonzero: corrupt the S multiplier table */
} akz_verify_options;

typedef struct akz_bench_options {
  double omega;
  double t_min;
  double t_max;
  const size_t* sizes;
  size_t size_count;
  double timeout_seconds;
} akz_bench_options;

AKZ_API const char* akz_version(void);
AKZ_API const char* akz_status_name(akz_status status);
/* Message of the last failing call on this thread; "" if none. */
AKZ_API const char* akz_last_error(void);

AKZ_API void akz_signal_spec_default(akz_signal_spec* spec);
AKZ_API akz_status akz_signal_kind_parse(const char* name, akz_signal_kind* out);

/* Kernels and multipliers. */
AKZ_API akz_status akz_kernel_c(double omega, double xi, double* out);
AKZ_API akz_status akz_kernel_s(double omega, double xi, double* out);
AKZ_API akz_status akz_kernel_r(double omega, double xi, double* out);
/* c_hat = sech(pi lambda / 2 omega), s_hat = i * s_hat_imag. */
AKZ_API akz_status akz_multipliers(double omega, double lambda, double* c_hat,
                                   double* s_hat_imag);

/* Signals. The grid is t_k = t_min + k (t_max - t_min)/(n - 1). */
AKZ_API akz_status akz_signal_create(double t_min, double t_max, size_t n, akz_signal** out);
/* Component 1 from `first`; component 2 from `second` or zero if NULL. */
AKZ_API akz_status akz_signal_generate(double t_min, double t_max, size_t n,
                                       const akz_signal_spec* first,
                                       const akz_signal_spec* second, akz_signal** out);
AKZ_API akz_status akz_signal_read_csv(const char* path, akz_signal** out);
/* Atomic: either the whole file is written or nothing is. */
AKZ_API akz_status akz_signal_write_csv(const akz_signal* signal, const char* path);
AKZ_API akz_status akz_signal_grid(const akz_signal* signal, double* t_min, double* delta,
                                   size_t* n);
/* component is 1 or 2; re and im hold n values each. */
AKZ_API akz_status akz_signal_get(const akz_signal* signal, int component, double* re,
                                  double* im);
AKZ_API akz_status akz_signal_set(akz_signal* signal, int component, const double* re,
                                  const double* im);
/* sqrt(delta sum (|x1|^2 + |x2|^2) e^{-2 sigma |t|}). */
AKZ_API akz_status akz_signal_norm(const akz_signal* signal, double sigma, double* out);
/* Max node-wise |a - b| over both components. */
AKZ_API akz_status akz_signal_max_deviation(const akz_signal* a, const akz_signal* b,
                                            double* out);
/* t,dev1,dev2 file of node-wise |a - b|. */
AKZ_API akz_status akz_signal_write_deviation_csv(const akz_signal* a, const akz_signal* b,
                                                  const char* path);
AKZ_API void akz_signal_destroy(akz_signal* signal);

/* Plans and transforms. */
/* Plan on the grid of `like`. */
AKZ_API akz_status akz_plan_create(double omega, const akz_signal* like, akz_plan** out);
AKZ_API akz_status akz_plan_create_grid(double omega, double t_min, double t_max, size_t n,
                                        akz_plan** out);
AKZ_API akz_status akz_plan_padded_length(const akz_plan* plan, size_t* out);
AKZ_API void akz_plan_destroy(akz_plan* plan);
/* Scalar operators act on each component separately. */
AKZ_API akz_status akz_apply(const akz_plan* plan, akz_operator op, akz_method method,
                             const akz_signal* in, akz_signal** out);
/* ||Psi Phi x - x||_sigma / ||x||_sigma through the spectral path. */
AKZ_API akz_status akz_roundtrip_error(const akz_plan* plan, const akz_signal* x, double sigma,
                                       double* out);

/* Suites. Returned strings are released with akz_string_free. */
AKZ_API void akz_verify_options_default(akz_verify_options* opts);
AKZ_API akz_status akz_verify(const akz_verify_options* opts, char** report_json,
                              int* all_passed);
AKZ_API akz_status akz_bench(const akz_bench_options* opts, char** csv);
AKZ_API void akz_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* AKHIEZER_AKHIEZER_H_ */
