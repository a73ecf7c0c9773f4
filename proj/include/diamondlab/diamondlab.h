// Copyright 2026 The diamondlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DIAMONDLAB_DIAMONDLAB_H_
#define DIAMONDLAB_DIAMONDLAB_H_

/* C interface to diamondlab: error measures of quantum channels (average
 * error rate, unitarity, diamond distance), parameter sweeps, verification
 * suites and certificate files.
 *
 * Every function returns a dl_status. On failure a description is available
 * from dl_last_error() on the same thread until the next call. Strings
 * returned through char** out-parameters are owned by the caller and must be
 * released with dl_string_free. Handles are released with their _free
 * function; passing NULL to any _free function is a no-op. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DL_API __declspec(dllexport)
#else
#define DL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dl_status {
  DL_OK = 0,
  DL_ERR_VERIFICATION = 1,
  DL_ERR_INVALID_ARGUMENT = 2,
  DL_ERR_INVALID_CHANNEL = 3,
  DL_ERR_IO = 4,
  DL_ERR_NUMERICAL = 5,
  DL_ERR_INTERNAL = 6
} dl_status;

typedef struct dl_channel dl_channel;
typedef struct dl_model dl_model;

typedef enum dl_solve_status {
  DL_SOLVE_OPTIMAL = 0,
  DL_SOLVE_MAX_ITER = 1,
  DL_SOLVE_INFEASIBLE_INPUT = 2
} dl_solve_status;

typedef struct dl_diamond {
  double value;  /* midpoint of [lower, upper] */
  double lower;  /* certified primal objective */
  double upper;  /* certified dual objective */
  double gap;
  int iterations;
  dl_solve_status status;
} dl_diamond;

typedef struct dl_metrics_options {
  int sdp;              /* nonzero: solve for the diamond distance */
  int monte_carlo;      /* nonzero: add Haar Monte-Carlo estimates */
  size_t mc_samples;
  uint64_t seed;
  unsigned threads;
  double kappa;         /* scaling-witness threshold */
  double tolerance;     /* diamond-distance gap tolerance */
  int full_space;       /* nonzero: leakage models over the full space */
} dl_metrics_options;

DL_API const char* dl_version(void);
DL_API const char* dl_last_error(void);
DL_API const char* dl_status_string(dl_status status);
DL_API void dl_string_free(char* s);

/* Channels. `kraus` holds `count` row-major dim x dim matrices with
 * interleaved real and imaginary parts: 2 * count * dim * dim doubles. */
DL_API dl_status dl_channel_from_kraus(size_t dim, size_t count, const double* kraus, dl_channel** out);
/* JSON text { "dim": d, "kraus": [ [[ [re, im], ... ], ...], ... ] }. */
DL_API dl_status dl_channel_from_json(const char* text, dl_channel** out);
DL_API dl_status dl_channel_load(const char* path, dl_channel** out);
DL_API void dl_channel_free(dl_channel* c);
DL_API dl_status dl_channel_dim(const dl_channel* c, size_t* out);
DL_API dl_status dl_channel_is_trace_preserving(const dl_channel* c, int* out);

DL_API dl_status dl_avg_fidelity(const dl_channel* c, double* out);
DL_API dl_status dl_avg_error_rate(const dl_channel* c, double* out);
DL_API dl_status dl_unitarity(const dl_channel* c, double* out);
/* Diamond distance between `c` and `reference`; a NULL reference means the
 * identity channel. */
DL_API dl_status dl_diamond_distance(const dl_channel* c, const dl_channel* reference, double tolerance,
                                     dl_diamond* out);

/* Named models: cd, ad, il, il2, cl, rot, cd2 with keyed real parameters. */
DL_API dl_status dl_model_create(const char* name, size_t count, const char* const* keys, const double* values,
                                 dl_model** out);
DL_API void dl_model_free(dl_model* m);
/* Borrowed handle to the model's channel; valid while the model lives. */
DL_API dl_status dl_model_channel(const dl_model* m, const dl_channel** out);

DL_API void dl_metrics_options_default(dl_metrics_options* opts);
/* JSON metric reports; opts may be NULL for defaults. */
DL_API dl_status dl_model_metrics_json(const dl_model* m, const dl_metrics_options* opts, char** out);
DL_API dl_status dl_channel_metrics_json(const dl_channel* c, const dl_metrics_options* opts, char** out);
/* Human-readable rendering of a JSON metric report. */
DL_API dl_status dl_metrics_table(const char* report_json, char** out);

/* Sweeps. `config_json` follows { "model", "fixed", "axis1", "axis2",
 * "outputs", "evaluator", "threads", "tolerance" }; axes are { "param",
 * "min", "max", "steps", "scale" }. Presets are "fig1" and "fig2"; the
 * returned JSON can be edited and passed to dl_sweep_csv. */
DL_API dl_status dl_sweep_preset(const char* name, char** config_json);
DL_API dl_status dl_sweep_csv(const char* config_json, char** csv);

/* Verification suites "golden", "fuzz" or "all". Writes a JSON report and
 * returns DL_ERR_VERIFICATION when any property is violated. */
DL_API dl_status dl_verify(const char* suite, size_t samples, uint64_t seed, double tolerance_scale,
                           unsigned threads, char** report_json);

/* Certificates: emit a JSON bundle for a model, or re-check one without
 * running a solver. Checking returns DL_ERR_VERIFICATION when any residual
 * exceeds `tolerance` (<= 0 selects the default 1e-8). */
DL_API dl_status dl_certify_model(const dl_model* m, double tolerance, char** certificate_json);
DL_API dl_status dl_certificate_check(const char* certificate_json, double tolerance, char** report_json);

/* Writes text to a file, replacing its contents. */
DL_API dl_status dl_write_file(const char* path, const char* text);
DL_API dl_status dl_read_file(const char* path, char** text);

#ifdef __cplusplus
}
#endif

#endif /* DIAMONDLAB_DIAMONDLAB_H_ */
