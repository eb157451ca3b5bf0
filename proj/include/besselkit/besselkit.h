#ifndef BESSELKIT_H
#define BESSELKIT_H

////////////////////////////////////////////////////////////////////////////////
//                                                                            //
//  This file is part of besselkit                                            //
//                                                                            //
//  Copyright 2026 besselkit developers                                       //
//                                                                            //
//  Licensed under the Apache License, Version 2.0 (the "License");           //
//  you may not use this file except in compliance with the License.          //
//  You may obtain a copy of the License at                                   //
//                                                                            //
//      http://www.apache.org/licenses/LICENSE-2.0                            //
//                                                                            //
//  Unless required by applicable law or agreed to in writing, software       //
//  distributed under the License is distributed on an "AS IS" BASIS,         //
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.  //
//  See the License for the specific language governing permissions and       //
//  limitations under the License.                                            //
//                                                                            //
////////////////////////////////////////////////////////////////////////////////

#include "besselkit/specfun.hpp"


/* C interface to besselkit. All handles are opaque. Every function that can
 * fail returns a bk_status; the message for the last failure on the calling
 * thread is available from bk_last_error(). Strings returned through char**
 * out-parameters are owned by the caller and released with bk_string_free. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define BK_API __declspec(dllexport)
#else
#define BK_API __attribute__((visibility("default")))
#endif

typedef enum bk_status {
  BK_OK = 0,
  BK_ERR_UNKNOWN = 2,    /* unknown identity id or function name */
  BK_ERR_ARGUMENT = 3,   /* malformed arguments, options or input text */
  BK_ERR_DOMAIN = 4,     /* argument or parameter point outside the admissible region */
  BK_ERR_OVERFLOW = 5,
  BK_ERR_INTERNAL = 6
} bk_status;

typedef struct bk_report bk_report;

typedef struct bk_eval_result {
  double value;
  double abs_err;
  int converged;
  unsigned long long terms;
} bk_eval_result;

typedef struct bk_verify_options {
  double rel_tol;          /* <= 0: per-difficulty defaults */
  double abs_floor;        /* <= 0: default floor */
  unsigned jobs;           /* worker threads, >= 1 */
  size_t max_terms;        /* 0: module default */
  size_t max_cells;        /* 0: module default */
} bk_verify_options;

BK_API const char* bk_version(void);
BK_API const char* bk_last_error(void);
BK_API void bk_string_free(char* s);

/* Manifest. */
BK_API size_t bk_identity_count(void);
BK_API bk_status bk_identity_id(size_t index, const char** id);
BK_API bk_status bk_identity_exists(const char* id, int* exists);
/* format: "text" | "json" | "csv"; difficulty may be NULL. */
BK_API bk_status bk_manifest(const char* format, const char* difficulty, char** out);

/* Scalar kernels by name, e.g. "bessel_k" with args {nu, x}. */
BK_API bk_status bk_eval(const char* name, const double* args, size_t nargs, bk_eval_result* out);
/* Space-separated list of names accepted by bk_eval. */
BK_API const char* bk_eval_names(void);

BK_API void bk_verify_options_init(bk_verify_options* opt);

/* id may be "all" (grid_csv must then be NULL). grid_csv, when given, is the
 * text of a CSV grid file. */
BK_API bk_status bk_verify(const char* id, const char* grid_csv, const bk_verify_options* opt, bk_report** out);

BK_API void bk_report_free(bk_report* r);
BK_API bk_status bk_report_counts(const bk_report* r, size_t* pass, size_t* fail, size_t* inconclusive);
BK_API bk_status bk_report_serialize(const bk_report* r, const char* format, char** out);
BK_API bk_status bk_report_parse_json(const char* json, bk_report** out);

#ifdef __cplusplus
}
#endif

#endif
