/* SPDX-License-Identifier: Apache-2.0 */
#ifndef ERGODIC_LAB_H
#define ERGODIC_LAB_H

/*
 * C interface to the ergodic-lab core.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns an erg_status; on
 * failure erg_last_error() describes the problem (thread-local, valid until
 * the next call on the same thread). Strings returned through char** out
 * parameters are heap allocated and must be released with erg_string_free.
 *
 * Rationals cross the boundary as canonical "p/q" text, locations as
 * "part:index" (part is cells, atoms or exceptional), and structured data
 * as JSON documents.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(ERGODIC_LAB_BUILDING)
#define ERG_API __attribute__((visibility("default")))
#else
#define ERG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum erg_status {
  ERG_OK = 0,
  ERG_ERR_INVALID_ARGUMENT = 1, /* null pointer, bad flag value */
  ERG_ERR_PARSE = 2,            /* malformed JSON, rational or descriptor */
  ERG_ERR_DOMAIN = 3,           /* location/model mismatch, invalid construction */
  ERG_ERR_PRECONDITION = 4,     /* e.g. synthesizing for a function in R_mu */
  ERG_ERR_REPRESENTATION = 5,   /* result not representable (period too long) */
  ERG_ERR_INTERNAL = 6
} erg_status;

typedef struct erg_function erg_function;
typedef struct erg_operator erg_operator;
typedef struct erg_certificate erg_certificate;

ERG_API const char* erg_last_error(void);
ERG_API const char* erg_status_name(erg_status status);
ERG_API void erg_string_free(char* s);

/* Functions on a measure model. */
ERG_API erg_status erg_function_parse(const char* json, erg_function** out);
ERG_API void erg_function_free(erg_function* f);
ERG_API erg_status erg_function_to_json(const erg_function* f, char** out_json);
ERG_API erg_status erg_function_eval(const erg_function* f, const char* location, char** out_rational);
ERG_API erg_status erg_function_level_measure(const erg_function* f, const char* lambda, char** out_extended);
ERG_API erg_status erg_function_in_r_mu(const erg_function* f, int* out);

/* Rearrangement as CSV rows "value,width" ("inf" for an infinite width). */
ERG_API erg_status erg_rearrange_csv(const erg_function* f, char** out_csv);
ERG_API erg_status erg_rearrange_json(const erg_function* f, char** out_json);

/* JSON {norm, in_space, contains_one, has_iet} for a space descriptor such as
 * "l1plus", "orlicz:power:2" or "lorentz:min:1". */
ERG_API erg_status erg_norms_report(const erg_function* f, const char* space, double rel_tol, char** out_json);

/* JSON {in_R_mu, tail_value, level_measures, norm_l1, norm_linf, norm_l1_plus_linf}. */
ERG_API erg_status erg_membership_report(const erg_function* f, char** out_json);

/* Operators. erg_operator_parse also accepts a certificate document and uses
 * its embedded operator. */
ERG_API erg_status erg_operator_parse(const char* json, erg_operator** out);
ERG_API void erg_operator_free(erg_operator* op);
ERG_API erg_status erg_operator_to_json(const erg_operator* op, char** out_json);
ERG_API erg_status erg_operator_apply(const erg_operator* op, const erg_function* f, erg_function** out);

/* DS check on f plus the constant and indicator probes of its model.
 * Writes 1 to *out_ok when no violation is found; the JSON report lists any. */
ERG_API erg_status erg_operator_verify_ds(const erg_operator* op, const erg_function* f, int* out_ok, char** out_json);

/* A_n(T, f)(location) for n = 1..n_max as CSV "n,A_n" or a JSON array. */
ERG_API erg_status erg_simulate(const erg_operator* op, const erg_function* f, const char* location, uint64_t n_max,
                                int json, char** out);

/* Divergence certificate synthesis and verification. */
ERG_API erg_status erg_synthesize(const erg_function* f, uint32_t depth, erg_certificate** out);
ERG_API erg_status erg_certificate_parse(const char* json, erg_certificate** out);
ERG_API void erg_certificate_free(erg_certificate* cert);
ERG_API erg_status erg_certificate_to_json(const erg_certificate* cert, char** out_json);
ERG_API erg_status erg_certificate_operator(const erg_certificate* cert, erg_operator** out);
/* *out_verified is 1 iff the trace re-simulates exactly, alternates strictly
 * across +-a/2 and the operator passes the DS probes. On failure the
 * diagnostic explains the first problem found. */
ERG_API erg_status erg_certificate_verify(const erg_certificate* cert, int* out_verified, char** out_diagnostic);

#ifdef __cplusplus
}
#endif

#endif /* ERGODIC_LAB_H */
