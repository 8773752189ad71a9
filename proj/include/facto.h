/*
 * facto - exact toolkit for factoriality of singular threefold
 * hypersurfaces: numeric criteria, singularity analysis, explicit
 * constructions, interpolation defects, and blow-up intersection numbers.
 *
 * C interface: opaque handles plus status codes.  All returned strings are
 * owned by the caller and must be released with facto_string_free().  Every
 * function that can fail records a message retrievable through
 * facto_last_error() on its context.
 */

#ifndef FACTO_H
#define FACTO_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct facto_ctx facto_ctx;
typedef struct facto_poly facto_poly;

typedef enum {
  FACTO_OK = 0,
  FACTO_ERR_INVALID = 1,    /* bad arguments / precondition violation */
  FACTO_ERR_PARSE = 2,      /* input text does not parse */
  FACTO_ERR_BUDGET = 3,     /* configured resource limit exhausted */
  FACTO_ERR_CONSTRUCT = 4,  /* randomized construction retries exhausted */
  FACTO_ERR_BADPRIME = 5,   /* working prime gave inconsistent results */
  FACTO_ERR_DEGENERATE = 6, /* computation hit a degenerate configuration */
  FACTO_ERR_INTERNAL = 7
} facto_status;

/* Context: holds run options and the last error message. */
facto_ctx *facto_ctx_new(void);
void facto_ctx_free(facto_ctx *ctx);
const char *facto_last_error(const facto_ctx *ctx);

/* Options: prime (default 101), prime2 (211; 0 disables the agreement
 * rerun), emax (2), seed (0), groebner_budget (1000000), enum_budget
 * (1000000), retries (32). */
facto_status facto_set_option(facto_ctx *ctx, const char *key, long long value);

/* Polynomials.  `field` is "Q" or "Fp:<p>". */
facto_status facto_poly_parse(facto_ctx *ctx, const char *text, int nvars,
                              const char *field, facto_poly **out);
facto_status facto_poly_from_file(facto_ctx *ctx, const char *path, facto_poly **out);
facto_status facto_poly_to_text(facto_ctx *ctx, const facto_poly *p, char **out);
facto_status facto_poly_print(facto_ctx *ctx, const facto_poly *p, char **out);
void facto_poly_free(facto_poly *p);
void facto_string_free(char *s);

/* Factoriality criteria for a degree-d hypersurface in P^n with
 * multiplicities mults[0..k-1]; position is "general", "plane" or
 * "unknown".  Emits the criteria table and verdict as JSON. */
facto_status facto_check(facto_ctx *ctx, int n, long long d, const long long *mults,
                         size_t k, const char *position, char **json_out);

/* Singularity analysis of a homogeneous polynomial in 5 variables over Q
 * or F_p, using the context's prime / emax / budgets. */
facto_status facto_analyze(facto_ctx *ctx, const facto_poly *p, char **json_out);

/* Construction families.  `family` is one of "example52", "prop61",
 * "kollar", "cone"; params_json carries the family parameters:
 *   example52: {"d": 4, "m": 2}
 *   prop61:    {"t": 1, "delta": 2}
 *   kollar:    {}
 *   cone:      {"g_fermat": 4} or {"g_poly": "<.poly content>"},
 *              optional {"pic_z": true}
 * poly_out receives the ".poly" file content, json_out the sidecar. */
facto_status facto_construct(facto_ctx *ctx, const char *family, const char *params_json,
                             char **poly_out, char **json_out);

/* Defect of a node configuration (points_text: one point per line,
 * comma-separated rationals, '#' comments) for degree d. */
facto_status facto_defect(facto_ctx *ctx, const char *points_text, long long d,
                          char **json_out);

/* Coplanarity of a point configuration; *out is 0 or 1. */
facto_status facto_coplanar(facto_ctx *ctx, const char *points_text, int *out);

/* (aH - sum bs[i] E_i)^n on the blow-up of P^n at k points. */
facto_status facto_intersect(facto_ctx *ctx, long long a, const long long *bs, size_t k,
                             int n, char **json_out);

const char *facto_version(void);

#ifdef __cplusplus
}
#endif

#endif /* FACTO_H */
