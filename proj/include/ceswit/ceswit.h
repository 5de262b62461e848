#ifndef CESWIT_H
#define CESWIT_H

/* C interface to the completely-entangled-subspace / entanglement-witness
 * toolkit. All handles are opaque; every function returns a status code and
 * leaves a human-readable message in ceswit_last_error() on failure.
 * Structured results are returned as JSON strings (free with
 * ceswit_string_free). All randomness is derived from the seed in
 * ceswit_config, so identical calls produce identical payloads. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ceswit_status {
  CESWIT_OK = 0,
  CESWIT_ERR_INVALID_ARGUMENT = 1,
  CESWIT_ERR_PARSE = 2,
  CESWIT_ERR_SEARCH_FAILED = 3,
  CESWIT_ERR_INTERNAL = 4
} ceswit_status;

typedef struct ceswit_subspace ceswit_subspace; /* opaque */

typedef struct ceswit_config {
  uint64_t seed;    /* master seed for every randomized quantity */
  int samples;      /* span sampling budget; <= 0 means 4*m*n */
  int trials;       /* random-P count / assumption trials; <= 0 means default */
  double rank_rel;  /* <= 0 means 1e-9 */
  double orth_tol;  /* <= 0 means 1e-10 */
} ceswit_config;

ceswit_config ceswit_config_default(void);

const char* ceswit_version(void);
/* Thread-local message describing the most recent failure. */
const char* ceswit_last_error(void);

void ceswit_string_free(char* s);
void ceswit_subspace_free(ceswit_subspace* s);

/* family: "symmetric" | "general" | "counterexample". n is ignored for
 * "symmetric". */
ceswit_status ceswit_family(const char* family, int m, int n,
                            ceswit_subspace** out);
/* The explicit 6-dimensional H_{3,4} subspace (index 0) or its
 * orthocomplement (index 1). */
ceswit_status ceswit_footnote_member(int index, ceswit_subspace** out);

/* Subspace JSON: {"m": int, "n": int, "basis": [[[re,im],...],...]}. */
ceswit_status ceswit_subspace_from_json(const char* json_text,
                                        ceswit_subspace** out);
ceswit_status ceswit_subspace_to_json(const ceswit_subspace* s, char** out_json);
ceswit_status ceswit_subspace_dims(const ceswit_subspace* s, int* m, int* n,
                                   int* dim);

/* CES certificate: {"is_ces", "best_product_overlap", "witness"}. */
ceswit_status ceswit_ces_certificate(const ceswit_subspace* s,
                                     const ceswit_config* cfg, char** out_json);
ceswit_status ceswit_is_supported(const ceswit_subspace* s,
                                  const ceswit_config* cfg, int* out);
ceswit_status ceswit_max_ces_dim(int m, int n, int* out);

/* Span analysis of partially conjugated product vectors orthogonal to s:
 * {"span_dim", "kernel", "samples_used", "sufficient", "kernel_match"}. */
ceswit_status ceswit_span_report(const ceswit_subspace* s,
                                 const ceswit_config* cfg, char** out_json);

/* Witness pipeline: builds Q = sum lambda_i |Psi_i><Psi_i| and W = Q^Gamma,
 * reports the block-positivity minimum, NPT flag, the Q-supported-on-a-CES
 * form check and the optimality verification over the eps grid. lambdas may
 * be NULL (all ones). */
ceswit_status ceswit_witness_report(const ceswit_subspace* s,
                                    const double* lambdas, size_t n_lambdas,
                                    const double* eps_grid, size_t n_eps,
                                    const ceswit_config* cfg, char** out_json);

/* Chain of CES extensions up to target_dim (<= 0 means the maximal CES
 * dimension). Returns the final subspace and a JSON report of the chain. */
ceswit_status ceswit_extend(const ceswit_subspace* s, int target_dim,
                            int max_tries, const ceswit_config* cfg,
                            ceswit_subspace** out, char** out_json);

/* Full acceptance battery; all_pass is 1 iff every criterion passed. */
ceswit_status ceswit_suite(const ceswit_config* cfg, int* all_pass,
                           char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* CESWIT_H */
