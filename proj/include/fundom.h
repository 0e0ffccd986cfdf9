/* C interface for the fundom canonicalization library.
 *
 * All functions return a fundom_status; outputs are written through
 * pointers. Handles are opaque and must be released with the matching
 * _free function. Strings returned by the library are heap-allocated and
 * must be released with fundom_string_free. On failure,
 * fundom_last_error() returns a thread-local description of the problem.
 *
 * Vectors are arrays of doubles in row-major order; permutations cross the
 * boundary as 1-indexed image tables (witness[i-1] = s(i)).
 */
#ifndef FUNDOM_H
#define FUNDOM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(FUNDOM_BUILD_SHARED)
#define FUNDOM_API __declspec(dllexport)
#else
#define FUNDOM_API __declspec(dllimport)
#endif
#else
#define FUNDOM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fundom_status {
  FUNDOM_OK = 0,
  FUNDOM_ERR_INVALID_ARGUMENT = 1,
  FUNDOM_ERR_PARSE = 2,
  FUNDOM_ERR_BOUND_EXCEEDED = 3,
  FUNDOM_ERR_INTERNAL = 4
} fundom_status;

typedef enum fundom_projection_kind {
  FUNDOM_PROJECTION_ASC = 0,
  FUNDOM_PROJECTION_DESC = 1,
  FUNDOM_PROJECTION_ASC_AVG = 2,
  FUNDOM_PROJECTION_DESC_AVG = 3
} fundom_projection_kind;

/* An action handle bundles the parsed group/action spec, the flattened
 * permutation group and its stabilizer chain. Handles are immutable and
 * safe to share across threads. */
typedef struct fundom_action fundom_action;

/* Parses a JSON action spec:
 *   {"degree": n, "generators": ["(1 2)(3 4)", ...]}
 *   {"kind": "symmetric"|"alternating"|"cyclic"|"dihedral"|"generators", "degree": n, ...}
 *   {"tensor": [group-spec, ...]} | {"direct_sum": [spec, ...]}
 */
FUNDOM_API fundom_status fundom_action_parse(const char* spec_json, fundom_action** out);
FUNDOM_API void fundom_action_free(fundom_action* action);

FUNDOM_API int32_t fundom_action_degree(const fundom_action* action);
FUNDOM_API fundom_status fundom_action_order(const fundom_action* action, uint64_t* order_out);

/* Tensor shape: returns the rank (0 for non-tensor actions) and, when dims
 * is non-NULL, writes that many entries into it. */
FUNDOM_API int32_t fundom_action_rank(const fundom_action* action);
FUNDOM_API void fundom_action_dims(const fundom_action* action, int32_t* dims);

/* Canonicalizes x (length n = degree). canonical_out must hold n doubles;
 * witness_out is optional (NULL or space for n int32 image entries). The
 * witness satisfies witness . x == canonical entry-exactly. */
FUNDOM_API fundom_status fundom_project(const fundom_action* action, fundom_projection_kind kind,
                                        const double* x, int32_t n, double* canonical_out,
                                        int32_t* witness_out);

typedef struct fundom_descent_options {
  int64_t max_steps;  /* <= 0 means the library default */
  int32_t multi_seed; /* nonzero: restart from every cyclic double shift */
} fundom_descent_options;

typedef struct fundom_descent_stats {
  int64_t steps;
  double objective;
  int32_t hit_step_limit;
} fundom_descent_stats;

/* Dirichlet descent with the default reference vector (1,...,n) and the
 * default generating set. options and stats may be NULL. */
FUNDOM_API fundom_status fundom_dirichlet(const fundom_action* action,
                                          const fundom_descent_options* options, const double* x,
                                          int32_t n, double* canonical_out, int32_t* witness_out,
                                          fundom_descent_stats* stats);

/* Exact orbit minimizer (enumerates the group; fails when the order exceeds
 * the bound). objective_out may be NULL. */
FUNDOM_API fundom_status fundom_dirichlet_oracle(const fundom_action* action, const double* x, int32_t n,
                                                 uint64_t bound, double* canonical_out,
                                                 double* objective_out);

/* Runs a named verification suite (invariance, counting, gallery,
 * transversal, image, conjugation, idempotence, dirichlet-oracle) and
 * returns a JSON report. passed_out is 1 when no assertion-level check
 * failed; measured-rate tracks never clear it. */
FUNDOM_API fundom_status fundom_verify_run(const fundom_action* action, const char* suite,
                                           uint64_t trials, uint64_t seed, char** report_json_out,
                                           int32_t* passed_out);

/* Cayley-table classification demo: builds the five order-8 group tables,
 * permutes rows/columns independently, canonicalizes and classifies by exact
 * lookup. */
FUNDOM_API fundom_status fundom_cayley_demo(int32_t per_class, uint64_t seed, char** report_json_out,
                                            int32_t* passed_out);

FUNDOM_API void fundom_string_free(char* text);

/* Thread-local message describing the most recent failure. */
FUNDOM_API const char* fundom_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* FUNDOM_H */
