#ifndef IFSX_H
#define IFSX_H

/* C interface to the ifsx core: iterated-function-system attractors on
 * [0,1]^d, Hausdorff distances, polygonal approximation studies, exact
 * witness-set builders and randomized separation searches.
 *
 * All functions return an ifsx_status; on failure ifsx_last_error() describes
 * the most recent error of the calling thread. Out-parameters are written
 * only on IFSX_OK. Strings returned through char** out-parameters are
 * heap-allocated and must be released with ifsx_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ifsx_status {
    IFSX_OK = 0,
    IFSX_ERR_INVALID_ARGUMENT = 1,
    IFSX_ERR_DIMENSION_MISMATCH = 2,
    IFSX_ERR_PARSE = 3,
    IFSX_ERR_NOT_CONVERGED = 4,
    IFSX_ERR_IO = 5,
    IFSX_ERR_UNSUPPORTED = 6,
    IFSX_ERR_INFEASIBLE = 7,
    IFSX_ERR_INTERNAL = 8
} ifsx_status;

typedef struct ifsx_set ifsx_set;       /* finite point cloud in [0,1]^d */
typedef struct ifsx_system ifsx_system; /* function system (list of maps) */

/* Thread-local message for the last failing call; never NULL. */
const char* ifsx_last_error(void);

void ifsx_string_free(char* s);
void ifsx_set_free(ifsx_set* s);
void ifsx_system_free(ifsx_system* s);

/* --- point clouds --- */

/* coords is row-major: npoints * dim doubles. */
ifsx_status ifsx_set_from_coords(const double* coords, size_t npoints, size_t dim,
                                 ifsx_set** out);
ifsx_status ifsx_set_load_csv(const char* path, ifsx_set** out);
ifsx_status ifsx_set_save_csv(const ifsx_set* s, const char* path);
ifsx_status ifsx_set_to_csv(const ifsx_set* s, char** csv_out);
size_t ifsx_set_size(const ifsx_set* s);
size_t ifsx_set_dim(const ifsx_set* s);
/* buffer must hold size * dim doubles. */
ifsx_status ifsx_set_coords(const ifsx_set* s, double* buffer, size_t buffer_len);

/* --- systems --- */

/* JSON: {"dim": d, "maps": [{"type": "affine"|"constant"|"pwl"|"logistic"|
 * "embedded", ...}, ...]} */
ifsx_status ifsx_system_parse_json(const char* json_text, ifsx_system** out);

/* --- computations --- */

ifsx_status ifsx_attractor_run(const ifsx_system* sys, double tol, size_t max_iter,
                               double resolution, ifsx_set** attractor_out,
                               size_t* iterations_out, double* residual_out,
                               int* converged_out);

ifsx_status ifsx_hausdorff(const ifsx_set* a, const ifsx_set* b, double* distance_out,
                           char** witness_json_out /* nullable */);

/* CSV with header k,lipschitz_max,hausdorff; one row per schedule entry. */
ifsx_status ifsx_approx_study_run(const ifsx_system* sys, const size_t* k_schedule,
                                  size_t schedule_len, double tol, size_t max_iter,
                                  double resolution, char** csv_out);

/* kind: "prop-p" (param = depth), "ladder" (param = n), "intervals"
 * (param = depth). json_out receives the witness document including the audit
 * report; *all_pass_out is 1 iff every audited condition holds. */
ifsx_status ifsx_witness_build(const char* kind, size_t param, char** json_out,
                               int* all_pass_out);

/* witness_json must be a ladder document produced by ifsx_witness_build.
 * n = 0 means "use the witness block count" (the separation claim's n). */
ifsx_status ifsx_separation_search(const char* witness_json, size_t n, size_t trials,
                                   uint64_t seed, double tol, size_t max_iter,
                                   double resolution, char** report_json_out,
                                   int* violated_out);

/* Deterministic SVG: d=1 tick plot, d=2 scatter; d>2 is an error. */
ifsx_status ifsx_render_svg(const ifsx_set* s, char** svg_out);

#ifdef __cplusplus
}
#endif

#endif /* IFSX_H */
