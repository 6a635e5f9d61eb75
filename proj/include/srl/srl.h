/*
 * C interface to the srl library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns an srl_status; on
 * failure a message is available from srl_last_error() on the calling
 * thread until the next failing call.
 */
#ifndef SRL_SRL_H
#define SRL_SRL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SRL_BUILDING_LIBRARY)
#    define SRL_API __declspec(dllexport)
#  else
#    define SRL_API __declspec(dllimport)
#  endif
#else
#  define SRL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum srl_status {
  SRL_OK = 0,
  SRL_ERR_INVALID_ARGUMENT = 1,
  SRL_ERR_PARSE = 2,
  SRL_ERR_UNKNOWN_NAME = 3,
  SRL_ERR_DOMAIN = 4,
  SRL_ERR_INVALID_COLLECTION = 5,
  SRL_ERR_COST_GUARD = 6,
  SRL_ERR_IO = 7,
  SRL_ERR_BUFFER_TOO_SMALL = 8,
  SRL_ERR_INTERNAL = 9
} srl_status;

typedef enum srl_family {
  SRL_FAMILY_STANDARD = 0,
  SRL_FAMILY_ALGEBRAIC = 1,
  SRL_FAMILY_BOUNDED = 2,
  SRL_FAMILY_DRASTIC = 3
} srl_family;

typedef enum srl_method {
  SRL_METHOD_NEWTON_RAPHSON = 0,
  SRL_METHOD_STEEPEST_DESCENT = 1,
  SRL_METHOD_CONTROL = 2
} srl_method;

typedef enum srl_solve_status {
  SRL_SOLVE_CONVERGED = 0,
  SRL_SOLVE_MAX_ITERS_EXCEEDED = 1,
  SRL_SOLVE_SINGULAR_JACOBIAN = 2,
  SRL_SOLVE_DIVERGED = 3
} srl_solve_status;

typedef struct srl_collection srl_collection;
typedef struct srl_system srl_system;
typedef struct srl_result srl_result;
typedef struct srl_solution_set srl_solution_set;

typedef struct srl_solver_config {
  srl_method method;
  double k;
  int64_t max_iters;
  double tol_step;
  double tol_residual;
  double fd_step;
  int clamp;
  uint64_t seed;
  int record_trajectory;
} srl_solver_config;

SRL_API const char* srl_version(void);
SRL_API const char* srl_last_error(void);
/* Position of the last parse error; 0 when the last error was not one. */
SRL_API size_t srl_last_error_line(void);
SRL_API size_t srl_last_error_column(void);
SRL_API const char* srl_status_string(srl_status status);

/* --- families and methods ------------------------------------------- */

SRL_API srl_status srl_family_from_name(const char* name, srl_family* out);
SRL_API const char* srl_family_name(srl_family family);
SRL_API int srl_family_is_continuous(srl_family family);
SRL_API srl_status srl_tnorm(srl_family family, double x, double y, double* out);
SRL_API srl_status srl_tconorm(srl_family family, double x, double y, double* out);
SRL_API srl_status srl_negate(srl_family family, double x, double* out);

SRL_API srl_status srl_method_from_name(const char* name, srl_method* out);
SRL_API const char* srl_method_name(srl_method method);
SRL_API const char* srl_solve_status_name(srl_solve_status status);

/* --- collections ---------------------------------------------------- */

SRL_API srl_status srl_collection_parse(const char* text, srl_collection** out);
SRL_API srl_status srl_collection_load_file(const char* path, srl_collection** out);
/* Corpus entry by name. When SRL_CORPUS_DIR is set and contains
 * <name>.srl, that file is loaded instead of the built-in text. */
SRL_API srl_status srl_collection_builtin(const char* name, srl_collection** out);
SRL_API void srl_collection_free(srl_collection* c);
SRL_API size_t srl_collection_size(const srl_collection* c);
SRL_API int srl_collection_is_boolean(const srl_collection* c);
/* Canonical text. Writes at most `capacity` bytes including the NUL and
 * stores the required capacity in *needed (if non-null). */
SRL_API srl_status srl_collection_format(const srl_collection* c, char* buffer,
                                         size_t capacity, size_t* needed);
/* Whether (1/2,...,1/2) solves a Boolean collection under the standard
 * family; *applicable is 0 for non-Boolean collections. */
SRL_API srl_status srl_collection_check_midpoint(const srl_collection* c,
                                                 int* applicable, int* holds);

SRL_API size_t srl_corpus_count(void);
SRL_API const char* srl_corpus_name(size_t index);
SRL_API const char* srl_corpus_description(size_t index);
SRL_API const char* srl_corpus_source(size_t index);

/* --- compiled systems ----------------------------------------------- */

SRL_API srl_status srl_system_compile(const srl_collection* c, srl_family family,
                                      srl_system** out);
SRL_API void srl_system_free(srl_system* s);
SRL_API size_t srl_system_dimension(const srl_system* s);
SRL_API srl_family srl_system_family(const srl_system* s);
/* x and out hold dimension() values; x must lie in [0,1]^M. */
SRL_API srl_status srl_system_eval_f(const srl_system* s, const double* x, double* out);
SRL_API srl_status srl_system_residual(const srl_system* s, const double* x, double* out);
SRL_API srl_status srl_system_inconsistency(const srl_system* s, const double* x,
                                            double* out);
/* Row-major M*M matrix. */
SRL_API srl_status srl_system_jacobian(const srl_system* s, const double* x,
                                       double step, double* out);
SRL_API srl_status srl_system_gradient(const srl_system* s, const double* x,
                                       double step, double* out);

/* --- solvers -------------------------------------------------------- */

SRL_API void srl_solver_config_default(srl_method method, srl_solver_config* out);
SRL_API srl_status srl_random_initial(size_t m, uint64_t seed, double* out);
/* x0 may be null: the start is then srl_random_initial(M, cfg->seed). */
SRL_API srl_status srl_solve(const srl_system* s, const double* x0,
                             const srl_solver_config* cfg, srl_result** out);
SRL_API void srl_result_free(srl_result* r);
SRL_API srl_solve_status srl_result_status(const srl_result* r);
SRL_API int64_t srl_result_iterations(const srl_result* r);
SRL_API double srl_result_inconsistency(const srl_result* r);
SRL_API size_t srl_result_dimension(const srl_result* r);
SRL_API void srl_result_x(const srl_result* r, double* out);
/* Non-zero when the family is not continuous and no solution is
 * guaranteed to exist. */
SRL_API int srl_result_existence_warning(const srl_result* r);
SRL_API size_t srl_result_trajectory_length(const srl_result* r);
SRL_API srl_status srl_result_trajectory_point(const srl_result* r, size_t index,
                                               int64_t* t, double* x, double* j);
/* Runs `steps` clamped control updates with gain k from x, in place. */
SRL_API srl_status srl_polish(const srl_system* s, double* x, int64_t steps, double k);

/* --- grid oracle ---------------------------------------------------- */

SRL_API double srl_default_threshold(const srl_system* s, double resolution);
SRL_API srl_status srl_oracle_grid(const srl_system* s, double resolution,
                                   double threshold, int polish,
                                   srl_solution_set** out);
SRL_API void srl_solution_set_free(srl_solution_set* set);
SRL_API double srl_solution_set_resolution(const srl_solution_set* set);
SRL_API double srl_solution_set_threshold(const srl_solution_set* set);
SRL_API size_t srl_solution_set_count(const srl_solution_set* set);
/* representative, lo, hi each have M entries; any may be null. */
SRL_API srl_status srl_solution_set_cluster(const srl_solution_set* set, size_t index,
                                            double* representative, double* j,
                                            size_t* size, double* lo, double* hi);

#ifdef __cplusplus
}
#endif

#endif /* SRL_SRL_H */
