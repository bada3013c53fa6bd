/* C interface to the ratefv finite-volume solver.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Every fallible call returns a ratefv_status; on failure a description of
 * the most recent error on the calling thread is available from
 * ratefv_last_error().
 */
#ifndef RATEFV_H_
#define RATEFV_H_

#include <stddef.h>

#if defined(RATEFV_BUILDING_LIBRARY)
#define RATEFV_API __attribute__((visibility("default")))
#else
#define RATEFV_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ratefv_status {
  RATEFV_OK = 0,
  RATEFV_ERR_INVALID_ARGUMENT = 1,
  RATEFV_ERR_NUMERICAL = 2,
  RATEFV_ERR_IO = 3,
  RATEFV_ERR_BUFFER_TOO_SMALL = 4,
  RATEFV_ERR_INTERNAL = 5
} ratefv_status;

/* Experiment description: problem, scheme, resolution, times, output. */
typedef struct ratefv_config ratefv_config;

/* A running simulation of one configuration. */
typedef struct ratefv_solver ratefv_solver;

RATEFV_API const char* ratefv_version(void);
RATEFV_API const char* ratefv_status_string(ratefv_status status);
/* Valid until the next failing call on the same thread. Never NULL. */
RATEFV_API const char* ratefv_last_error(void);

/* Defaults: u1, mlf flux, bsphere predictor, p=4, cfl=0.1, redistribution on,
 * visc_width=11, n=50, t_end=1.2. */
RATEFV_API ratefv_status ratefv_config_create(ratefv_config** out);
RATEFV_API ratefv_status ratefv_config_clone(const ratefv_config* config, ratefv_config** out);
RATEFV_API void ratefv_config_destroy(ratefv_config* config);

/* Keys: problem, flux, predictor, p, cfl, n, t_end, snapshots, redistribute,
 * visc_width, out, levels, ref_n, t_eval. Values use the config-file syntax. */
RATEFV_API ratefv_status ratefv_config_set(ratefv_config* config, const char* key, const char* value);
/* Flat key=value file; '#' starts a comment. */
RATEFV_API ratefv_status ratefv_config_load_file(ratefv_config* config, const char* path);
/* Writes the NUL-terminated value of `key` into buf. *needed (optional)
 * receives the required size including the terminator. */
RATEFV_API ratefv_status ratefv_config_get(const ratefv_config* config, const char* key, char* buf, size_t buf_len,
                                           size_t* needed);

/* Runs the configuration, writing snapshot CSVs, entropy.csv and status.txt
 * into the configured output directory. A run that blows up returns
 * RATEFV_ERR_NUMERICAL after status.txt has been written. */
RATEFV_API ratefv_status ratefv_run(const ratefv_config* config);

/* Convergence table (N,L1,Linf,EOC_L1,EOC_Linf) over the configured levels at
 * the configured t_eval, written as CSV to `out_path`. */
RATEFV_API ratefv_status ratefv_converge(const ratefv_config* config, const char* out_path);

/* Entropy traces of `count` configurations plus a Godunov reference with
 * `ref_n` cells, sampled at `n_times` uniform times in [0, t_end]. */
RATEFV_API ratefv_status ratefv_entropy(const ratefv_config* const* configs, size_t count, size_t ref_n,
                                        size_t n_times, const char* out_path);

/* Projects the initial condition of `config`. */
RATEFV_API ratefv_status ratefv_solver_create(const ratefv_config* config, ratefv_solver** out);
RATEFV_API void ratefv_solver_destroy(ratefv_solver* solver);
/* Integrates forward to t_target >= current time. */
RATEFV_API ratefv_status ratefv_solver_advance(ratefv_solver* solver, double t_target);
RATEFV_API double ratefv_solver_time(const ratefv_solver* solver);
RATEFV_API size_t ratefv_solver_size(const ratefv_solver* solver);
RATEFV_API double ratefv_solver_entropy(const ratefv_solver* solver);
/* Copies the cell means (and optionally cell centers) into caller buffers of
 * length ratefv_solver_size(). `centers` may be NULL. */
RATEFV_API ratefv_status ratefv_solver_means(const ratefv_solver* solver, double* means, double* centers, size_t len);

#ifdef __cplusplus
}
#endif

#endif /* RATEFV_H_ */
