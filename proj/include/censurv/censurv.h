/* censurv.h - C interface to the censurv shared library.
 *
 * All functions return a censurv_status; outputs go through out-parameters.
 * Objects are opaque handles released with the matching *_free function.
 * Handles are immutable once created and may be shared across threads;
 * creation/destruction of a given handle must not race with its use.
 * On failure, censurv_last_error() returns a thread-local message.
 */
#ifndef CENSURV_H
#define CENSURV_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CENSURV_API __declspec(dllexport)
#else
#define CENSURV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum censurv_status {
  CENSURV_OK = 0,
  CENSURV_ERR_BAD_ARGUMENT = 1,
  CENSURV_ERR_NO_EVENTS = 2,
  CENSURV_ERR_NO_NONEVENTS = 3,
  CENSURV_ERR_INSUFFICIENT_DATA = 4,
  CENSURV_ERR_BAD_INDEX = 5,
  CENSURV_ERR_DIMENSION_MISMATCH = 6,
  CENSURV_ERR_LENGTH_MISMATCH = 7,
  CENSURV_ERR_TOO_FEW = 8,
  CENSURV_ERR_NOT_CONVERGED = 9,
  CENSURV_ERR_SINGULAR = 10,
  CENSURV_ERR_FORMAT = 11,
  CENSURV_ERR_UNKNOWN_VARIANT = 12,
  CENSURV_ERR_IO = 13,
  CENSURV_ERR_INTERNAL = 14
} censurv_status;

typedef struct censurv_dataset censurv_dataset;
typedef struct censurv_simdata censurv_simdata;
typedef struct censurv_model censurv_model;

CENSURV_API const char* censurv_version(void);
/* Message for the last failing call on this thread; empty string if none. */
CENSURV_API const char* censurv_last_error(void);
CENSURV_API const char* censurv_status_name(censurv_status status);

/* ---- datasets ------------------------------------------------------- */

/* covariates is row-major n*p and may be NULL when p == 0; names may be
 * NULL for default labels x1..xp. The arrays are copied. */
CENSURV_API censurv_status censurv_dataset_create(
    int64_t n, int64_t p, const double* times, const int32_t* events,
    const double* covariates, const char* const* names, censurv_dataset** out);
CENSURV_API void censurv_dataset_free(censurv_dataset* dataset);

CENSURV_API int64_t censurv_dataset_size(const censurv_dataset* dataset);
CENSURV_API int64_t censurv_dataset_num_covariates(const censurv_dataset* dataset);
/* Borrowed pointer, valid while the dataset lives. */
CENSURV_API const char* censurv_dataset_covariate_name(const censurv_dataset* dataset,
                                                       int64_t j);
CENSURV_API censurv_status censurv_dataset_times(const censurv_dataset* dataset,
                                                 double* out_times);
CENSURV_API censurv_status censurv_dataset_events(const censurv_dataset* dataset,
                                                  int32_t* out_events);
/* Fills out row-major n*p. */
CENSURV_API censurv_status censurv_dataset_covariates(const censurv_dataset* dataset,
                                                      double* out_covariates);

/* ---- simulation ------------------------------------------------------ */

typedef enum censurv_scenario {
  CENSURV_SCENARIO_WEIBULL_PH = 0,
  CENSURV_SCENARIO_LOGLOGISTIC_AFT = 1,
  CENSURV_SCENARIO_MISSPECIFIED_EHR = 2
} censurv_scenario;

typedef struct censurv_sim_config {
  int32_t variant; /* censurv_scenario */
  int64_t n;
  double beta0;
  double rho;
  uint64_t seed;
  double horizon;
} censurv_sim_config;

CENSURV_API censurv_status censurv_simulate(const censurv_sim_config* config,
                                            censurv_simdata** out);
CENSURV_API void censurv_simdata_free(censurv_simdata* sim);
/* Borrowed handle, owned by the simdata. */
CENSURV_API const censurv_dataset* censurv_simdata_dataset(const censurv_simdata* sim);
CENSURV_API censurv_status censurv_simdata_true_times(const censurv_simdata* sim,
                                                      double* out);
CENSURV_API censurv_status censurv_simdata_true_survival(const censurv_simdata* sim,
                                                         double* out);

/* ---- model fitting ---------------------------------------------------- */

typedef struct censurv_cnb_config {
  double span;
  int32_t degree;
  double variance_floor;
  int32_t standardize;
  int64_t grid_cap;
  int32_t threads;
} censurv_cnb_config;

typedef struct censurv_cox_config {
  double tolerance;
  int32_t max_iter;
  int32_t standardize;
} censurv_cox_config;

CENSURV_API void censurv_cnb_config_init(censurv_cnb_config* config);
CENSURV_API void censurv_cox_config_init(censurv_cox_config* config);

CENSURV_API censurv_status censurv_fit_cnb(const censurv_dataset* train,
                                           const censurv_cnb_config* config,
                                           censurv_model** out);
CENSURV_API censurv_status censurv_fit_cox(const censurv_dataset* train,
                                           const censurv_cox_config* config,
                                           censurv_model** out);
CENSURV_API void censurv_model_free(censurv_model* model);

typedef enum censurv_model_kind {
  CENSURV_MODEL_CNB = 0,
  CENSURV_MODEL_COX = 1
} censurv_model_kind;

CENSURV_API int32_t censurv_model_kind_of(const censurv_model* model);
CENSURV_API int64_t censurv_model_num_covariates(const censurv_model* model);
CENSURV_API const char* censurv_model_covariate_name(const censurv_model* model,
                                                     int64_t j);

/* ---- prediction -------------------------------------------------------- */

/* Survival probabilities S_X(t) for one covariate row at k times. */
CENSURV_API censurv_status censurv_predict(const censurv_model* model,
                                           const double* x, int64_t p,
                                           const double* times, int64_t k,
                                           double* out_survival);
/* Survival at one time for every subject of a dataset (covariate order must
 * match the model's). */
CENSURV_API censurv_status censurv_predict_dataset(const censurv_model* model,
                                                   const censurv_dataset* data,
                                                   double time, double* out_survival);

/* ---- model documents ---------------------------------------------------- */

/* JSON text; free with censurv_string_free. */
CENSURV_API censurv_status censurv_model_to_json(const censurv_model* model,
                                                 char** out_json);
CENSURV_API censurv_status censurv_model_from_json(const char* json,
                                                   censurv_model** out);
CENSURV_API void censurv_string_free(char* text);

/* ---- metrics -------------------------------------------------------- */

CENSURV_API censurv_status censurv_bias_mse(const double* predicted,
                                            const double* truth, int64_t n,
                                            double* out_bias, double* out_mse_x100);

/* Linear-interpolation quartile cutpoints; out_cutpoints has room for 3. */
CENSURV_API censurv_status censurv_quartile_cutpoints(const double* probs, int64_t n,
                                                      double* out_cutpoints);
/* Bin index = number of cutpoints strictly below the probability. */
CENSURV_API censurv_status censurv_categorize(const double* cutpoints,
                                              int64_t num_cutpoints,
                                              const double* probs, int64_t n,
                                              int32_t* out_bins);

typedef struct censurv_reclass_report {
  double ri_events;
  double ri_nonevents;
  double nri;
  double up_events, down_events;
  double up_nonevents, down_nonevents;
  int32_t empty_subset_fallbacks;
  double ci_halfwidth;
  int64_t b_effective;
  int64_t failed_replicates;
} censurv_reclass_report;

CENSURV_API censurv_status censurv_nri(const int32_t* event_flags,
                                       const int32_t* bins_a, const int32_t* bins_b,
                                       int64_t n, censurv_reclass_report* out);

/* preds are event probabilities by `horizon` aligned with `test`. */
CENSURV_API censurv_status censurv_cnri(const censurv_dataset* test,
                                        const double* preds_a, const double* preds_b,
                                        const double* cutpoints, int64_t num_cutpoints,
                                        double horizon, censurv_reclass_report* out);

typedef struct censurv_fit_recipe {
  int32_t kind; /* censurv_model_kind */
  censurv_cnb_config cnb;
  censurv_cox_config cox;
} censurv_fit_recipe;

CENSURV_API void censurv_fit_recipe_init(censurv_fit_recipe* recipe);

CENSURV_API censurv_status censurv_bootstrap_cnri(
    const censurv_dataset* train, const censurv_dataset* test,
    const censurv_fit_recipe* recipe_a, const censurv_fit_recipe* recipe_b,
    const double* cutpoints, int64_t num_cutpoints, double horizon, int64_t B,
    uint64_t seed, int32_t threads, censurv_reclass_report* out);

#ifdef __cplusplus
}
#endif

#endif /* CENSURV_H */
