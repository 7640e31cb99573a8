/*
 * C interface to the cyclic algorithmic-cooling simulator.
 *
 * Objects are opaque handles created by *_new / *_load / computation entry
 * points and released with the matching *_free. Every fallible call returns a
 * ccool_status; on failure ccool_last_error() describes the problem (per
 * thread, valid until the next failing call on that thread).
 */
#ifndef CCOOL_H
#define CCOOL_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(CCOOL_BUILDING)
#    define CCOOL_API __declspec(dllexport)
#  else
#    define CCOOL_API __declspec(dllimport)
#  endif
#else
#  define CCOOL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ccool_status {
  CCOOL_OK = 0,
  CCOOL_ERR_CONFIG = 1,      /* malformed configuration */
  CCOOL_ERR_PHYSICS = 2,     /* physical constraint violated */
  CCOOL_ERR_VALIDATION = 3,  /* engine and oracle disagree */
  CCOOL_ERR_ARGUMENT = 4,    /* bad call argument (null pointer, index range) */
  CCOOL_ERR_INTERNAL = 5
} ccool_status;

typedef enum ccool_tau_units { CCOOL_TAU_T1 = 0, CCOOL_TAU_NATURAL = 1 } ccool_tau_units;
typedef enum ccool_variant { CCOOL_VARIANT_CYCLIC = 0, CCOOL_VARIANT_BOYKIN = 1 } ccool_variant;
typedef enum ccool_polarity { CCOOL_POLARITY_EXCITED = 0, CCOOL_POLARITY_GROUND = 1 } ccool_polarity;

typedef struct ccool_config ccool_config;
typedef struct ccool_run ccool_run;
typedef struct ccool_validation ccool_validation;

/* One row of a trajectory. Ratios are beta/beta0 (NaN when beta0 == 0). */
typedef struct ccool_cycle_row {
  int n;
  double beta[3];
  double beta_ratio[3];
  double q;
  double w;
  double delta_e23;
  double heat_bath;
  double eta;        /* valid when eta_defined */
  int eta_defined;
  double carnot_cop; /* valid when carnot_defined; may be +inf */
  int carnot_defined;
} ccool_cycle_row;

typedef struct ccool_validation_row {
  int n;
  double beta_engine;
  double beta_oracle;
  double abs_diff;
} ccool_validation_row;

CCOOL_API const char* ccool_version(void);
CCOOL_API const char* ccool_last_error(void);

/* Configuration ---------------------------------------------------------- */

CCOOL_API ccool_status ccool_config_new(ccool_config** out);
CCOOL_API ccool_status ccool_config_parse(const char* text, ccool_config** out);
CCOOL_API ccool_status ccool_config_load(const char* path, ccool_config** out);
CCOOL_API ccool_status ccool_config_clone(const ccool_config* cfg, ccool_config** out);
CCOOL_API void ccool_config_free(ccool_config* cfg);

CCOOL_API ccool_status ccool_config_set_delta_e(ccool_config* cfg, const double delta_e[3]);
CCOOL_API ccool_status ccool_config_set_beta0(ccool_config* cfg, double beta0);
CCOOL_API ccool_status ccool_config_set_lambda(ccool_config* cfg, double lambda);
/* tau may be +INFINITY for complete thermalization. */
CCOOL_API ccool_status ccool_config_set_tau(ccool_config* cfg, double tau, ccool_tau_units units);
CCOOL_API ccool_status ccool_config_set_n_cycles(ccool_config* cfg, long long n_cycles);
CCOOL_API ccool_status ccool_config_set_variant(ccool_config* cfg, ccool_variant variant);
CCOOL_API ccool_status ccool_config_set_polarity(ccool_config* cfg, ccool_polarity polarity);
CCOOL_API ccool_status ccool_config_set_include_hamiltonian(ccool_config* cfg, int flag);

CCOOL_API ccool_status ccool_config_get_beta0(const ccool_config* cfg, double* out);
CCOOL_API ccool_status ccool_config_get_n_cycles(const ccool_config* cfg, long long* out);

/* Physical-constraint check; CCOOL_ERR_PHYSICS names the violated constraint. */
CCOOL_API ccool_status ccool_config_check(const ccool_config* cfg);

/* Canonical key=value echo. Writes at most len bytes including the NUL;
 * *needed (optional) receives the full length including the NUL. */
CCOOL_API ccool_status ccool_config_echo(const ccool_config* cfg, char* buf, size_t len, size_t* needed);

/* Trajectories ----------------------------------------------------------- */

CCOOL_API ccool_status ccool_run_trajectory(const ccool_config* cfg, ccool_run** out);
CCOOL_API size_t ccool_run_rows(const ccool_run* run);
CCOOL_API ccool_status ccool_run_get_row(const ccool_run* run, size_t index, ccool_cycle_row* out);
CCOOL_API void ccool_run_free(ccool_run* run);

/* Final beta_1/beta0 after n_cycles for each contact time in T1 units
 * (+INFINITY allowed). out must hold count doubles. */
CCOOL_API ccool_status ccool_sweep_tau(const ccool_config* cfg, const double* taus_t1, size_t count, double* out);

/* Reference values: (dE2 + dE3)/dE1 and beta_1(1)/beta0. */
CCOOL_API ccool_status ccool_sweep_references(const ccool_config* cfg, double* asymptotic_bound, double* single_application);

/* First-cycle efficiency over a grid, complete thermalization. Row-major with
 * delta_e2 outer; eta_out and defined_out must hold n2*n3 entries. */
CCOOL_API ccool_status ccool_eta_surface(const ccool_config* cfg, const double* delta_e2, size_t n2,
                                         const double* delta_e3, size_t n3, double* eta_out, int* defined_out);

/* Asymptotic beta_1 for complete thermalization, closed form. */
CCOOL_API ccool_status ccool_asymptotic_beta(const ccool_config* cfg, double* out);

/* beta per qubit at the fixed point of the cycle map. When the fixed space is
 * degenerate, returns CCOOL_ERR_PHYSICS and stores its dimension. */
CCOOL_API ccool_status ccool_fixed_point_beta(const ccool_config* cfg, double beta_out[3], int* fixed_dimension);

/* Validation ------------------------------------------------------------- */

/* Runs engine and oracle. Returns CCOOL_OK when the comparison ran; inspect
 * ccool_validation_passed for the verdict. */
CCOOL_API ccool_status ccool_validate(const ccool_config* cfg, ccool_validation** out);
CCOOL_API int ccool_validation_passed(const ccool_validation* v);
CCOOL_API double ccool_validation_max_deviation(const ccool_validation* v);
CCOOL_API size_t ccool_validation_rows(const ccool_validation* v);
CCOOL_API ccool_status ccool_validation_get_row(const ccool_validation* v, size_t index, ccool_validation_row* out);
CCOOL_API void ccool_validation_free(ccool_validation* v);

#ifdef __cplusplus
}
#endif

#endif /* CCOOL_H */
