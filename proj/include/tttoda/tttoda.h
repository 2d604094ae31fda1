/* C interface to the tt*-Toda library. All functions return TTTODA_OK (0) or
 * one of the error codes below; tttoda_last_error() gives the message of the
 * most recent failure on the calling thread. */
#ifndef TTTODA_H
#define TTTODA_H

#ifdef __cplusplus
extern "C" {
#endif

enum {
    TTTODA_OK = 0,
    TTTODA_E_USAGE = 1,      /* bad argument or option */
    TTTODA_E_DOMAIN = 2,     /* outside the region, resonant point, wrong case */
    TTTODA_E_STRUCTURE = 3,  /* matrix construction self-check failed */
    TTTODA_E_ODE = 4,        /* blow-up, step underflow, signal below noise */
    TTTODA_E_QUADRATURE = 5  /* non-convergent quadrature or series */
};

const char* tttoda_version(void);
/* Version of the JSON report layout (docs/report.schema.json). */
const char* tttoda_schema_version(void);
const char* tttoda_last_error(void);

/* ---- direct evaluations ---- */

/* Stokes data s1, s2 from the asymptotic exponents. */
int tttoda_stokes_from_gamma(double gamma0, double gamma1, double* s1, double* s2);
/* rho of the global solution; interior points only. */
int tttoda_global_rho(double gamma0, double gamma1, double* rho0, double* rho1);
/* 0 interior, 1..3 edges E1..E3, 4..6 vertices V1..V3. */
int tttoda_classify(double gamma0, double gamma1, int* kase);
/* Connection matrix D1 of the global solution at t = 1 as 16 row-major complex
 * entries (re, im interleaved, 32 doubles). Resonant points give D1flat. */
int tttoda_connection_matrix(double gamma0, double gamma1, double* out32);

/* Barnes integral g0(s) for exponents (0, a1, a2, a3). route: "series",
 * "contour", "triple" or "laplace". */
int tttoda_g0(double a1, double a2, double a3, double s_re, double s_im, const char* route, double* re,
              double* im);

/* ---- Toda trajectories ---- */

typedef struct tttoda_trajectory tttoda_trajectory;

/* Inward integration from the large-x data of (s1, s2), x1 -> x0. */
int tttoda_integrate_inward(double s1, double s2, double x1, double x0, tttoda_trajectory** out);
int tttoda_trajectory_size(const tttoda_trajectory* t, int* n);
/* Sample i as (x, w0, w1, dw0, dw1). */
int tttoda_trajectory_sample(const tttoda_trajectory* t, int i, double* out5);
/* gamma-hat, rho-hat from the small-x window [x0, 10 x0]. */
int tttoda_trajectory_fit_small(const tttoda_trajectory* t, double* gamma2, double* rho2);
void tttoda_trajectory_free(tttoda_trajectory* t);

/* ---- command reports ---- */

typedef struct tttoda_options tttoda_options;
typedef struct tttoda_report tttoda_report;

int tttoda_options_new(tttoda_options** out);
/* Keys use underscores (x1, perturb_rho, resonant_case, ...). Numeric lists
 * are space or comma separated. Setting a key twice overwrites it. */
int tttoda_options_set(tttoda_options* o, const char* key, const char* value);
void tttoda_options_free(tttoda_options* o);

/* Runs correspond, monodromy, connect or barnes. A report is produced even
 * when the command fails; the return value is its exit code. */
int tttoda_run(const char* command, const tttoda_options* o, tttoda_report** out);
/* Pretty-printed JSON, valid until the report is freed. */
const char* tttoda_report_json(const tttoda_report* r);
/* Trajectory CSV (connect only), "" otherwise. */
const char* tttoda_report_csv(const tttoda_report* r);
int tttoda_report_passed(const tttoda_report* r);
void tttoda_report_free(tttoda_report* r);

#ifdef __cplusplus
}
#endif

#endif
