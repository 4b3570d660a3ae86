/* C interface to the isominimal library.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Every fallible call returns an isomin_status; on failure a thread-local
 * message is available from isomin_last_error() until the next call on the
 * same thread.
 */
#ifndef ISOMIN_ISOMIN_H
#define ISOMIN_ISOMIN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ISOMIN_BUILDING_LIBRARY)
#    define ISOMIN_API __declspec(dllexport)
#  else
#    define ISOMIN_API __declspec(dllimport)
#  endif
#else
#  define ISOMIN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as CLI exit codes. */
typedef enum isomin_status {
  ISOMIN_OK = 0,
  ISOMIN_ERR_INTERNAL = 1,
  ISOMIN_ERR_CONFIG = 2,  /* bad argument or configuration */
  ISOMIN_ERR_NUMERIC = 3  /* numerical failure (no convergence, focal point, complex roots) */
} isomin_status;

typedef enum isomin_format { ISOMIN_FORMAT_JSON = 0, ISOMIN_FORMAT_CSV = 1 } isomin_format;

ISOMIN_API const char* isomin_version(void);
ISOMIN_API const char* isomin_last_error(void);

/* ---- runs: analyze / verify / catalog --------------------------------- */

typedef struct isomin_config isomin_config;
typedef struct isomin_report isomin_report;

ISOMIN_API isomin_status isomin_config_create(isomin_config** out);
ISOMIN_API void isomin_config_destroy(isomin_config* cfg);

/* Keys: command (analyze|verify|catalog), surface (equator|cartan|
 * clifford-1-3|clifford-2-2), t (radians or "pi/8"), samples, seed, tol,
 * trials, identity (g2|g3|vandermonde|i-closed|i-sign|dpsi|recover), height,
 * output, format (json|csv), workers, timing (on|off). */
ISOMIN_API isomin_status isomin_config_set(isomin_config* cfg, const char* key, const char* value);

/* Runs the configured command. On ISOMIN_OK *out receives a report whose
 * exit code is 0 (all checks passed) or 3 (a check or identity failed).
 * Configuration errors return ISOMIN_ERR_CONFIG; an analysis that cannot
 * complete returns ISOMIN_ERR_NUMERIC. No report is produced on error. */
ISOMIN_API isomin_status isomin_run(const isomin_config* cfg, isomin_report** out);

ISOMIN_API int isomin_report_exit_code(const isomin_report* report);
/* Rendered report; the pointer stays valid until the report is destroyed. */
ISOMIN_API const char* isomin_report_text(const isomin_report* report, isomin_format format);
/* Format selected in the configuration the report was produced from. */
ISOMIN_API isomin_format isomin_report_format(const isomin_report* report);
ISOMIN_API void isomin_report_destroy(isomin_report* report);

/* ---- point-level geometry --------------------------------------------- */

typedef struct isomin_surface isomin_surface;

typedef struct isomin_invariants {
  double lambdas[4]; /* ascending principal curvatures */
  double f1, f2, f3, f4;
  double S, K, R;
  int g;
  int multiplicities[4]; /* first g entries used, descending curvature order */
  int has_theta0;
  double theta0;
  double theta0_residual;
} isomin_invariants;

/* name: equator | cartan | clifford-1-3 | clifford-2-2; t is used (and
 * required in (0, pi/4)) for cartan only. */
ISOMIN_API isomin_status isomin_surface_create(const char* name, double t, isomin_surface** out);
ISOMIN_API void isomin_surface_destroy(isomin_surface* s);
ISOMIN_API double isomin_surface_level(const isomin_surface* s);
ISOMIN_API isomin_status isomin_surface_project(const isomin_surface* s, const double x0[6], double tol,
                                                int max_iter, double p_out[6]);
ISOMIN_API isomin_status isomin_surface_invariants(const isomin_surface* s, const double p[6],
                                                   double cluster_tol, isomin_invariants* out);

/* ---- invariant recovery ------------------------------------------------ */

/* Real roots (ascending, repeated roots repeated) of the quartic whose
 * power sums are p1, p2, p3 and whose product of roots is e4. */
ISOMIN_API isomin_status isomin_recover_curvatures(double p1, double p2, double p3, double e4,
                                                   double roots_out[4]);

#ifdef __cplusplus
}
#endif

#endif /* ISOMIN_ISOMIN_H */
