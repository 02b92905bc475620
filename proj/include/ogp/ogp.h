/*
 * ogp -- non-Abelian off-diagonal geometric phases in a four-qubit XY/DM ring.
 *
 * C API of the shared library. All objects are opaque handles created and
 * released through the functions below; every fallible call returns an
 * ogp_status and leaves a human-readable detail in ogp_last_error() (which
 * is thread local). Complex data crosses the boundary as interleaved
 * doubles [re, im] in row-major order.
 */

#ifndef OGP_H
#define OGP_H

#include <stddef.h>

#if defined(_WIN32)
#  define OGP_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define OGP_API __attribute__((visibility("default")))
#else
#  define OGP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ogp_status {
  OGP_OK = 0,
  OGP_ERR_NULL_ARGUMENT,
  OGP_ERR_INVALID_ARGUMENT,
  OGP_ERR_DIMENSION_MISMATCH,
  OGP_ERR_NOT_HERMITIAN,
  OGP_ERR_NOT_UNITARY,
  OGP_ERR_BAD_FRAME,
  OGP_ERR_DEGENERATE_PATH,
  OGP_ERR_MISSING_SIGMA,
  OGP_ERR_SINGULAR_T,
  OGP_ERR_FIRST_PULSE_NOT_OFF_DIAGONAL,
  OGP_ERR_STATE_OUTSIDE_SUBSPACE,
  OGP_ERR_PARSE,
  OGP_ERR_IO,
  OGP_ERR_CONVERGENCE,
  OGP_ERR_INTERNAL
} ogp_status;

OGP_API const char* ogp_status_name(ogp_status status);
OGP_API const char* ogp_last_error(void);
OGP_API const char* ogp_version(void);

/* ---------------- dense complex matrices ---------------- */

typedef struct ogp_matrix ogp_matrix;

/* data may be NULL for a zero matrix, otherwise rows*cols [re,im] pairs. */
OGP_API ogp_status ogp_matrix_create(size_t rows, size_t cols, const double* data,
                                     ogp_matrix** out);
OGP_API void ogp_matrix_free(ogp_matrix* m);
OGP_API size_t ogp_matrix_rows(const ogp_matrix* m);
OGP_API size_t ogp_matrix_cols(const ogp_matrix* m);
OGP_API ogp_status ogp_matrix_get(const ogp_matrix* m, size_t row, size_t col,
                                  double* re, double* im);
/* buffer must hold rows*cols*2 doubles. */
OGP_API ogp_status ogp_matrix_copy_data(const ogp_matrix* m, double* buffer);

/* Rank classification of geometric-phase results. */
typedef enum ogp_definedness {
  OGP_GP_FULL = 0,
  OGP_GP_PARTIAL = 1,
  OGP_GP_UNDEFINED = 2
} ogp_definedness;

/* Polar projection m -> pinv(sqrt(m m^+)) m; pass rank_tol <= 0 for the
 * default relative threshold 1e-10. */
OGP_API ogp_status ogp_polar_project(const ogp_matrix* m, double rank_tol,
                                     ogp_matrix** isometry, int* rank,
                                     ogp_definedness* status);

/* ---------------- ring model ---------------- */

/* XY (j) and z-axis DM (d) couplings per bond of the cyclic chain. */
typedef struct ogp_couplings {
  double j12, j23, j34, j41;
  double d12, d23, d34, d41;
} ogp_couplings;

/* A pulse: couplings plus the integrated envelope area. */
typedef struct ogp_pulse {
  ogp_couplings couplings;
  double area;
} ogp_pulse;

/* Singular values of the 2x2 coupling matrix T, descending. */
OGP_API ogp_status ogp_t_singular_values(const ogp_couplings* c, double out[2]);

OGP_API ogp_status ogp_full_hamiltonian(const ogp_couplings* c, ogp_matrix** out);
OGP_API ogp_status ogp_effective_hamiltonian(const ogp_couplings* c, ogp_matrix** out);

typedef struct ogp_evolution ogp_evolution;

/* Closed-form propagator of one pulse on the single-excitation subspace.
 * strict_positive_s rejects a singular T. */
OGP_API ogp_status ogp_evolve(const ogp_pulse* pulse, int strict_positive_s,
                              ogp_evolution** out);
/* Two-pulse propagator; the first pulse must satisfy cos(area*S) ~ 0 within
 * off_diagonal_tol (<= 0 for the default 1e-8). */
OGP_API ogp_status ogp_compose(const ogp_pulse* first, const ogp_pulse* second,
                               double off_diagonal_tol, ogp_evolution** out);
OGP_API void ogp_evolution_free(ogp_evolution* ev);
OGP_API ogp_status ogp_evolution_matrix(const ogp_evolution* ev, ogp_matrix** out);
/* k, l in {1, 2}; the 2x2 block mapping subspace l to subspace k. */
OGP_API ogp_status ogp_evolution_block(const ogp_evolution* ev, int k, int l,
                                       ogp_matrix** out);

/* ---------------- geometric phases ---------------- */

typedef struct ogp_gp ogp_gp;

OGP_API void ogp_gp_free(ogp_gp* gp);
OGP_API ogp_status ogp_gp_matrix(const ogp_gp* gp, ogp_matrix** out);
OGP_API int ogp_gp_rank(const ogp_gp* gp);
OGP_API ogp_definedness ogp_gp_status(const ogp_gp* gp);

/* Sector of the kappa = 1 phase: (-1)^c Q Z^d Q^+ with Z = diag(1,-1). */
typedef struct ogp_sector_label {
  int c;
  int d;
  double conjugating_unitary[8]; /* 2x2 interleaved */
} ogp_sector_label;

/* labels_present is 0 at partially defined / undefined points. label1/label2
 * may be NULL when the caller does not need them. */
OGP_API ogp_status ogp_gp_kappa1(const ogp_pulse* pulse, double rank_tol,
                                 ogp_gp** gp1, ogp_gp** gp2,
                                 ogp_sector_label* label1, ogp_sector_label* label2,
                                 int* labels_present);
OGP_API ogp_status ogp_gp_kappa2_single(const ogp_pulse* pulse, double rank_tol,
                                        ogp_gp** gp12, ogp_gp** gp21);
OGP_API ogp_status ogp_gp_kappa2_composed(const ogp_pulse* first,
                                          const ogp_pulse* second, double rank_tol,
                                          ogp_gp** gp12, ogp_gp** gp21);

/* Two-pulse sequence realizing an arbitrary SU(2) kappa = 2 phase. target is
 * 2x2 interleaved; distance reports the sign-aligned Frobenius residual.
 * Returns OGP_ERR_CONVERGENCE (with outputs filled) if tol is not reached. */
OGP_API ogp_status ogp_su2_target(const double target[8], double tol,
                                  ogp_pulse* first, ogp_pulse* second,
                                  double* distance);

/* ---------------- area sweeps ---------------- */

typedef struct ogp_sweep ogp_sweep;

typedef struct ogp_sweep_row {
  double area;
  int cos_sign_1, cos_sign_2; /* signs of cos(area * s_i), descending s */
  int c, d;
  ogp_definedness kappa1_status_1, kappa1_status_2, kappa2_status;
  int boundary; /* bitmask: 1 = kappa1 boundary, 2 = kappa2 singular point */
} ogp_sweep_row;

/* Classifies a uniform grid [start, stop] (stop included) and inserts
 * bisection-refined boundary rows. zero_tol <= 0 selects the default 1e-9. */
OGP_API ogp_status ogp_sweep_run(const ogp_couplings* c, double start, double stop,
                                 double step, double zero_tol, ogp_sweep** out);
OGP_API void ogp_sweep_free(ogp_sweep* s);
OGP_API size_t ogp_sweep_size(const ogp_sweep* s);
OGP_API ogp_status ogp_sweep_get(const ogp_sweep* s, size_t index, ogp_sweep_row* out);

/* ---------------- frame paths ---------------- */

typedef struct ogp_path_set ogp_path_set;

OGP_API ogp_status ogp_path_set_create(ogp_path_set** out);
OGP_API void ogp_path_set_free(ogp_path_set* ps);
OGP_API ogp_status ogp_path_set_add_file(ogp_path_set* ps, const char* filename);
OGP_API ogp_status ogp_path_set_add_json(ogp_path_set* ps, const char* json_text);
OGP_API size_t ogp_path_set_size(const ogp_path_set* ps);
/* Paths are indexed from 1 in the order they were added. */
OGP_API ogp_status ogp_path_set_transport(const ogp_path_set* ps, size_t l,
                                          ogp_matrix** out);
OGP_API ogp_status ogp_path_set_sigma(const ogp_path_set* ps, size_t k, size_t l,
                                      ogp_matrix** out);
/* Off-diagonal phase of the cyclic chain sigma_{l1 lk} ... sigma_{l2 l1}. */
OGP_API ogp_status ogp_path_set_gp(const ogp_path_set* ps, const size_t* chain,
                                   size_t chain_len, double rank_tol, ogp_gp** out);
/* Validates that the initial frames decompose the ambient space. */
OGP_API ogp_status ogp_path_set_check_decomposition(const ogp_path_set* ps,
                                                    double ortho_tol);

/* ---------------- interferometer ---------------- */

/* Cross-coupling generator parameters of the variable unitary W. */
typedef struct ogp_w_params {
  double j13, j24;
  double d13, d24;
  double e_shift;
  double b_area;
} ogp_w_params;

/* psi: 4 complex amplitudes (8 doubles) of a normalized state in subspace l. */
OGP_API ogp_status ogp_run_ancilla(const ogp_evolution* ev, int l, const double psi[8],
                                   const ogp_w_params* w, double* probability);
OGP_API ogp_status ogp_run_direct(const ogp_evolution* ev, int l, const double psi[8],
                                  const ogp_w_params* w, double* probability);

typedef enum ogp_recover_mode {
  OGP_RECOVER_ANCILLA = 0,
  OGP_RECOVER_DIRECT = 1
} ogp_recover_mode;

typedef struct ogp_recover_options {
  long budget;                 /* objective evaluations, default 20000 */
  unsigned long long seed;     /* restart seed, default 0 */
  double rank_tol;             /* <= 0 for default */
  int refine_b_area;           /* nonzero: refine the generator area too */
  int restarts;                /* default 16 */
} ogp_recover_options;

OGP_API void ogp_recover_options_default(ogp_recover_options* opts);

typedef struct ogp_recovery ogp_recovery;

/* probes: n_probes states of 8 doubles each; NULL with n_probes = 0 selects
 * the built-in probe set for the mode. Returns OGP_ERR_CONVERGENCE with the
 * handle still populated when the optimizer did not settle. */
OGP_API ogp_status ogp_recover(const ogp_evolution* ev, int l, ogp_recover_mode mode,
                               const double* probes, size_t n_probes,
                               const ogp_recover_options* opts, ogp_recovery** out);
OGP_API void ogp_recovery_free(ogp_recovery* r);
OGP_API ogp_status ogp_recovery_params(const ogp_recovery* r, ogp_w_params* out);
OGP_API ogp_status ogp_recovery_estimate(const ogp_recovery* r, ogp_matrix** out);
OGP_API ogp_status ogp_recovery_ground_truth(const ogp_recovery* r, ogp_matrix** out);
OGP_API double ogp_recovery_distance_raw(const ogp_recovery* r);
OGP_API double ogp_recovery_distance_aligned(const ogp_recovery* r);
OGP_API double ogp_recovery_objective(const ogp_recovery* r);
OGP_API long ogp_recovery_evaluations(const ogp_recovery* r);
OGP_API int ogp_recovery_converged(const ogp_recovery* r);
OGP_API size_t ogp_recovery_probe_count(const ogp_recovery* r);
OGP_API ogp_status ogp_recovery_probe_probability(const ogp_recovery* r, size_t index,
                                                  double* probability);
OGP_API size_t ogp_recovery_trace_size(const ogp_recovery* r);
OGP_API ogp_status ogp_recovery_trace_get(const ogp_recovery* r, size_t index,
                                          long* evaluation, double* objective);

/* ---------------- selftest ---------------- */

typedef void (*ogp_selftest_callback)(const char* suite, int passed,
                                      double worst_error, double tolerance,
                                      void* user);

/* Runs every invariant suite; tol_override > 0 replaces each suite's own
 * tolerance. Returns the number of failed suites through *failures. */
OGP_API ogp_status ogp_selftest(unsigned long long seed, double tol_override,
                                ogp_selftest_callback callback, void* user,
                                int* failures);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* OGP_H */
