#ifndef QPART_H
#define QPART_H

/* C interface to the quantum energy partition library.
 *
 * All functions return qpart_status; QPART_OK means every output parameter
 * was written. On any other status the outputs are untouched and
 * qpart_last_error() returns a message describing the failure. Handles are
 * opaque and owned by the caller via the matching *_destroy call.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qpart_status {
  QPART_OK = 0,
  QPART_ERR_INVALID = 1,   /* bad argument or configuration */
  QPART_ERR_DOMAIN = 2,    /* input outside the mathematical domain */
  QPART_ERR_DIVERGENT = 3, /* requested quantity has no finite value */
  QPART_ERR_ACCURACY = 4,  /* quadrature failed to reach its tolerance */
  QPART_ERR_NUMERICAL = 5, /* linear algebra or other numerical failure */
} qpart_status;

/* Message for the most recent failing call on this thread; empty string if
 * none. The pointer stays valid until the next failing call on the thread. */
const char* qpart_last_error(void);

typedef struct qpart_kernel qpart_kernel;
typedef struct qpart_system qpart_system;
typedef struct qpart_density qpart_density;
typedef struct qpart_bath qpart_bath;
typedef struct qpart_modes qpart_modes;

/* model is "drude", "strict_ohmic", or "algebraic_cutoff"; omega_c is
 * ignored for strict_ohmic. */
qpart_status qpart_kernel_create(const char* model, double gamma0, double omega_c,
                                 qpart_kernel** out);
void qpart_kernel_destroy(qpart_kernel* k);

/* gamma_hat(z) at z = z_re + i z_im. */
qpart_status qpart_kernel_laplace(const qpart_kernel* k, double z_re, double z_im, double* out_re,
                                  double* out_im);
qpart_status qpart_spectral_density(const qpart_kernel* k, double omega, double* out);
qpart_status qpart_uv_divergent(const qpart_kernel* k, int* out);

/* omega0 = 0 selects the free particle. */
qpart_status qpart_system_create(const qpart_kernel* k, double mass, double omega0,
                                 qpart_system** out);
void qpart_system_destroy(qpart_system* s);

qpart_status qpart_susceptibility(const qpart_system* s, double omega, double* out_re,
                                  double* out_im);
qpart_status qpart_susceptibility_imag_axis(const qpart_system* s, double omega, double* out);

/* Mean kinetic energy hbar*omega/4 * coth(hbar*omega / (2 kB T)) of one
 * harmonic mode, with the T = 0 and omega = 0 limits built in. */
qpart_status qpart_kinetic_per_mode(double temperature, double hbar, double kB, double omega,
                                    double* out);

typedef struct qpart_grid_spec {
  double omega_max;  /* top of the grid, > 0 */
  size_t n_points;   /* >= 2 */
  int log_spacing;   /* 0 linear, 1 logarithmic */
  double omega_min;  /* first point when log_spacing; 0 selects the default */
} qpart_grid_spec;

typedef struct qpart_quad_spec {
  double tolerance;  /* absolute tolerance for adaptive quadrature */
  double omega_max;  /* 0 selects automatic cutoff; > 0 is a hard cut */
  size_t max_intervals;
} qpart_quad_spec;

typedef struct qpart_energy {
  double kinetic_energy;
  double p_squared;   /* 2 M Ek */
  double quad_error;  /* quadrature error estimate including tail */
  double omega_cut;   /* upper integration limit actually used */
  int truncated;      /* 1 when a hard or policy cutoff replaced the tail */
} qpart_energy;

qpart_status qpart_partition_density(const qpart_system* s, const qpart_grid_spec* grid,
                                     qpart_density** out);
void qpart_density_destroy(qpart_density* d);
qpart_status qpart_density_size(const qpart_density* d, size_t* out);
qpart_status qpart_density_point(const qpart_density* d, size_t i, double* out_omega,
                                 double* out_value);
qpart_status qpart_density_tail_exponent(const qpart_density* d, int* out);
/* Trapezoid mass of the sampled grid plus the closed-form tail. */
qpart_status qpart_density_norm(const qpart_density* d, double* out);

/* Adaptive-quadrature normalization integral of P; 1 to numerical accuracy.
 * quad may be NULL for defaults. */
qpart_status qpart_normalization(const qpart_system* s, const qpart_quad_spec* quad, double* out);

/* quad may be NULL for defaults. */
qpart_status qpart_mean_kinetic_energy(const qpart_system* s, double temperature, double hbar,
                                       double kB, const qpart_quad_spec* quad, qpart_energy* out);

/* Discretize the bath on n_modes midpoints of [0, omega_max]; counter_term
 * keeps the potential positive definite. Requires omega0 > 0. */
qpart_status qpart_bath_build(const qpart_system* s, size_t n_modes, double omega_max,
                              int counter_term, qpart_bath** out);
void qpart_bath_destroy(qpart_bath* b);

qpart_status qpart_bath_modes(const qpart_bath* b, qpart_modes** out);
void qpart_modes_destroy(qpart_modes* m);
qpart_status qpart_modes_size(const qpart_modes* m, size_t* out);
qpart_status qpart_modes_point(const qpart_modes* m, size_t i, double* out_freq,
                               double* out_weight);

/* Exact finite-bath kinetic energy: sum of weights times kinetic_per_mode. */
qpart_status qpart_exact_kinetic(const qpart_modes* m, double temperature, double hbar, double kB,
                                 double* out);

/* Histogram of normal-mode weights over bins of the given width; the result
 * has compact support (tail exponent 0). */
qpart_status qpart_discrete_partition(const qpart_modes* m, double bin_width, qpart_density** out);

typedef struct qpart_report {
  char check_name[96];
  double expected;
  double computed;
  double tolerance; /* relative to |expected| */
  int passed;
} qpart_report;

typedef struct qpart_verify_options {
  double prefactor_scale; /* 1 is the correct physics */
} qpart_verify_options;

qpart_status qpart_kk_real_from_imag(const qpart_system* s, double omega, double* out);
qpart_status qpart_sum_rule_check(const qpart_system* s, const qpart_verify_options* opt,
                                  qpart_report* out);
qpart_status qpart_imag_axis_identity(const qpart_system* s, double omega, qpart_report* out);
qpart_status qpart_classical_limit_check(const qpart_system* s, double temperature, double hbar,
                                         double kB, qpart_report* out);

/* Runs the full matrix; *reports_out is allocated and owned by the caller via
 * qpart_reports_destroy. opt may be NULL for defaults. */
qpart_status qpart_default_suite(const qpart_verify_options* opt, qpart_report** reports_out,
                                 size_t* count_out);
void qpart_reports_destroy(qpart_report* reports);

#ifdef __cplusplus
}
#endif

#endif /* QPART_H */
