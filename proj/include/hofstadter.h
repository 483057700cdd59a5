/* C API for the effective-magnetic-field lattice laboratory.
 *
 * All functions return a hof_status; on failure hof_last_error() holds a
 * thread-local description. Handles are opaque and must be released with
 * their destroy function. */

#ifndef HOFSTADTER_H
#define HOFSTADTER_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  HOF_OK = 0,
  HOF_ERR_INVALID = 1,  /* broken interface contract / bad argument */
  HOF_ERR_DOMAIN = 2,   /* argument outside mathematical domain */
  HOF_ERR_CONFIG = 3,   /* inconsistent configuration */
  HOF_ERR_RANGE = 4,    /* outside a validity window */
  HOF_ERR_IO = 5,
  HOF_ERR_INTERNAL = 6
} hof_status;

/* Thread-local message for the most recent failure in this thread. */
const char* hof_last_error(void);

/* ---- flux ---------------------------------------------------------- */

/* alpha = q * lambda / (4*pi). */
hof_status hof_flux_from_wavenumber(double q, double lambda, double* alpha);

/* Nearest rational p/r with r <= r_max and |alpha - p/r| < tol.
 * *snapped is 0 when no such fraction exists (p, r then untouched). */
hof_status hof_flux_snap(double alpha, long r_max, double tol, long* p,
                         long* r, int* snapped);

/* ---- real-space Peierls Hamiltonian -------------------------------- */

typedef struct hof_hamiltonian hof_hamiltonian;

/* Rational flux when alpha_r > 0, otherwise real flux alpha_value.
 * periodic_x/periodic_y select the boundary condition per axis. */
hof_status hof_hamiltonian_create(int nx, int ny, int periodic_x,
                                  int periodic_y, long alpha_p, long alpha_r,
                                  double alpha_value, double j,
                                  hof_hamiltonian** out);
void hof_hamiltonian_destroy(hof_hamiltonian* h);
int hof_hamiltonian_dim(const hof_hamiltonian* h);
/* Ascending eigenvalues; capacity must be >= dim. */
hof_status hof_hamiltonian_eigenvalues(const hof_hamiltonian* h, double* out,
                                       size_t capacity);
/* Text dump: header `dim n_x n_y alpha_p alpha_r J`, one `row col re im`
 * line per stored upper-triangle entry, row-major. */
hof_status hof_hamiltonian_write(const hof_hamiltonian* h, const char* path);

/* ---- Harper / butterfly -------------------------------------------- */

/* Ascending eigenvalues of the r x r magnetic-Bloch matrix; out length r. */
hof_status hof_harper_eigenvalues(long p, long r, double kx, double ky,
                                  double j, double* out);

/* ---- Wannier calibration ------------------------------------------- */

hof_status hof_gamma_x(double depth, double* out);
hof_status hof_gamma_y(double depth, double alpha, double* out);
hof_status hof_hopping_j(double depth, double* j_over_er);

/* ---- laser geometry ------------------------------------------------- */

hof_status hof_raman_rabi(double omega_e, double omega_g, double delta_r,
                          double* out);
/* Angles in radians; residuals of the x- and y-momentum constraints. */
hof_status hof_solve_angles(double q, double delta_prime, double kg,
                            double* phi_e, double* phi_g, double* residual_x,
                            double* residual_y);
hof_status hof_alpha_window(double delta_prime, double kg, double lambda,
                            double* alpha_min, double* alpha_max);

/* ---- command runner -------------------------------------------------
 * Same surface as the CLI subcommands: butterfly, spectrum, evolve,
 * wannier, laser-angles, gutzwiller. keys/values are n parallel arrays of
 * parameter overrides; data files land in output_dir. */
hof_status hof_run(const char* command, const char* const* keys,
                   const char* const* values, size_t n,
                   const char* output_dir);

#ifdef __cplusplus
}
#endif

#endif /* HOFSTADTER_H */
