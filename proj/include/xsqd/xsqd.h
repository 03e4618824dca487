/*
 * xsqd: super quantum discord and quantum discord of two-qubit X-states.
 *
 * C interface to the shared library. All functions return an xsqd_status;
 * on failure a human-readable message is available from xsqd_last_error()
 * until the next failing call on the same thread.
 *
 * Measurement strengths are plain doubles: any finite x >= 0 is a weak
 * measurement, and +INFINITY selects the projective limit (tanh x = 1).
 */
#ifndef XSQD_XSQD_H
#define XSQD_XSQD_H

#include <stdint.h>

#if defined(_WIN32)
#  if defined(XSQD_BUILDING_LIBRARY)
#    define XSQD_API __declspec(dllexport)
#  else
#    define XSQD_API __declspec(dllimport)
#  endif
#else
#  define XSQD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  XSQD_OK = 0,
  XSQD_ERR_NOT_X_SHAPED = 1,
  XSQD_ERR_NOT_HERMITIAN = 2,
  XSQD_ERR_TRACE_NOT_ONE = 3,
  XSQD_ERR_NOT_POSITIVE = 4,
  XSQD_ERR_DOMAIN = 5,
  XSQD_ERR_PARSE = 6,
  XSQD_ERR_IO = 7,
  XSQD_ERR_INVALID_ARGUMENT = 8,
  XSQD_ERR_INTERNAL = 9
} xsqd_status;

typedef struct xsqd_state xsqd_state;

typedef struct {
  double a11, a22, a33, a44;
  double a14_re, a14_im;
  double a23_re, a23_im;
} xsqd_entries;

typedef struct {
  double a3, b3, c3;
  double c1_re, c1_im;
  double c2_re, c2_im;
  double d1, d2, d3, d4;
} xsqd_params;

typedef struct {
  int grid_points;        /* >= 6, default 2048 */
  double refine_tolerance; /* > 0, default 1e-10 */
  int max_refine_iters;   /* >= 1, default 200 */
} xsqd_minimizer_config;

typedef struct {
  int unitary_grid; /* >= 24, default 20000 */
  int refine;       /* nonzero to refine the best grid points */
  uint64_t seed;
} xsqd_oracle_config;

typedef struct {
  double value;
  double z1, z2, z3;
  double s_w_min;
  double p_plus, p_minus;
  double s_b, s_ab;
  int projective;
} xsqd_result;

XSQD_API const char* xsqd_status_string(xsqd_status status);
XSQD_API const char* xsqd_last_error(void);

XSQD_API void xsqd_minimizer_config_default(xsqd_minimizer_config* cfg);
XSQD_API void xsqd_oracle_config_default(xsqd_oracle_config* cfg);

/* State construction. *out receives a new handle owned by the caller. */
XSQD_API xsqd_status xsqd_state_from_entries(const xsqd_entries* entries, xsqd_state** out);
/* Row-major 4x4 real and imaginary parts. */
XSQD_API xsqd_status xsqd_state_from_matrix(const double re[16], const double im[16],
                                            xsqd_state** out);
XSQD_API xsqd_status xsqd_state_from_json(const char* text, xsqd_state** out);
XSQD_API xsqd_status xsqd_state_load(const char* path, xsqd_state** out);
XSQD_API void xsqd_state_free(xsqd_state* state);

/* Queries. */
XSQD_API xsqd_status xsqd_state_entries(const xsqd_state* state, xsqd_entries* out);
XSQD_API xsqd_status xsqd_state_params(const xsqd_state* state, xsqd_params* out);
/* Descending eigenvalues of the 4x4 state. */
XSQD_API xsqd_status xsqd_state_spectrum(const xsqd_state* state, double out[4]);
/* Row-major 2x2 reduced states; imaginary parts go to the *_im arrays. */
XSQD_API xsqd_status xsqd_state_reduced(const xsqd_state* state, double rho_a_re[4],
                                        double rho_a_im[4], double rho_b_re[4],
                                        double rho_b_im[4]);
XSQD_API xsqd_status xsqd_state_entropy(const xsqd_state* state, double* out);
XSQD_API xsqd_status xsqd_state_mutual_information(const xsqd_state* state, double* out);

/* Local bit-flip channel on subsystem B; p is the no-flip probability. */
XSQD_API xsqd_status xsqd_apply_bitflip(const xsqd_state* state, double p, xsqd_state** out);

/* Discord. cfg may be NULL for defaults. */
XSQD_API xsqd_status xsqd_super_discord(const xsqd_state* state, double x,
                                        const xsqd_minimizer_config* cfg, xsqd_result* out);
XSQD_API xsqd_status xsqd_quantum_discord(const xsqd_state* state,
                                          const xsqd_minimizer_config* cfg, xsqd_result* out);
XSQD_API xsqd_status xsqd_oracle_discord(const xsqd_state* state, double x,
                                         const xsqd_oracle_config* cfg, xsqd_result* out);

XSQD_API xsqd_status xsqd_werner_closed_form(double z, double x, double* out);
XSQD_API xsqd_status xsqd_bell_diagonal_closed_form(double c1, double c2, double c3, double x,
                                                    double* out);

#ifdef __cplusplus
}
#endif

#endif /* XSQD_XSQD_H */
