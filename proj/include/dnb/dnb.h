/*
 * dnb.h - C interface to the dnbracket library.
 *
 * Boundary conditions for banded Hermitian Toeplitz matrices with product
 * symbols g(x) = prod (2 - 2cos(x - E_i))^{alpha_i}: matrix construction,
 * Dirichlet-Neumann bracketing certification and spectral gap scans.
 *
 * All functions returning dnb_status report failures through the code and a
 * thread-local message readable with dnb_last_error(). Handles are opaque
 * and owned by the caller; release them with the matching *_free function.
 * Complex matrix entries are exchanged as separate real/imaginary arrays.
 */
#ifndef DNB_DNB_H
#define DNB_DNB_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(DNB_BUILDING_LIBRARY)
#    define DNB_API __declspec(dllexport)
#  else
#    define DNB_API __declspec(dllimport)
#  endif
#else
#  define DNB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dnb_status {
    DNB_OK = 0,
    DNB_E_INVALID_ARGUMENT = 1,
    DNB_E_DUPLICATE_ANGLE = 2,
    DNB_E_INVALID_MULTIPLICITY = 3,
    DNB_E_NON_REAL_SYMBOL = 4,
    DNB_E_OUT_OF_CLASS = 5,
    DNB_E_SIZE_TOO_SMALL = 6,
    DNB_E_DIMENSION_MISMATCH = 7,
    DNB_E_NO_CONVERGENCE = 8,
    DNB_E_KERNEL_MISMATCH = 9,
    DNB_E_DUPLICATE_NODE = 10,
    DNB_E_BUFFER_TOO_SMALL = 11,
    DNB_E_INTERNAL = 12
} dnb_status;

typedef enum dnb_boundary {
    DNB_BC_SIMPLE = 0,
    DNB_BC_MODIFIED_NEUMANN = 1,
    DNB_BC_MODIFIED_DIRICHLET = 2,
    DNB_BC_CLASSIC_NEUMANN = 3
} dnb_boundary;

typedef struct dnb_symbol dnb_symbol;
typedef struct dnb_matrix dnb_matrix;

typedef struct dnb_penta_info {
    double scale; /* a2 */
    double shift; /* a0 - a2 (4 + 2cos 2b) */
    double angle; /* b in [0, pi] */
} dnb_penta_info;

typedef struct dnb_bracket_report {
    size_t size, size_left, size_right;
    double floor_nn; /* lambda_min(NN + NN) - inf symbol */
    double nn_vs_0n; /* lambda_min((0N + N0) - (NN + NN)) */
    double lower;    /* lambda_min(T - (0N + N0)) */
    double upper;    /* lambda_min((0D + D0) - T) */
    double norm;     /* max row sum of T */
    double tol;
    int floor_ok, nn_ok, lower_ok, upper_ok;
} dnb_bracket_report;

typedef struct dnb_gap_point {
    size_t size;
    int kernel_count;
    double gap;
} dnb_gap_point;

typedef struct dnb_gap_summary {
    double slope;
    double intercept;
    double constant; /* min over sizes of gap * L^(2 alpha_max) */
    int alpha_max;
    size_t fit_points;
} dnb_gap_summary;

DNB_API const char* dnb_version(void);
DNB_API const char* dnb_status_name(dnb_status status);
/* Message of the last failure on the calling thread; empty if none. */
DNB_API const char* dnb_last_error(void);

/* ---- symbols ---------------------------------------------------------- */

DNB_API dnb_status dnb_symbol_from_factors(const double* angles, const int* multiplicities, size_t count,
                                           dnb_symbol** out);
DNB_API dnb_status dnb_symbol_from_penta(double a0, double a1, double a2, dnb_symbol** out);
DNB_API void dnb_symbol_free(dnb_symbol* symbol);

/* Half-bandwidth N. */
DNB_API size_t dnb_symbol_degree(const dnb_symbol* symbol);
DNB_API size_t dnb_symbol_factor_count(const dnb_symbol* symbol);
/* Canonical (reduced into (0, 2pi]) factor i of the underlying product symbol. */
DNB_API dnb_status dnb_symbol_factor(const dnb_symbol* symbol, size_t index, double* angle, int* multiplicity);
/* Nonzero if the symbol was built from a pentadiagonal triple. */
DNB_API int dnb_symbol_is_penta(const dnb_symbol* symbol);
DNB_API dnb_status dnb_symbol_penta(const dnb_symbol* symbol, dnb_penta_info* out);
/* Writes a_{-N}..a_N; len must be at least 2N+1. */
DNB_API dnb_status dnb_symbol_coefficients(const dnb_symbol* symbol, double* re, double* im, size_t len);
DNB_API dnb_status dnb_symbol_evaluate(const dnb_symbol* symbol, double x, double* out);

/* ---- matrices --------------------------------------------------------- */

DNB_API dnb_status dnb_matrix_toeplitz(const dnb_symbol* symbol, size_t size, dnb_matrix** out);
DNB_API dnb_status dnb_matrix_circulant(const dnb_symbol* symbol, size_t size, dnb_matrix** out);
DNB_API dnb_status dnb_matrix_restricted(const dnb_symbol* symbol, size_t size, dnb_boundary left,
                                         dnb_boundary right, dnb_matrix** out);
/* T_L - (T^{0,kind}_{L1} + T^{kind,0}_{L2}) with L = L1 + L2. */
DNB_API dnb_status dnb_matrix_split_difference(const dnb_symbol* symbol, size_t size_left, size_t size_right,
                                               dnb_boundary kind, dnb_matrix** out);
DNB_API void dnb_matrix_free(dnb_matrix* matrix);
DNB_API size_t dnb_matrix_dim(const dnb_matrix* matrix);
DNB_API dnb_status dnb_matrix_entry(const dnb_matrix* matrix, size_t row, size_t col, double* re, double* im);
/* Ascending eigenvalues; len must be at least dim. */
DNB_API dnb_status dnb_matrix_eigenvalues(const dnb_matrix* matrix, double* out, size_t len);

/* ---- verification ----------------------------------------------------- */

/* kind is DNB_BC_MODIFIED_NEUMANN or DNB_BC_CLASSIC_NEUMANN. */
DNB_API dnb_status dnb_check_bracketing(const dnb_symbol* symbol, size_t size_left, size_t size_right, double tol,
                                        dnb_boundary kind, dnb_bracket_report* out);
/* Product symbols only. points must hold `count` entries. */
DNB_API dnb_status dnb_gap_scan(const dnb_symbol* symbol, const size_t* sizes, size_t count, dnb_gap_point* points,
                                dnb_gap_summary* summary);
DNB_API dnb_status dnb_grid_shift(const double* angles, size_t count, size_t size, double* out);
DNB_API dnb_status dnb_confluent_vandermonde_abs(const double* re, const double* im, const int* multiplicities,
                                                 size_t count, double* out);

#ifdef __cplusplus
}
#endif

#endif /* DNB_DNB_H */
