#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dnb/boundary.hpp"
#include "dnb/symbol.hpp"
#include "dnb/toeplitz.hpp"

namespace dnb {

struct Spectrum {
    std::vector<double> values;  // ascending
    double tolerance = 0.0;      // absolute accuracy bound of each value
};

/// All eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations.
/// Deterministic. Throws Error{NoConvergence} if the sweep budget runs out.
Spectrum eigenvalues(const HermitianMatrix& h);

/// Smallest eigenvalue of a - b. a >= b holds iff the result is >= -tol.
double psd_gap(const HermitianMatrix& a, const HermitianMatrix& b);

struct BracketReport {
    std::size_t size = 0, size_left = 0, size_right = 0;
    // lambda_min(NN(L1) + NN(L2)) - inf of the symbol
    double floor_nn = 0.0;
    // lambda_min((0N(L1) + N0(L2)) - (NN(L1) + NN(L2)))
    double nn_vs_0n = 0.0;
    // lambda_min(T_L - (0N(L1) + N0(L2)))
    double lower = 0.0;
    // lambda_min((0D(L1) + D0(L2)) - T_L)
    double upper = 0.0;
    double norm = 0.0;  // ||T_L||_inf
    double tol = 0.0;
    bool floor_ok = false, nn_ok = false, lower_ok = false, upper_ok = false;

    bool all_ok() const noexcept { return floor_ok && nn_ok && lower_ok && upper_ok; }
};

/// Evaluates the bracketing chain (sizes >= 2N+1, or >= 2N for ClassicNeumann)
///   inf g <= NN(L1)+NN(L2) <= 0N(L1)+N0(L2) <= T_L <= 0D(L1)+D0(L2)
/// with `neumann` in place of the modified Neumann condition (ModifiedNeumann
/// or ClassicNeumann). The Dirichlet side is derived from the Neumann side by
/// dirichlet_from_neumann. Verdicts compare each margin against -tol.
BracketReport check_bracketing(const SymbolSpec& spec, std::size_t size_left, std::size_t size_right,
                               double tol, BoundaryKind neumann = BoundaryKind::ModifiedNeumann);
BracketReport check_bracketing(const ScaledSymbol& symbol, std::size_t size_left,
                               std::size_t size_right, double tol,
                               BoundaryKind neumann = BoundaryKind::ModifiedNeumann);

/// The N unit vectors (k^j e^{-i E_i k})_{k=1..L}, j < alpha_i, spanning the
/// kernel of the (N, N) restriction. Ordered by factor, then by j.
std::vector<std::vector<cplx>> kernel_basis(const SymbolSpec& spec, std::size_t size);

/// prod_i prod_{j<alpha_i} j! * prod_{i<k} |z_i - z_k|^{alpha_i alpha_k}, the
/// modulus of the determinant with columns (m^j z_i^m)_{m=1..N}.
/// Throws Error{DuplicateNode} when two nodes are within 1e-12.
double confluent_vandermonde_abs(std::span<const cplx> nodes, std::span<const int> multiplicities);

/// Shift E~ with dist({2 pi k / L - E~ mod 2 pi}, {E_i}) >= 2 pi / (2^n L).
double grid_shift(std::span<const double> angles, std::size_t size);

/// min_{i,k} circular distance between E_i and 2 pi k / L - shift, k = 1..L.
double grid_distance(std::span<const double> angles, std::size_t size, double shift);

/// min_k g(2 pi k / L - shift)
double grid_symbol_min(const SymbolSpec& spec, std::size_t size, double shift);

struct GapPoint {
    std::size_t size = 0;
    int kernel_count = 0;
    double gap = 0.0;   // lambda_{N+1} of the (N, N) restriction
    double norm = 0.0;  // ||T^{NN}||_inf
};

/// Kernel dimension and lambda_{N+1} of build_restricted(spec, L, N, N).
/// Eigenvalues with |lambda| <= 1e-9 ||T||_inf count as kernel.
/// Throws Error{KernelMismatch} if the count differs from N.
GapPoint spectral_gap(const SymbolSpec& spec, std::size_t size);

struct GapReport {
    std::vector<GapPoint> points;  // in input order
    double slope = 0.0;            // least squares of log gap against log L
    double intercept = 0.0;
    std::size_t fit_points = 0;
    int alpha_max = 0;
    double constant = 0.0;  // min over L of gap * L^{2 alpha_max}
};

/// Runs spectral_gap for every size (concurrently) and fits the log-log slope
/// over sizes L >= 4N, or over all sizes when fewer than two qualify.
GapReport gap_scan(const SymbolSpec& spec, std::span<const std::size_t> sizes);

}  // namespace dnb
