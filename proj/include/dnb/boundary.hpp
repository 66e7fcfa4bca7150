#pragma once

#include <cstddef>
#include <vector>

#include "dnb/symbol.hpp"
#include "dnb/toeplitz.hpp"

namespace dnb {

/// Coefficients c_0..c_N of the stencil psi_0. psi_k places them on sites
/// k..k+N, and T_g = sum_k |psi_k><psi_k|.
struct StencilVector {
    std::vector<cplx> c;

    int degree() const noexcept { return static_cast<int>(c.size()) - 1; }
};

enum class BoundaryKind { Simple, ModifiedNeumann, ModifiedDirichlet, ClassicNeumann };

enum class Side { Left, Right };

/// Convolution of the per-factor pairs (1, -e^{-iE}); c_0 = 1.
StencilVector stencil(const SymbolSpec& spec);

/// Sum over placements k in [k_first, k_last] of |psi_k><psi_k| truncated to
/// the window [0, L). Placements may start left of 0. An empty range
/// (k_first > k_last) gives the zero matrix.
HermitianMatrix rank_one_sum(const SymbolSpec& spec, std::size_t size, long k_first, long k_last);

/// Right-corner N x N block: minus (ModifiedNeumann) or plus (ModifiedDirichlet)
/// the placements that cross the right boundary, projected onto the last N sites.
/// Any other kind throws Error{InvalidArgument}.
HermitianMatrix corner_block(const SymbolSpec& spec, BoundaryKind kind);

/// The same construction at the left boundary. Equals the complex conjugate of
/// reflect_antidiagonal(corner_block(spec, kind)).
HermitianMatrix left_corner_block(const SymbolSpec& spec, BoundaryKind kind);

/// T_{g,L} with the requested corner conditions. Requires L >= 2N+1 when a
/// modified condition is involved and L >= 2N otherwise.
HermitianMatrix build_restricted(const SymbolSpec& spec, std::size_t size, BoundaryKind left,
                                 BoundaryKind right);

/// scale * (restriction of the base symbol) + shift * I; the corner blocks of
/// the modified conditions scale with the symbol, the Classic Neumann Hankel
/// corner is read from the scaled coefficients.
HermitianMatrix build_restricted(const ScaledSymbol& symbol, std::size_t size, BoundaryKind left,
                                 BoundaryKind right);

/// Toeplitz-plus-Hankel matrix: T_{f,L} plus H(i, j) = a_{-(i+j+1)} for
/// i + j <= N-1 in the left corner, or its persymmetric mirror on the right.
/// Requires L >= 2N.
HermitianMatrix classic_neumann(const BandedCoeffs& coeffs, std::size_t size, Side side);

/// Hankel corner block alone (the N x N matrix added by classic_neumann).
HermitianMatrix classic_neumann_block(const BandedCoeffs& coeffs, Side side);

/// diag(2 A11 - A11_N, 2 A22 - A22_N) where A11, A22 are the diagonal blocks
/// of `a` sized like the given Neumann blocks.
HermitianMatrix dirichlet_from_neumann(const HermitianMatrix& a, const HermitianMatrix& a11_neumann,
                                       const HermitianMatrix& a22_neumann);

}  // namespace dnb
