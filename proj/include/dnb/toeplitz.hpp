#pragma once

#include <cstddef>
#include <vector>

#include "dnb/symbol.hpp"

namespace dnb {

/// Dense square complex matrix, exactly Hermitian by construction.
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    /// Row-major `entries` of size dim*dim. Entries must be Hermitian to 1e-14
    /// relative to the largest magnitude; H <- (H + H*)/2 is applied exactly.
    /// Throws Error{DimensionMismatch} on a size mismatch and
    /// Error{InvalidArgument} if the input is not Hermitian.
    HermitianMatrix(std::size_t dim, std::vector<cplx> entries);

    static HermitianMatrix zero(std::size_t dim);
    static HermitianMatrix identity(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    cplx operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * dim_ + j]; }
    const std::vector<cplx>& entries() const noexcept { return entries_; }

    /// Principal submatrix on [offset, offset + size).
    HermitianMatrix block(std::size_t offset, std::size_t size) const;

    /// Max absolute row sum (the infinity norm).
    double norm_inf() const noexcept;

    friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
    friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);
    friend HermitianMatrix operator*(double s, const HermitianMatrix& a);

private:
    std::size_t dim_ = 0;
    std::vector<cplx> entries_;
};

/// T_{f,L}: entries[i][j] = a_{j-i} inside the band. Requires L >= 2N so
/// that the two N x N corners are disjoint.
HermitianMatrix toeplitz_finite(const BandedCoeffs& coeffs, std::size_t size);

/// Periodic restriction: band differences taken modulo L. Requires L >= 2N+1.
HermitianMatrix circulant_periodic(const BandedCoeffs& coeffs, std::size_t size);

HermitianMatrix direct_sum(const HermitianMatrix& a, const HermitianMatrix& b);

/// U* B U with (Ux)_k = x_{n-1-k}: entry (i, j) becomes B(n-1-i, n-1-j).
HermitianMatrix reflect_antidiagonal(const HermitianMatrix& b);

/// B with `add` added onto the principal block starting at `offset`.
HermitianMatrix add_block(const HermitianMatrix& b, const HermitianMatrix& add, std::size_t offset);

}  // namespace dnb
