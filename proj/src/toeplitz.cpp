#include "dnb/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dnb/error.hpp"

namespace dnb {

HermitianMatrix::HermitianMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_)
        throw Error(Errc::DimensionMismatch, "expected " + std::to_string(dim_ * dim_) + " entries, got " +
                                                 std::to_string(entries_.size()));
    double scale = 1.0;
    for (const auto& v : entries_) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i; j < dim_; ++j) {
            cplx& upper = entries_[i * dim_ + j];
            cplx& lower = entries_[j * dim_ + i];
            if (std::abs(upper - std::conj(lower)) > 1e-14 * scale)
                throw Error(Errc::InvalidArgument, "matrix is not Hermitian at (" + std::to_string(i) + ", " +
                                                       std::to_string(j) + ")");
            const cplx avg = 0.5 * (upper + std::conj(lower));
            upper = avg;
            lower = std::conj(avg);
        }
    }
}

HermitianMatrix HermitianMatrix::zero(std::size_t dim) {
    return HermitianMatrix(dim, std::vector<cplx>(dim * dim, cplx{0.0, 0.0}));
}

HermitianMatrix HermitianMatrix::identity(std::size_t dim) {
    std::vector<cplx> e(dim * dim, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
    return HermitianMatrix(dim, std::move(e));
}

HermitianMatrix HermitianMatrix::block(std::size_t offset, std::size_t size) const {
    if (offset + size > dim_) throw Error(Errc::DimensionMismatch, "block exceeds matrix");
    std::vector<cplx> e(size * size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) e[i * size + j] = (*this)(offset + i, offset + j);
    return HermitianMatrix(size, std::move(e));
}

double HermitianMatrix::norm_inf() const noexcept {
    double best = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < dim_; ++j) row += std::abs((*this)(i, j));
        best = std::max(best, row);
    }
    return best;
}

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
    if (a.dim() != b.dim()) throw Error(Errc::DimensionMismatch, "matrix sum of different sizes");
    std::vector<cplx> e(a.entries_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries_[i];
    return HermitianMatrix(a.dim(), std::move(e));
}

HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
    if (a.dim() != b.dim()) throw Error(Errc::DimensionMismatch, "matrix difference of different sizes");
    std::vector<cplx> e(a.entries_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.entries_[i];
    return HermitianMatrix(a.dim(), std::move(e));
}

HermitianMatrix operator*(double s, const HermitianMatrix& a) {
    std::vector<cplx> e(a.entries_);
    for (auto& v : e) v *= s;
    return HermitianMatrix(a.dim(), std::move(e));
}

namespace {

void require_size(std::size_t size, std::size_t minimum) {
    if (size < minimum)
        throw Error(Errc::SizeTooSmall,
                    "matrix size " + std::to_string(size) + " is below the minimum " + std::to_string(minimum));
}

}  // namespace

HermitianMatrix toeplitz_finite(const BandedCoeffs& coeffs, std::size_t size) {
    require_size(size, 2 * static_cast<std::size_t>(coeffs.half_bandwidth()));
    const long n = coeffs.half_bandwidth();
    std::vector<cplx> e(size * size, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < size; ++i) {
        for (long d = -n; d <= n; ++d) {
            const long j = static_cast<long>(i) + d;
            if (j < 0 || j >= static_cast<long>(size)) continue;
            e[i * size + static_cast<std::size_t>(j)] = coeffs[static_cast<int>(d)];
        }
    }
    return HermitianMatrix(size, std::move(e));
}

HermitianMatrix circulant_periodic(const BandedCoeffs& coeffs, std::size_t size) {
    require_size(size, 2 * static_cast<std::size_t>(coeffs.half_bandwidth()) + 1);
    const long n = coeffs.half_bandwidth();
    const long l = static_cast<long>(size);
    std::vector<cplx> e(size * size, cplx{0.0, 0.0});
    for (long i = 0; i < l; ++i) {
        for (long d = -n; d <= n; ++d) {
            const long j = ((i + d) % l + l) % l;
            e[static_cast<std::size_t>(i * l + j)] = coeffs[static_cast<int>(d)];
        }
    }
    return HermitianMatrix(size, std::move(e));
}

HermitianMatrix direct_sum(const HermitianMatrix& a, const HermitianMatrix& b) {
    const std::size_t n = a.dim() + b.dim();
    std::vector<cplx> e(n * n, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) e[i * n + j] = a(i, j);
    const std::size_t o = a.dim();
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) e[(o + i) * n + o + j] = b(i, j);
    return HermitianMatrix(n, std::move(e));
}

HermitianMatrix reflect_antidiagonal(const HermitianMatrix& b) {
    const std::size_t n = b.dim();
    std::vector<cplx> e(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) e[i * n + j] = b(n - 1 - i, n - 1 - j);
    return HermitianMatrix(n, std::move(e));
}

HermitianMatrix add_block(const HermitianMatrix& b, const HermitianMatrix& add, std::size_t offset) {
    if (offset + add.dim() > b.dim()) throw Error(Errc::DimensionMismatch, "block does not fit");
    std::vector<cplx> e(b.entries());
    const std::size_t n = b.dim();
    for (std::size_t i = 0; i < add.dim(); ++i)
        for (std::size_t j = 0; j < add.dim(); ++j) e[(offset + i) * n + offset + j] += add(i, j);
    return HermitianMatrix(n, std::move(e));
}

}  // namespace dnb
