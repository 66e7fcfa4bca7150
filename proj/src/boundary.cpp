#include "dnb/boundary.hpp"

#include <algorithm>
#include <string>

#include "dnb/error.hpp"

namespace dnb {

StencilVector stencil(const SymbolSpec& spec) {
    std::vector<cplx> c{cplx{1.0, 0.0}};
    for (const auto& f : spec.factors()) {
        const cplx step = -std::conj(unit_phase(f.angle));
        for (int r = 0; r < f.multiplicity; ++r) {
            std::vector<cplx> next(c.size() + 1, cplx{0.0, 0.0});
            for (std::size_t j = 0; j < c.size(); ++j) {
                next[j] += c[j];
                next[j + 1] += step * c[j];
            }
            c = std::move(next);
        }
    }
    return {std::move(c)};
}

HermitianMatrix rank_one_sum(const SymbolSpec& spec, std::size_t size, long k_first, long k_last) {
    const StencilVector psi = stencil(spec);
    const long n = psi.degree();
    const long l = static_cast<long>(size);
    std::vector<cplx> e(size * size, cplx{0.0, 0.0});
    for (long k = k_first; k <= k_last; ++k) {
        const long lo = std::max(k, 0L);
        const long hi = std::min(k + n, l - 1);
        for (long s = lo; s <= hi; ++s) {
            const cplx v = psi.c[static_cast<std::size_t>(s - k)];
            for (long t = lo; t <= hi; ++t)
                e[static_cast<std::size_t>(s * l + t)] += v * std::conj(psi.c[static_cast<std::size_t>(t - k)]);
        }
    }
    return HermitianMatrix(size, std::move(e));
}

namespace {

double corner_sign(BoundaryKind kind) {
    switch (kind) {
        case BoundaryKind::ModifiedNeumann: return -1.0;
        case BoundaryKind::ModifiedDirichlet: return 1.0;
        default: throw Error(Errc::InvalidArgument, "corner blocks exist only for the modified conditions");
    }
}

}  // namespace

HermitianMatrix corner_block(const SymbolSpec& spec, BoundaryKind kind) {
    const double sign = corner_sign(kind);
    const StencilVector psi = stencil(spec);
    const std::size_t n = static_cast<std::size_t>(psi.degree());
    // Placement r (r = 0..N-1) starts on local site r of the last N sites and
    // runs past the boundary.
    std::vector<cplx> e(n * n, cplx{0.0, 0.0});
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t r = 0; r <= std::min(t, u); ++r) e[t * n + u] += psi.c[t - r] * std::conj(psi.c[u - r]);
    for (auto& v : e) v *= sign;
    return HermitianMatrix(n, std::move(e));
}

HermitianMatrix left_corner_block(const SymbolSpec& spec, BoundaryKind kind) {
    const double sign = corner_sign(kind);
    const StencilVector psi = stencil(spec);
    const std::size_t n = static_cast<std::size_t>(psi.degree());
    // Placement starting s sites left of the window covers local sites 0..N-s.
    std::vector<cplx> e(n * n, cplx{0.0, 0.0});
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t s = 1; s + std::max(t, u) <= n; ++s) e[t * n + u] += psi.c[t + s] * std::conj(psi.c[u + s]);
    for (auto& v : e) v *= sign;
    return HermitianMatrix(n, std::move(e));
}

HermitianMatrix classic_neumann_block(const BandedCoeffs& coeffs, Side side) {
    const int n = coeffs.half_bandwidth();
    const auto un = static_cast<std::size_t>(n);
    // Hermitian part of the Hankel corner; for real coefficients it is the
    // Hankel corner itself.
    std::vector<cplx> e(un * un, cplx{0.0, 0.0});
    for (int i = 0; i < n; ++i)
        for (int j = 0; i + j <= n - 1; ++j)
            e[static_cast<std::size_t>(i * n + j)] = coeffs[-(i + j + 1)].real();
    HermitianMatrix left(un, std::move(e));
    return side == Side::Left ? left : reflect_antidiagonal(left);
}

HermitianMatrix classic_neumann(const BandedCoeffs& coeffs, std::size_t size, Side side) {
    const HermitianMatrix t = toeplitz_finite(coeffs, size);
    const auto n = static_cast<std::size_t>(coeffs.half_bandwidth());
    return add_block(t, classic_neumann_block(coeffs, side), side == Side::Left ? 0 : size - n);
}

namespace {

HermitianMatrix side_block(const ScaledSymbol& symbol, const BandedCoeffs& coeffs, BoundaryKind kind, Side side) {
    if (kind == BoundaryKind::ClassicNeumann) return classic_neumann_block(coeffs, side);
    const HermitianMatrix base =
        side == Side::Left ? left_corner_block(symbol.spec, kind) : corner_block(symbol.spec, kind);
    return symbol.scale * base;
}

}  // namespace

HermitianMatrix build_restricted(const ScaledSymbol& symbol, std::size_t size, BoundaryKind left,
                                 BoundaryKind right) {
    const BandedCoeffs coeffs = fourier_coefficients(symbol);
    const auto n = static_cast<std::size_t>(coeffs.half_bandwidth());
    const auto modified = [](BoundaryKind k) {
        return k == BoundaryKind::ModifiedNeumann || k == BoundaryKind::ModifiedDirichlet;
    };
    if ((modified(left) || modified(right)) && size < 2 * n + 1)
        throw Error(Errc::SizeTooSmall, "modified boundary conditions need L >= 2N+1 = " + std::to_string(2 * n + 1));
    HermitianMatrix out = toeplitz_finite(coeffs, size);
    if (left != BoundaryKind::Simple) out = add_block(out, side_block(symbol, coeffs, left, Side::Left), 0);
    if (right != BoundaryKind::Simple)
        out = add_block(out, side_block(symbol, coeffs, right, Side::Right), size - n);
    return out;
}

HermitianMatrix build_restricted(const SymbolSpec& spec, std::size_t size, BoundaryKind left, BoundaryKind right) {
    return build_restricted(ScaledSymbol{spec, 1.0, 0.0}, size, left, right);
}

HermitianMatrix dirichlet_from_neumann(const HermitianMatrix& a, const HermitianMatrix& a11_neumann,
                                       const HermitianMatrix& a22_neumann) {
    const std::size_t n1 = a11_neumann.dim();
    const std::size_t n2 = a22_neumann.dim();
    if (n1 + n2 != a.dim())
        throw Error(Errc::DimensionMismatch, "block sizes " + std::to_string(n1) + " + " + std::to_string(n2) +
                                                 " do not add up to " + std::to_string(a.dim()));
    return direct_sum(2.0 * a.block(0, n1) - a11_neumann, 2.0 * a.block(n1, n2) - a22_neumann);
}

}  // namespace dnb
