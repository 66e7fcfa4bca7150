#include "dnb/dnb.h"

#include <exception>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "dnb/boundary.hpp"
#include "dnb/error.hpp"
#include "dnb/spectra.hpp"
#include "dnb/symbol.hpp"
#include "dnb/toeplitz.hpp"

struct dnb_symbol {
    dnb::ScaledSymbol symbol;
    std::optional<dnb::PentaDecomposition> penta;
    std::vector<dnb::cplx> penta_coeffs;  // input triple as a_{-2}..a_2
};

struct dnb_matrix {
    dnb::HermitianMatrix m;
};

namespace {

thread_local std::string g_last_error;

dnb_status to_status(dnb::Errc code) {
    switch (code) {
        case dnb::Errc::InvalidArgument: return DNB_E_INVALID_ARGUMENT;
        case dnb::Errc::DuplicateAngle: return DNB_E_DUPLICATE_ANGLE;
        case dnb::Errc::InvalidMultiplicity: return DNB_E_INVALID_MULTIPLICITY;
        case dnb::Errc::NonRealSymbol: return DNB_E_NON_REAL_SYMBOL;
        case dnb::Errc::OutOfClass: return DNB_E_OUT_OF_CLASS;
        case dnb::Errc::SizeTooSmall: return DNB_E_SIZE_TOO_SMALL;
        case dnb::Errc::DimensionMismatch: return DNB_E_DIMENSION_MISMATCH;
        case dnb::Errc::NoConvergence: return DNB_E_NO_CONVERGENCE;
        case dnb::Errc::KernelMismatch: return DNB_E_KERNEL_MISMATCH;
        case dnb::Errc::DuplicateNode: return DNB_E_DUPLICATE_NODE;
    }
    return DNB_E_INTERNAL;
}

dnb_status fail(dnb_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

template <class F>
dnb_status guarded(F&& body) {
    try {
        g_last_error.clear();
        body();
        return DNB_OK;
    } catch (const dnb::Error& e) {
        return fail(to_status(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(DNB_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(DNB_E_INTERNAL, e.what());
    } catch (...) {
        return fail(DNB_E_INTERNAL, "unknown error");
    }
}

#define DNB_REQUIRE(cond, msg) \
    if (!(cond)) return fail(DNB_E_INVALID_ARGUMENT, msg)

std::optional<dnb::BoundaryKind> to_kind(dnb_boundary b) {
    switch (b) {
        case DNB_BC_SIMPLE: return dnb::BoundaryKind::Simple;
        case DNB_BC_MODIFIED_NEUMANN: return dnb::BoundaryKind::ModifiedNeumann;
        case DNB_BC_MODIFIED_DIRICHLET: return dnb::BoundaryKind::ModifiedDirichlet;
        case DNB_BC_CLASSIC_NEUMANN: return dnb::BoundaryKind::ClassicNeumann;
    }
    return std::nullopt;
}

dnb::BandedCoeffs coefficients_of(const dnb_symbol& s) {
    if (s.penta) return dnb::BandedCoeffs(s.penta_coeffs);
    return dnb::fourier_coefficients(s.symbol);
}

dnb_status wrap_matrix(dnb::HermitianMatrix m, dnb_matrix** out) {
    *out = new dnb_matrix{std::move(m)};
    return DNB_OK;
}

}  // namespace

extern "C" {

const char* dnb_version(void) { return "0.1.0"; }

const char* dnb_status_name(dnb_status status) {
    switch (status) {
        case DNB_OK: return "OK";
        case DNB_E_INVALID_ARGUMENT: return "InvalidArgument";
        case DNB_E_DUPLICATE_ANGLE: return "DuplicateAngle";
        case DNB_E_INVALID_MULTIPLICITY: return "InvalidMultiplicity";
        case DNB_E_NON_REAL_SYMBOL: return "NonRealSymbol";
        case DNB_E_OUT_OF_CLASS: return "OutOfClass";
        case DNB_E_SIZE_TOO_SMALL: return "SizeTooSmall";
        case DNB_E_DIMENSION_MISMATCH: return "DimensionMismatch";
        case DNB_E_NO_CONVERGENCE: return "NoConvergence";
        case DNB_E_KERNEL_MISMATCH: return "KernelMismatch";
        case DNB_E_DUPLICATE_NODE: return "DuplicateNode";
        case DNB_E_BUFFER_TOO_SMALL: return "BufferTooSmall";
        case DNB_E_INTERNAL: return "Internal";
    }
    return "Unknown";
}

const char* dnb_last_error(void) { return g_last_error.c_str(); }

dnb_status dnb_symbol_from_factors(const double* angles, const int* multiplicities, size_t count, dnb_symbol** out) {
    DNB_REQUIRE(angles && multiplicities && out, "null pointer argument");
    DNB_REQUIRE(count > 0, "symbol needs at least one factor");
    return guarded([&] {
        std::vector<dnb::Factor> factors(count);
        for (size_t i = 0; i < count; ++i) factors[i] = {angles[i], multiplicities[i]};
        *out = new dnb_symbol{dnb::ScaledSymbol{dnb::make_symbol(factors), 1.0, 0.0}, std::nullopt, {}};
    });
}

dnb_status dnb_symbol_from_penta(double a0, double a1, double a2, dnb_symbol** out) {
    DNB_REQUIRE(out, "null pointer argument");
    return guarded([&] {
        dnb::PentaDecomposition d = dnb::decompose_pentadiagonal(a0, a1, a2);
        std::vector<dnb::cplx> coeffs{a2, a1, a0, a1, a2};
        *out = new dnb_symbol{d.symbol(), d, std::move(coeffs)};
    });
}

void dnb_symbol_free(dnb_symbol* symbol) { delete symbol; }

size_t dnb_symbol_degree(const dnb_symbol* symbol) {
    return symbol ? static_cast<size_t>(symbol->symbol.spec.degree()) : 0;
}

size_t dnb_symbol_factor_count(const dnb_symbol* symbol) {
    return symbol ? symbol->symbol.spec.factors().size() : 0;
}

dnb_status dnb_symbol_factor(const dnb_symbol* symbol, size_t index, double* angle, int* multiplicity) {
    DNB_REQUIRE(symbol && angle && multiplicity, "null pointer argument");
    const auto& f = symbol->symbol.spec.factors();
    DNB_REQUIRE(index < f.size(), "factor index out of range");
    *angle = f[index].angle;
    *multiplicity = f[index].multiplicity;
    return DNB_OK;
}

int dnb_symbol_is_penta(const dnb_symbol* symbol) { return symbol && symbol->penta ? 1 : 0; }

dnb_status dnb_symbol_penta(const dnb_symbol* symbol, dnb_penta_info* out) {
    DNB_REQUIRE(symbol && out, "null pointer argument");
    DNB_REQUIRE(symbol->penta.has_value(), "symbol was not built from a pentadiagonal triple");
    *out = {symbol->penta->scale, symbol->penta->shift, symbol->penta->angle};
    return DNB_OK;
}

dnb_status dnb_symbol_coefficients(const dnb_symbol* symbol, double* re, double* im, size_t len) {
    DNB_REQUIRE(symbol && re && im, "null pointer argument");
    const size_t needed = 2 * dnb_symbol_degree(symbol) + 1;
    if (len < needed) return fail(DNB_E_BUFFER_TOO_SMALL, "coefficient buffer smaller than 2N+1");
    return guarded([&] {
        const dnb::BandedCoeffs c = coefficients_of(*symbol);
        const auto values = c.values();
        for (size_t i = 0; i < values.size(); ++i) {
            re[i] = values[i].real();
            im[i] = values[i].imag();
        }
    });
}

dnb_status dnb_symbol_evaluate(const dnb_symbol* symbol, double x, double* out) {
    DNB_REQUIRE(symbol && out, "null pointer argument");
    return guarded([&] { *out = dnb::evaluate_symbol(coefficients_of(*symbol), x); });
}

dnb_status dnb_matrix_toeplitz(const dnb_symbol* symbol, size_t size, dnb_matrix** out) {
    DNB_REQUIRE(symbol && out, "null pointer argument");
    return guarded([&] { wrap_matrix(dnb::toeplitz_finite(coefficients_of(*symbol), size), out); });
}

dnb_status dnb_matrix_circulant(const dnb_symbol* symbol, size_t size, dnb_matrix** out) {
    DNB_REQUIRE(symbol && out, "null pointer argument");
    return guarded([&] { wrap_matrix(dnb::circulant_periodic(coefficients_of(*symbol), size), out); });
}

dnb_status dnb_matrix_restricted(const dnb_symbol* symbol, size_t size, dnb_boundary left, dnb_boundary right,
                                 dnb_matrix** out) {
    DNB_REQUIRE(symbol && out, "null pointer argument");
    const auto l = to_kind(left);
    const auto r = to_kind(right);
    DNB_REQUIRE(l && r, "unknown boundary kind");
    return guarded([&] { wrap_matrix(dnb::build_restricted(symbol->symbol, size, *l, *r), out); });
}

dnb_status dnb_matrix_split_difference(const dnb_symbol* symbol, size_t size_left, size_t size_right,
                                       dnb_boundary kind, dnb_matrix** out) {
    DNB_REQUIRE(symbol && out, "null pointer argument");
    const auto k = to_kind(kind);
    DNB_REQUIRE(k.has_value(), "unknown boundary kind");
    return guarded([&] {
        constexpr auto simple = dnb::BoundaryKind::Simple;
        const auto& s = symbol->symbol;
        const auto full = dnb::build_restricted(s, size_left + size_right, simple, simple);
        const auto split = dnb::direct_sum(dnb::build_restricted(s, size_left, simple, *k),
                                           dnb::build_restricted(s, size_right, *k, simple));
        wrap_matrix(full - split, out);
    });
}

void dnb_matrix_free(dnb_matrix* matrix) { delete matrix; }

size_t dnb_matrix_dim(const dnb_matrix* matrix) { return matrix ? matrix->m.dim() : 0; }

dnb_status dnb_matrix_entry(const dnb_matrix* matrix, size_t row, size_t col, double* re, double* im) {
    DNB_REQUIRE(matrix && re && im, "null pointer argument");
    DNB_REQUIRE(row < matrix->m.dim() && col < matrix->m.dim(), "entry index out of range");
    const dnb::cplx v = matrix->m(row, col);
    *re = v.real();
    *im = v.imag();
    return DNB_OK;
}

dnb_status dnb_matrix_eigenvalues(const dnb_matrix* matrix, double* out, size_t len) {
    DNB_REQUIRE(matrix && out, "null pointer argument");
    if (len < matrix->m.dim()) return fail(DNB_E_BUFFER_TOO_SMALL, "eigenvalue buffer smaller than dim");
    return guarded([&] {
        const auto s = dnb::eigenvalues(matrix->m);
        for (size_t i = 0; i < s.values.size(); ++i) out[i] = s.values[i];
    });
}

dnb_status dnb_check_bracketing(const dnb_symbol* symbol, size_t size_left, size_t size_right, double tol,
                                dnb_boundary kind, dnb_bracket_report* out) {
    DNB_REQUIRE(symbol && out, "null pointer argument");
    const auto k = to_kind(kind);
    DNB_REQUIRE(k.has_value(), "unknown boundary kind");
    return guarded([&] {
        const auto r = dnb::check_bracketing(symbol->symbol, size_left, size_right, tol, *k);
        *out = {r.size,  r.size_left, r.size_right, r.floor_nn, r.nn_vs_0n, r.lower,      r.upper,
                r.norm,  r.tol,       r.floor_ok,   r.nn_ok,    r.lower_ok, r.upper_ok};
    });
}

dnb_status dnb_gap_scan(const dnb_symbol* symbol, const size_t* sizes, size_t count, dnb_gap_point* points,
                        dnb_gap_summary* summary) {
    DNB_REQUIRE(symbol && sizes && points && summary, "null pointer argument");
    if (symbol->penta) return fail(DNB_E_OUT_OF_CLASS, "gap scans are defined for product symbols only");
    return guarded([&] {
        const auto report = dnb::gap_scan(symbol->symbol.spec, std::span<const size_t>(sizes, count));
        for (size_t i = 0; i < report.points.size(); ++i)
            points[i] = {report.points[i].size, report.points[i].kernel_count, report.points[i].gap};
        *summary = {report.slope, report.intercept, report.constant, report.alpha_max, report.fit_points};
    });
}

dnb_status dnb_grid_shift(const double* angles, size_t count, size_t size, double* out) {
    DNB_REQUIRE(angles && out, "null pointer argument");
    return guarded([&] { *out = dnb::grid_shift(std::span<const double>(angles, count), size); });
}

dnb_status dnb_confluent_vandermonde_abs(const double* re, const double* im, const int* multiplicities, size_t count,
                                         double* out) {
    DNB_REQUIRE(re && im && multiplicities && out, "null pointer argument");
    return guarded([&] {
        std::vector<dnb::cplx> nodes(count);
        for (size_t i = 0; i < count; ++i) nodes[i] = {re[i], im[i]};
        *out = dnb::confluent_vandermonde_abs(nodes, std::span<const int>(multiplicities, count));
    });
}

}  // extern "C"
