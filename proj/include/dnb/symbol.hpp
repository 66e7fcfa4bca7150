#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace dnb {

using cplx = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Angles closer than this after reduction are treated as the same point.
inline constexpr double kAngleEps = 1e-12;

/// Reduces an angle into the half-open interval (0, 2pi].
double reduce_angle(double angle) noexcept;

/// e^{i angle}, evaluated on the representative in (-pi, pi] so that angles
/// at 2pi give exactly 1.
cplx unit_phase(double angle) noexcept;

/// Distance between two angles measured along the circle, in [0, pi].
double circular_distance(double a, double b) noexcept;

struct Factor {
    double angle = 0.0;
    int multiplicity = 1;
};

/// Product symbol g(x) = prod_i (2 - 2 cos(x - E_i))^{alpha_i} with pairwise
/// distinct angles E_i stored in (0, 2pi].
class SymbolSpec {
public:
    const std::vector<Factor>& factors() const noexcept { return factors_; }
    /// N = sum of multiplicities; the half-bandwidth of the Toeplitz matrix.
    int degree() const noexcept { return degree_; }
    int max_multiplicity() const noexcept;

    /// Spec of x -> g(x - shift), i.e. every angle moved by `shift`.
    SymbolSpec shifted(double shift) const;

    /// Direct product evaluation; independent of the coefficient expansion.
    double evaluate(double x) const noexcept;

private:
    friend SymbolSpec make_symbol(std::span<const Factor> factors);
    std::vector<Factor> factors_;
    int degree_ = 0;
};

/// Validates and canonicalizes a factor list.
/// Throws Error{DuplicateAngle} when two angles coincide after reduction and
/// Error{InvalidMultiplicity} for multiplicities below one.
SymbolSpec make_symbol(std::span<const Factor> factors);
SymbolSpec make_symbol(std::initializer_list<Factor> factors);

/// Fourier coefficients a_{-N..N} of a real-valued symbol f(x) = sum a_k e^{-ikx}.
class BandedCoeffs {
public:
    /// `values` holds a_{-N}, ..., a_N. The Hermitian relation a_k = conj(a_{-k})
    /// is checked to `herm_tol` (relative to the largest coefficient) and then
    /// imposed exactly. a_N must be nonzero.
    explicit BandedCoeffs(std::vector<cplx> values, double herm_tol = 1e-14);

    int half_bandwidth() const noexcept { return half_bandwidth_; }
    /// a_k for |k| <= N, zero outside the band.
    cplx operator[](int k) const noexcept;
    std::span<const cplx> values() const noexcept { return values_; }
    double abs_sum() const noexcept;

    /// scale * a_k + shift * delta_{k,0}
    BandedCoeffs affine(double scale, double shift) const;

private:
    std::vector<cplx> values_;
    int half_bandwidth_ = 0;
};

/// Convolves the per-factor triples (-e^{-iE}, 2, -e^{iE}).
BandedCoeffs fourier_coefficients(const SymbolSpec& spec);

/// sum_k a_k e^{-ikx}. Throws Error{NonRealSymbol} if the imaginary residue
/// exceeds 1e-12 * sum |a_k|.
double evaluate_symbol(const BandedCoeffs& coeffs, double x);

/// A product symbol rescaled and shifted: scale * g + shift, scale > 0.
/// inf over the circle is `shift`.
struct ScaledSymbol {
    SymbolSpec spec;
    double scale = 1.0;
    double shift = 0.0;
};

BandedCoeffs fourier_coefficients(const ScaledSymbol& symbol);

/// Real pentadiagonal symbol a2 e^{-2ix} + a1 e^{-ix} + a0 + a1 e^{ix} + a2 e^{2ix}
/// written as scale * (2-2cos(x-b))(2-2cos(x+b)) + shift.
struct PentaDecomposition {
    double scale = 0.0;
    SymbolSpec spec;
    double shift = 0.0;
    double angle = 0.0;  // b in [0, pi]

    ScaledSymbol symbol() const { return {spec, scale, shift}; }
};

/// Requires a2 > 0 and |a1 / a2| <= 4, otherwise throws Error{OutOfClass}.
PentaDecomposition decompose_pentadiagonal(double a0, double a1, double a2);

}  // namespace dnb
