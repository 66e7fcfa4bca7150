#include "dnb/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dnb/error.hpp"

namespace dnb {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::DuplicateAngle: return "DuplicateAngle";
        case Errc::InvalidMultiplicity: return "InvalidMultiplicity";
        case Errc::NonRealSymbol: return "NonRealSymbol";
        case Errc::OutOfClass: return "OutOfClass";
        case Errc::SizeTooSmall: return "SizeTooSmall";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::NoConvergence: return "NoConvergence";
        case Errc::KernelMismatch: return "KernelMismatch";
        case Errc::DuplicateNode: return "DuplicateNode";
    }
    return "Unknown";
}

double reduce_angle(double angle) noexcept {
    double r = std::fmod(angle, kTwoPi);
    if (r <= 0.0) r += kTwoPi;
    return r;
}

cplx unit_phase(double angle) noexcept { return std::polar(1.0, std::remainder(angle, kTwoPi)); }

double circular_distance(double a, double b) noexcept {
    return std::abs(std::remainder(a - b, kTwoPi));
}

int SymbolSpec::max_multiplicity() const noexcept {
    int m = 0;
    for (const auto& f : factors_) m = std::max(m, f.multiplicity);
    return m;
}

SymbolSpec SymbolSpec::shifted(double shift) const {
    std::vector<Factor> moved = factors_;
    for (auto& f : moved) f.angle += shift;
    return make_symbol(moved);
}

double SymbolSpec::evaluate(double x) const noexcept {
    double value = 1.0;
    for (const auto& f : factors_) value *= std::pow(2.0 - 2.0 * std::cos(x - f.angle), f.multiplicity);
    return value;
}

SymbolSpec make_symbol(std::span<const Factor> factors) {
    if (factors.empty()) throw Error(Errc::InvalidArgument, "symbol needs at least one factor");
    SymbolSpec spec;
    for (const auto& f : factors) {
        if (f.multiplicity < 1)
            throw Error(Errc::InvalidMultiplicity,
                        "multiplicity must be >= 1, got " + std::to_string(f.multiplicity));
        if (!std::isfinite(f.angle)) throw Error(Errc::InvalidArgument, "angle is not finite");
        const double e = reduce_angle(f.angle);
        for (const auto& g : spec.factors_) {
            if (circular_distance(e, g.angle) <= kAngleEps)
                throw Error(Errc::DuplicateAngle,
                            "angles coincide after reduction mod 2pi: " + std::to_string(e) +
                                "; merge them into one factor");
        }
        spec.factors_.push_back({e, f.multiplicity});
        spec.degree_ += f.multiplicity;
    }
    return spec;
}

SymbolSpec make_symbol(std::initializer_list<Factor> factors) {
    return make_symbol(std::span<const Factor>(factors.begin(), factors.size()));
}

BandedCoeffs::BandedCoeffs(std::vector<cplx> values, double herm_tol) : values_(std::move(values)) {
    if (values_.size() < 3 || values_.size() % 2 == 0)
        throw Error(Errc::InvalidArgument, "coefficient vector must have odd length 2N+1 with N >= 1");
    half_bandwidth_ = static_cast<int>(values_.size() / 2);
    const int n = half_bandwidth_;
    double scale = 0.0;
    for (const auto& v : values_) scale = std::max(scale, std::abs(v));
    for (int k = 0; k <= n; ++k) {
        cplx& lo = values_[n - k];
        cplx& hi = values_[n + k];
        if (std::abs(lo - std::conj(hi)) > herm_tol * std::max(1.0, scale))
            throw Error(Errc::NonRealSymbol, "coefficients violate a_k = conj(a_-k) at k = " + std::to_string(k));
        const cplx avg = 0.5 * (hi + std::conj(lo));
        hi = avg;
        lo = std::conj(avg);
    }
    if (values_.back() == cplx{0.0, 0.0}) throw Error(Errc::InvalidArgument, "a_N must be nonzero");
}

cplx BandedCoeffs::operator[](int k) const noexcept {
    if (k < -half_bandwidth_ || k > half_bandwidth_) return {0.0, 0.0};
    return values_[static_cast<std::size_t>(k + half_bandwidth_)];
}

double BandedCoeffs::abs_sum() const noexcept {
    double s = 0.0;
    for (const auto& v : values_) s += std::abs(v);
    return s;
}

BandedCoeffs BandedCoeffs::affine(double scale, double shift) const {
    std::vector<cplx> out(values_.size());
    std::transform(values_.begin(), values_.end(), out.begin(), [&](cplx v) { return scale * v; });
    out[static_cast<std::size_t>(half_bandwidth_)] += shift;
    return BandedCoeffs(std::move(out));
}

namespace {

std::vector<cplx> convolve(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    std::vector<cplx> out(a.size() + b.size() - 1, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

BandedCoeffs fourier_coefficients(const SymbolSpec& spec) {
    std::vector<cplx> acc{cplx{1.0, 0.0}};
    for (const auto& f : spec.factors()) {
        const cplx phase = unit_phase(f.angle);
        // (a_{-1}, a_0, a_1) of 2 - 2cos(x - E)
        const std::vector<cplx> triple{-std::conj(phase), cplx{2.0, 0.0}, -phase};
        for (int r = 0; r < f.multiplicity; ++r) acc = convolve(acc, triple);
    }
    return BandedCoeffs(std::move(acc));
}

BandedCoeffs fourier_coefficients(const ScaledSymbol& symbol) {
    return fourier_coefficients(symbol.spec).affine(symbol.scale, symbol.shift);
}

double evaluate_symbol(const BandedCoeffs& coeffs, double x) {
    const int n = coeffs.half_bandwidth();
    cplx sum{0.0, 0.0};
    for (int k = -n; k <= n; ++k) sum += coeffs[k] * std::polar(1.0, -k * x);
    if (std::abs(sum.imag()) > 1e-12 * coeffs.abs_sum())
        throw Error(Errc::NonRealSymbol, "symbol has imaginary residue " + std::to_string(sum.imag()));
    return sum.real();
}

PentaDecomposition decompose_pentadiagonal(double a0, double a1, double a2) {
    if (!(a2 > 0.0)) throw Error(Errc::OutOfClass, "pentadiagonal class requires a2 > 0");
    const double ratio = a1 / a2;
    if (!(std::abs(ratio) <= 4.0)) throw Error(Errc::OutOfClass, "pentadiagonal class requires |a1/a2| <= 4");
    // w_b has e^{-ix} coefficient -4 cos b, so 4 cos b = -a1/a2.
    const double b = std::acos(std::clamp(-ratio / 4.0, -1.0, 1.0));

    PentaDecomposition out;
    out.scale = a2;
    out.angle = b;
    if (b <= 0.5 * kAngleEps) {
        out.spec = make_symbol({{0.0, 2}});
    } else if (std::numbers::pi - b <= 0.5 * kAngleEps) {
        out.spec = make_symbol({{std::numbers::pi, 2}});
    } else {
        out.spec = make_symbol({{b, 1}, {kTwoPi - b, 1}});
    }
    out.shift = a0 - a2 * (4.0 + 2.0 * std::cos(2.0 * b));
    return out;
}

}  // namespace dnb
