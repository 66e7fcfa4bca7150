#include "dnb/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <string>

#include "dnb/error.hpp"

namespace dnb {

double psd_gap(const HermitianMatrix& a, const HermitianMatrix& b) {
    if (a.dim() != b.dim())
        throw Error(Errc::DimensionMismatch,
                    "cannot compare " + std::to_string(a.dim()) + "x" + std::to_string(a.dim()) + " with " +
                        std::to_string(b.dim()) + "x" + std::to_string(b.dim()));
    return eigenvalues(a - b).values.front();
}

BracketReport check_bracketing(const ScaledSymbol& symbol, std::size_t size_left, std::size_t size_right,
                               double tol, BoundaryKind neumann) {
    if (neumann != BoundaryKind::ModifiedNeumann && neumann != BoundaryKind::ClassicNeumann)
        throw Error(Errc::InvalidArgument, "the lower bracket needs a Neumann-type condition");
    // The classic condition only needs disjoint corners; the modified ones
    // need the full band width.
    const auto minimum = static_cast<std::size_t>(2 * symbol.spec.degree()) +
                         (neumann == BoundaryKind::ModifiedNeumann ? 1 : 0);
    if (size_left < minimum || size_right < minimum)
        throw Error(Errc::SizeTooSmall, "split sizes must be at least " + std::to_string(minimum));

    constexpr auto simple = BoundaryKind::Simple;
    const std::size_t size = size_left + size_right;
    const HermitianMatrix full = build_restricted(symbol, size, simple, simple);
    const HermitianMatrix left = build_restricted(symbol, size_left, simple, neumann);
    const HermitianMatrix right = build_restricted(symbol, size_right, neumann, simple);
    const HermitianMatrix split = direct_sum(left, right);
    const HermitianMatrix both = direct_sum(build_restricted(symbol, size_left, neumann, neumann),
                                            build_restricted(symbol, size_right, neumann, neumann));
    const HermitianMatrix dirichlet = dirichlet_from_neumann(full, left, right);

    BracketReport r;
    r.size = size;
    r.size_left = size_left;
    r.size_right = size_right;
    r.tol = tol;
    r.norm = full.norm_inf();
    r.floor_nn = eigenvalues(both).values.front() - symbol.shift;
    r.nn_vs_0n = psd_gap(split, both);
    r.lower = psd_gap(full, split);
    r.upper = psd_gap(dirichlet, full);
    r.floor_ok = r.floor_nn >= -tol;
    r.nn_ok = r.nn_vs_0n >= -tol;
    r.lower_ok = r.lower >= -tol;
    r.upper_ok = r.upper >= -tol;
    return r;
}

BracketReport check_bracketing(const SymbolSpec& spec, std::size_t size_left, std::size_t size_right, double tol,
                               BoundaryKind neumann) {
    return check_bracketing(ScaledSymbol{spec, 1.0, 0.0}, size_left, size_right, tol, neumann);
}

std::vector<std::vector<cplx>> kernel_basis(const SymbolSpec& spec, std::size_t size) {
    if (size < static_cast<std::size_t>(spec.degree()))
        throw Error(Errc::SizeTooSmall, "kernel basis needs L >= N");
    std::vector<std::vector<cplx>> out;
    for (const auto& f : spec.factors()) {
        for (int j = 0; j < f.multiplicity; ++j) {
            std::vector<cplx> v(size);
            double norm = 0.0;
            for (std::size_t k = 1; k <= size; ++k) {
                const double kd = static_cast<double>(k);
                v[k - 1] = std::pow(kd, j) * std::polar(1.0, -f.angle * kd);
                norm += std::norm(v[k - 1]);
            }
            norm = std::sqrt(norm);
            for (auto& x : v) x /= norm;
            out.push_back(std::move(v));
        }
    }
    return out;
}

double confluent_vandermonde_abs(std::span<const cplx> nodes, std::span<const int> multiplicities) {
    if (nodes.empty() || nodes.size() != multiplicities.size())
        throw Error(Errc::InvalidArgument, "need one multiplicity per node");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (multiplicities[i] < 1) throw Error(Errc::InvalidMultiplicity, "multiplicities must be >= 1");
        if (std::abs(std::abs(nodes[i]) - 1.0) > 1e-12)
            throw Error(Errc::InvalidArgument, "nodes must lie on the unit circle");
        for (std::size_t k = 0; k < i; ++k)
            if (std::abs(nodes[i] - nodes[k]) <= 1e-12) throw Error(Errc::DuplicateNode, "nodes must be distinct");
    }
    double value = 1.0;
    for (int alpha : multiplicities) {
        // prod_{j<alpha} j!
        double fact = 1.0;
        for (int j = 1; j < alpha; ++j) {
            fact *= j;
            value *= fact;
        }
    }
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t k = i + 1; k < nodes.size(); ++k)
            value *= std::pow(std::abs(nodes[i] - nodes[k]), multiplicities[i] * multiplicities[k]);
    return value;
}

double grid_distance(std::span<const double> angles, std::size_t size, double shift) {
    double best = std::numeric_limits<double>::infinity();
    const double step = kTwoPi / static_cast<double>(size);
    for (double e : angles)
        for (std::size_t k = 1; k <= size; ++k)
            best = std::min(best, circular_distance(e, step * static_cast<double>(k) - shift));
    return best;
}

double grid_shift(std::span<const double> angles, std::size_t size) {
    if (angles.empty() || size == 0) throw Error(Errc::InvalidArgument, "grid_shift needs angles and L >= 1");
    for (std::size_t i = 0; i < angles.size(); ++i)
        for (std::size_t k = 0; k < i; ++k)
            if (circular_distance(angles[i], angles[k]) <= kAngleEps)
                throw Error(Errc::DuplicateAngle, "grid_shift needs distinct angles");

    const double l = static_cast<double>(size);
    double shift = -angles[0] + std::numbers::pi / l;
    double delta = std::numbers::pi / l;
    for (std::size_t i = 1; i < angles.size(); ++i) {
        delta *= 0.5;
        const auto point = angles.subspan(i, 1);
        if (grid_distance(point, size, shift) >= delta) continue;
        if (grid_distance(point, size, shift + delta) >= delta * (1.0 - 1e-9))
            shift += delta;
        else
            shift -= delta;
    }
    return reduce_angle(shift);
}

double grid_symbol_min(const SymbolSpec& spec, std::size_t size, double shift) {
    double best = std::numeric_limits<double>::infinity();
    const double step = kTwoPi / static_cast<double>(size);
    for (std::size_t k = 1; k <= size; ++k) best = std::min(best, spec.evaluate(step * static_cast<double>(k) - shift));
    return best;
}

GapPoint spectral_gap(const SymbolSpec& spec, std::size_t size) {
    constexpr auto nbc = BoundaryKind::ModifiedNeumann;
    const HermitianMatrix h = build_restricted(spec, size, nbc, nbc);
    const Spectrum s = eigenvalues(h);
    GapPoint p;
    p.size = size;
    p.norm = h.norm_inf();
    const double kernel_tol = 1e-9 * p.norm;
    p.kernel_count = static_cast<int>(
        std::count_if(s.values.begin(), s.values.end(), [&](double v) { return std::abs(v) <= kernel_tol; }));
    if (p.kernel_count != spec.degree())
        throw Error(Errc::KernelMismatch, "kernel dimension " + std::to_string(p.kernel_count) + " at L = " +
                                              std::to_string(size) + ", expected " + std::to_string(spec.degree()));
    p.gap = s.values[static_cast<std::size_t>(spec.degree())];
    return p;
}

GapReport gap_scan(const SymbolSpec& spec, std::span<const std::size_t> sizes) {
    if (sizes.empty()) throw Error(Errc::InvalidArgument, "gap_scan needs at least one size");
    std::vector<std::future<GapPoint>> jobs;
    jobs.reserve(sizes.size());
    for (std::size_t l : sizes) jobs.push_back(std::async(std::launch::async, [&spec, l] { return spectral_gap(spec, l); }));

    GapReport report;
    report.alpha_max = spec.max_multiplicity();
    for (auto& j : jobs) report.points.push_back(j.get());

    const auto min_fit = static_cast<std::size_t>(4 * spec.degree());
    std::vector<const GapPoint*> fit;
    for (const auto& p : report.points)
        if (p.size >= min_fit) fit.push_back(&p);
    if (fit.size() < 2) {
        fit.clear();
        for (const auto& p : report.points) fit.push_back(&p);
    }
    report.fit_points = fit.size();
    if (fit.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (const auto* p : fit) {
            const double x = std::log(static_cast<double>(p->size));
            const double y = std::log(p->gap);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double m = static_cast<double>(fit.size());
        const double denom = m * sxx - sx * sx;
        report.slope = denom != 0.0 ? (m * sxy - sx * sy) / denom : std::numeric_limits<double>::quiet_NaN();
        report.intercept = (sy - report.slope * sx) / m;
    } else {
        report.slope = report.intercept = std::numeric_limits<double>::quiet_NaN();
    }

    report.constant = std::numeric_limits<double>::infinity();
    for (const auto& p : report.points)
        report.constant =
            std::min(report.constant, p.gap * std::pow(static_cast<double>(p.size), 2.0 * report.alpha_max));
    return report;
}

}  // namespace dnb
