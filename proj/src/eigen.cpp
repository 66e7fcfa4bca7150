// Cyclic Jacobi iteration for complex Hermitian matrices. Each rotation first
// rotates the phase of column q so that a_pq becomes real and then applies the
// classical real Jacobi rotation; only eigenvalues are tracked.

#include <algorithm>
#include <cmath>
#include <limits>

#include "dnb/error.hpp"
#include "dnb/spectra.hpp"

namespace dnb {

namespace {

constexpr int kMaxSweeps = 60;

}  // namespace

Spectrum eigenvalues(const HermitianMatrix& h) {
    const std::size_t n = h.dim();
    std::vector<cplx> a = h.entries();
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = a[i * n + i].real();

    double frob = 0.0;
    for (const auto& v : a) frob += std::norm(v);
    frob = std::sqrt(frob);

    auto at = [&](std::size_t i, std::size_t j) -> cplx& { return a[i * n + j]; };

    bool converged = n <= 1;
    for (int sweep = 1; sweep <= kMaxSweeps && !converged; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::abs(at(p, q));
        if (off == 0.0) {
            converged = true;
            break;
        }
        const double thresh = sweep < 4 ? 0.2 * off / static_cast<double>(n * n) : 0.0;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double mag = std::abs(at(p, q));
                const double g = 100.0 * mag;
                if (sweep > 4 && std::abs(d[p]) + g == std::abs(d[p]) && std::abs(d[q]) + g == std::abs(d[q])) {
                    at(p, q) = at(q, p) = 0.0;
                    continue;
                }
                if (mag <= thresh || mag == 0.0) continue;

                const double diff = d[q] - d[p];
                double t;
                if (std::abs(diff) + g == std::abs(diff)) {
                    t = mag / diff;
                } else {
                    const double theta = 0.5 * diff / mag;
                    t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx unphase = std::conj(at(p, q)) / mag;

                d[p] -= t * mag;
                d[q] += t * mag;
                at(p, q) = at(q, p) = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const cplx x = at(r, p);
                    const cplx y = at(r, q) * unphase;
                    const cplx np = c * x - s * y;
                    const cplx nq = s * x + c * y;
                    at(r, p) = np;
                    at(p, r) = std::conj(np);
                    at(r, q) = nq;
                    at(q, r) = std::conj(nq);
                }
            }
        }
    }
    if (!converged) throw Error(Errc::NoConvergence, "Jacobi iteration did not converge");

    std::sort(d.begin(), d.end());
    Spectrum out;
    out.values = std::move(d);
    out.tolerance = 10.0 * static_cast<double>(std::max<std::size_t>(n, 1)) *
                    std::numeric_limits<double>::epsilon() * std::max(frob, 1.0);
    return out;
}

}  // namespace dnb
