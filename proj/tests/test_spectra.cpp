#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "dnb/error.hpp"
#include "dnb/spectra.hpp"
#include "oracles.hpp"

using namespace dnb;
using oracle::kPi;

namespace {

constexpr auto S = BoundaryKind::Simple;
constexpr auto MN = BoundaryKind::ModifiedNeumann;
constexpr auto CN = BoundaryKind::ClassicNeumann;

SymbolSpec spec_of(const std::vector<oracle::Term>& terms) {
    std::vector<Factor> f;
    for (const auto& t : terms) f.push_back({t.angle, t.multiplicity});
    return make_symbol(f);
}

HermitianMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> g;
    std::vector<cplx> e(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            e[i * n + j] = i == j ? cplx{g(rng), 0.0} : cplx{g(rng), g(rng)};
            e[j * n + i] = std::conj(e[i * n + j]);
        }
    return HermitianMatrix(n, std::move(e));
}

}  // namespace

TEST_CASE("eigenvalues examples") {
    const HermitianMatrix d(3, {3.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 2.0});
    const auto s = eigenvalues(d).values;
    CHECK(s == std::vector<double>{1.0, 2.0, 3.0});

    const HermitianMatrix pauli(2, {0.0, cplx{0.0, 1.0}, cplx{0.0, -1.0}, 0.0});
    const auto p = eigenvalues(pauli).values;
    CHECK(p[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(p[1] == doctest::Approx(1.0).epsilon(1e-14));

    const auto c = eigenvalues(circulant_periodic(fourier_coefficients(make_symbol({{0.0, 1}})), 6)).values;
    std::vector<double> expected;
    for (int k = 1; k <= 6; ++k) expected.push_back(2.0 - 2.0 * std::cos(2 * kPi * k / 6));
    std::sort(expected.begin(), expected.end());
    for (std::size_t i = 0; i < 6; ++i) CHECK(std::abs(c[i] - expected[i]) < 1e-13);

    CHECK(eigenvalues(HermitianMatrix::zero(0)).values.empty());
    CHECK(eigenvalues(HermitianMatrix(1, {cplx{-4.5, 0.0}})).values == std::vector<double>{-4.5});
}

TEST_CASE("eigenvalues agree with a reference solver and are deterministic") {
    std::mt19937_64 rng(99);
    for (std::size_t n : {2u, 3u, 5u, 8u, 13u, 21u, 40u}) {
        const auto h = random_hermitian(rng, n);
        const auto ours = eigenvalues(h);
        const auto ref = oracle::reference_eigenvalues(h);
        const double tol = 1e-10 * (1.0 + h.norm_inf());
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(ours.values[i] - ref[i]) <= tol);
        CHECK(ours.tolerance <= tol);
        CHECK(eigenvalues(h).values == ours.values);
    }
    // strongly clustered spectrum
    const auto nn = build_restricted(make_symbol({{0.0, 2}, {1.0, 2}}), 30, MN, MN);
    const auto ref = oracle::reference_eigenvalues(nn);
    const auto ours = eigenvalues(nn).values;
    for (std::size_t i = 0; i < ours.size(); ++i) CHECK(std::abs(ours[i] - ref[i]) <= 1e-10 * (1.0 + nn.norm_inf()));
}

TEST_CASE("psd_gap") {
    const auto t = build_restricted(make_symbol({{0.0, 2}}), 6, S, S);
    CHECK(std::abs(psd_gap(t, t)) < 1e-14);
    CHECK_THROWS_AS(psd_gap(t, HermitianMatrix::zero(5)), Error);

    const auto lap2 = make_symbol({{0.0, 2}});
    const auto full = build_restricted(lap2, 8, S, S);
    const auto split = direct_sum(build_restricted(lap2, 4, S, CN), build_restricted(lap2, 4, CN, S));
    CHECK(psd_gap(full, split) < -0.1);
    CHECK(psd_gap(split, full) < -0.1);  // so the largest eigenvalue of full - split exceeds 0.1

    const auto nsplit = direct_sum(build_restricted(lap2, 5, S, MN), build_restricted(lap2, 5, MN, S));
    CHECK(psd_gap(build_restricted(lap2, 10, S, S), nsplit) >= -1e-10);
}

TEST_CASE("check_bracketing examples") {
    const auto r1 = check_bracketing(make_symbol({{0.0, 2}}), 7, 7, 1e-9);
    CHECK(r1.all_ok());
    CHECK(r1.size == 14);

    const auto r2 = check_bracketing(make_symbol({{0.0, 1}, {2.0, 1}}), 5, 9, 1e-9);
    CHECK(r2.all_ok());

    const auto r3 = check_bracketing(make_symbol({{0.0, 2}}), 7, 7, 1e-9, CN);
    CHECK_FALSE(r3.lower_ok);
    CHECK(r3.lower < -0.1);

    CHECK_THROWS_AS(check_bracketing(make_symbol({{0.0, 2}}), 4, 7, 1e-9), Error);
    CHECK_THROWS_AS(check_bracketing(make_symbol({{0.0, 2}}), 7, 7, 1e-9, BoundaryKind::ModifiedDirichlet), Error);
}

TEST_CASE("bracketing chain holds for random product symbols") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        const auto spec = spec_of(oracle::random_terms(rng, 3, 2, 0.3));
        const int n = spec.degree();
        std::uniform_int_distribution<int> size(2 * n + 1, 2 * n + 12);
        for (int split = 0; split < 3; ++split) {
            const auto l1 = static_cast<std::size_t>(size(rng)), l2 = static_cast<std::size_t>(size(rng));
            const auto r = check_bracketing(spec, l1, l2, 0.0);
            const double tol = 1e-9 * r.norm;
            CAPTURE(trial);
            CHECK(r.floor_nn >= -tol);
            CHECK(r.nn_vs_0n >= -tol);
            CHECK(r.lower >= -tol);
            CHECK(r.upper >= -tol);
        }
    }
}

TEST_CASE("pentadiagonal symbols bracket with floor at the shift") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> a2d(0.1, 3.0), ratio(-4.0, 4.0), a0d(-5.0, 5.0);
    std::uniform_int_distribution<int> size(5, 16);
    for (int trial = 0; trial < 50; ++trial) {
        const double a2 = a2d(rng), a1 = ratio(rng) * a2, a0 = a0d(rng);
        const auto d = decompose_pentadiagonal(a0, a1, a2);
        const auto r = check_bracketing(d.symbol(), static_cast<std::size_t>(size(rng)),
                                        static_cast<std::size_t>(size(rng)), 0.0);
        const double tol = 1e-9 * std::max(1.0, r.norm);
        CHECK(r.floor_nn >= -tol);
        CHECK(r.nn_vs_0n >= -tol);
        CHECK(r.lower >= -tol);
        CHECK(r.upper >= -tol);
        // the floor is attained: inf h is an eigenvalue of the (N, N) blocks
        CHECK(std::abs(r.floor_nn) <= tol);
    }
}

TEST_CASE("kernel_basis") {
    const auto one = kernel_basis(make_symbol({{0.0, 1}}), 4);
    REQUIRE(one.size() == 1);
    for (const auto& x : one[0]) CHECK(std::abs(x - 0.5) < 1e-15);

    const auto two = kernel_basis(make_symbol({{0.0, 2}}), 4);
    REQUIRE(two.size() == 2);
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(std::abs(two[0][k] - 0.5) < 1e-15);
        CHECK(std::abs(two[1][k] - (k + 1.0) / std::sqrt(30.0)) < 1e-15);
    }

    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 30; ++trial) {
        const auto spec = spec_of(oracle::random_terms(rng, 3, 3, 0.05));
        const std::size_t l = 2 * static_cast<std::size_t>(spec.degree()) + 1 + static_cast<std::size_t>(trial);
        const auto h = build_restricted(spec, l, MN, MN);
        const auto basis = kernel_basis(spec, l);
        CHECK(basis.size() == static_cast<std::size_t>(spec.degree()));
        for (const auto& v : basis) {
            CHECK(std::abs(oracle::norm2(v) - 1.0) < 1e-14);
            CHECK(oracle::norm2(oracle::matvec(h, v)) <= 1e-9 * h.norm_inf());
        }
    }
}

TEST_CASE("confluent Vandermonde closed form") {
    const double e = 1.1;
    const cplx z2 = std::polar(1.0, e);
    const std::vector<cplx> nodes{1.0, z2};
    const std::vector<int> ones{1, 1};
    CHECK(confluent_vandermonde_abs(nodes, ones) == doctest::Approx(std::abs(1.0 - z2)).epsilon(1e-15));
    const std::vector<cplx> single{1.0};
    const std::vector<int> three{3};
    CHECK(confluent_vandermonde_abs(single, three) == doctest::Approx(2.0));

    const std::vector<cplx> dup{1.0, cplx{1.0, 1e-13}};
    CHECK_THROWS_AS(confluent_vandermonde_abs(dup, ones), Error);

    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
    std::uniform_int_distribution<int> count(1, 4);
    int checked = 0;
    while (checked < 100) {
        const int n = count(rng);
        std::vector<cplx> z;
        std::vector<int> alpha;
        int total = 0;
        for (int i = 0; i < n; ++i) {
            const int a = std::uniform_int_distribution<int>(1, 6)(rng);
            z.push_back(std::polar(1.0, ang(rng)));
            alpha.push_back(a);
            total += a;
        }
        if (total > 6) continue;
        const auto m = oracle::moment_matrix(z, alpha);
        const double expected = std::abs(oracle::leibniz_det(m));
        // Leibniz sums lose absolute accuracy relative to the Hadamard bound
        double hadamard = 1.0;
        for (int j = 0; j < total; ++j) {
            double col = 0.0;
            for (int i = 0; i < total; ++i) col += std::norm(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            hadamard *= std::sqrt(col);
        }
        CHECK(std::abs(confluent_vandermonde_abs(z, alpha) - expected) <= 1e-8 * expected + 1e-12 * hadamard);
        ++checked;
    }
}

TEST_CASE("grid_shift") {
    const std::vector<double> one{1.0};
    const double s = grid_shift(one, 10);
    CHECK(circular_distance(s, -1.0 + kPi / 10) < 1e-14);
    CHECK(grid_distance(one, 10, s) >= kPi / 10 * (1 - 1e-12));

    const std::vector<double> two{1.0, 1.0 + kPi / 16};
    CHECK(grid_distance(two, 16, grid_shift(two, 16)) >= 2 * kPi / (4 * 16) * (1 - 1e-12));

    std::mt19937_64 rng(55);
    std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
    std::uniform_int_distribution<int> count(1, 5), size(1, 200);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = count(rng);
        const auto l = static_cast<std::size_t>(size(rng));
        std::vector<double> angles;
        while (static_cast<int>(angles.size()) < n) {
            const double e = ang(rng);
            if (std::all_of(angles.begin(), angles.end(), [&](double a) { return circular_distance(a, e) > 1e-9; }))
                angles.push_back(e);
        }
        const double bound = 2 * kPi / (std::ldexp(1.0, n) * static_cast<double>(l));
        CHECK(grid_distance(angles, l, grid_shift(angles, l)) >= bound * (1 - 1e-12));
    }
    const std::vector<double> dup{1.0, 1.0};
    CHECK_THROWS_AS(grid_shift(dup, 5), Error);
}

TEST_CASE("spectral_gap examples") {
    const auto lap = spectral_gap(make_symbol({{0.0, 1}}), 10);
    CHECK(lap.kernel_count == 1);
    CHECK(std::abs(lap.gap - (2.0 - 2.0 * std::cos(kPi / 10))) < 1e-12);

    const auto lap2 = spectral_gap(make_symbol({{0.0, 2}}), 12);
    CHECK(lap2.kernel_count == 2);
    CHECK(lap2.gap > 0.0);

    // closed-form path spectrum as a full check of the (N, N) Laplacian
    const auto path = eigenvalues(build_restricted(make_symbol({{0.0, 1}}), 17, MN, MN)).values;
    const auto expected = oracle::path_laplacian_spectrum(17);
    for (std::size_t i = 0; i < 17; ++i) CHECK(std::abs(path[i] - expected[i]) < 1e-12);

    CHECK_THROWS_AS(spectral_gap(make_symbol({{0.0, 2}}), 4), Error);
}

TEST_CASE("a gap below the kernel tolerance is reported") {
    bool tripped = false;
    try {
        spectral_gap(make_symbol({{0.0, 6}}), 80);
    } catch (const Error& e) {
        tripped = e.code() == Errc::KernelMismatch;
    }
    CHECK(tripped);
}

TEST_CASE("gap lower bounds from periodic samples") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        const auto terms = oracle::random_terms(rng, 3, 2, 0.3);
        const auto spec = spec_of(terms);
        const auto l = 2 * static_cast<std::size_t>(spec.degree()) + 1 + static_cast<std::size_t>(trial);
        const auto p = spectral_gap(spec, l);
        CHECK(p.kernel_count == spec.degree());
        // min-max against the periodic restriction
        CHECK(p.gap >= grid_symbol_min(spec, l, 0.0) - 1e-9);
        // modulated lower bounds, including the constructive shift
        std::vector<double> angles;
        for (const auto& f : spec.factors()) angles.push_back(f.angle);
        double best = grid_symbol_min(spec, l, grid_shift(angles, l));
        for (int s = 0; s < 64; ++s) best = std::max(best, grid_symbol_min(spec, l, 2 * kPi * s / 64));
        CHECK(p.gap >= best - 1e-9);
    }
}

TEST_CASE("periodic minus (N, N) is positive of rank N") {
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 20; ++trial) {
        const auto spec = spec_of(oracle::random_terms(rng, 3, 2, 0.3));
        const auto l = 2 * static_cast<std::size_t>(spec.degree()) + 1 + static_cast<std::size_t>(2 * trial);
        const auto diff = circulant_periodic(fourier_coefficients(spec), l) - build_restricted(spec, l, MN, MN);
        const auto v = eigenvalues(diff).values;
        CHECK(std::count_if(v.begin(), v.end(), [](double x) { return x > 1e-8; }) == spec.degree());
        CHECK(v.front() >= -1e-10);
    }
}

TEST_CASE("spectrum is invariant under modulation") {
    std::mt19937_64 rng(63);
    std::uniform_real_distribution<double> shift(0.0, 2 * kPi);
    for (int trial = 0; trial < 10; ++trial) {
        const auto spec = spec_of(oracle::random_terms(rng, 3, 2, 0.3));
        const auto l = 2 * static_cast<std::size_t>(spec.degree()) + 5;
        const auto a = eigenvalues(build_restricted(spec, l, MN, MN)).values;
        const auto b = eigenvalues(build_restricted(spec.shifted(shift(rng)), l, MN, MN)).values;
        for (std::size_t i = 0; i < l; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-9);
    }
}

TEST_CASE("gap_scan slopes") {
    const std::vector<std::size_t> sizes1{8, 16, 32, 64, 128};
    const auto r1 = gap_scan(make_symbol({{0.0, 1}}), sizes1);
    CHECK(r1.alpha_max == 1);
    CHECK(r1.points.size() == 5);
    CHECK(std::abs(r1.slope + 2.0) <= 0.15);
    CHECK(r1.constant > 0.0);
    for (std::size_t i = 0; i < sizes1.size(); ++i) {
        CHECK(r1.points[i].size == sizes1[i]);
        CHECK(std::abs(r1.points[i].gap - (2.0 - 2.0 * std::cos(kPi / sizes1[i]))) < 1e-9);
    }

    const std::vector<std::size_t> sizes2{8, 16, 32, 64};
    const auto r2 = gap_scan(make_symbol({{0.0, 2}}), sizes2);
    CHECK(r2.slope >= -4.4);
    CHECK(r2.slope <= -2.0);
    CHECK(r2.constant > 0.0);
    for (const auto& p : r2.points) CHECK(p.kernel_count == 2);

    const std::vector<std::size_t> sizes3{16, 32, 64};
    const auto r3 = gap_scan(make_symbol({{0.0, 1}, {2.0, 1}}), sizes3);
    for (const auto& p : r3.points) CHECK(p.kernel_count == 2);

    CHECK_THROWS_AS(gap_scan(make_symbol({{0.0, 1}}), std::span<const std::size_t>{}), Error);
}
