#include <cmath>
#include <cstring>
#include <vector>

#include "doctest.h"
#include "dnb/dnb.h"

namespace {

constexpr double kPi = 3.14159265358979323846;

struct SymbolHandle {
    dnb_symbol* p = nullptr;
    ~SymbolHandle() { dnb_symbol_free(p); }
};

struct MatrixHandle {
    dnb_matrix* p = nullptr;
    ~MatrixHandle() { dnb_matrix_free(p); }
};

SymbolHandle lap2() {
    SymbolHandle s;
    const double e[] = {0.0};
    const int a[] = {2};
    REQUIRE(dnb_symbol_from_factors(e, a, 1, &s.p) == DNB_OK);
    return s;
}

}  // namespace

TEST_CASE("version and status names") {
    CHECK(std::strcmp(dnb_version(), "0.1.0") == 0);
    CHECK(std::strcmp(dnb_status_name(DNB_OK), "OK") == 0);
    CHECK(std::strcmp(dnb_status_name(DNB_E_OUT_OF_CLASS), "OutOfClass") == 0);
    CHECK(std::strcmp(dnb_status_name(static_cast<dnb_status>(99)), "Unknown") == 0);
}

TEST_CASE("symbol construction and queries") {
    SymbolHandle s;
    const double e[] = {2.0, 0.0};
    const int a[] = {1, 1};
    REQUIRE(dnb_symbol_from_factors(e, a, 2, &s.p) == DNB_OK);
    CHECK(dnb_symbol_degree(s.p) == 2);
    CHECK(dnb_symbol_factor_count(s.p) == 2);
    double angle = 0;
    int mult = 0;
    REQUIRE(dnb_symbol_factor(s.p, 1, &angle, &mult) == DNB_OK);
    CHECK(mult == 1);
    CHECK(dnb_symbol_factor(s.p, 2, &angle, &mult) == DNB_E_INVALID_ARGUMENT);
    CHECK(dnb_symbol_is_penta(s.p) == 0);
    dnb_penta_info info{};
    CHECK(dnb_symbol_penta(s.p, &info) == DNB_E_INVALID_ARGUMENT);

    double re[5], im[5];
    REQUIRE(dnb_symbol_coefficients(s.p, re, im, 5) == DNB_OK);
    CHECK(std::abs(re[2] - (4.0 + 2.0 * std::cos(2.0))) < 1e-14);
    CHECK(std::abs(im[2]) < 1e-14);
    CHECK(dnb_symbol_coefficients(s.p, re, im, 4) == DNB_E_BUFFER_TOO_SMALL);

    double g = 0;
    REQUIRE(dnb_symbol_evaluate(s.p, 1.0, &g) == DNB_OK);
    CHECK(std::abs(g - (2 - 2 * std::cos(1.0)) * (2 - 2 * std::cos(-1.0))) < 1e-13);
}

TEST_CASE("symbol errors map to status codes") {
    dnb_symbol* s = nullptr;
    const double dup[] = {1.0, 1.0 + 2 * kPi};
    const int ones[] = {1, 1};
    CHECK(dnb_symbol_from_factors(dup, ones, 2, &s) == DNB_E_DUPLICATE_ANGLE);
    CHECK(std::strlen(dnb_last_error()) > 0);
    const double one[] = {1.0};
    const int zero[] = {0};
    CHECK(dnb_symbol_from_factors(one, zero, 1, &s) == DNB_E_INVALID_MULTIPLICITY);
    CHECK(dnb_symbol_from_factors(nullptr, ones, 1, &s) == DNB_E_INVALID_ARGUMENT);
    CHECK(dnb_symbol_from_factors(one, ones, 0, &s) == DNB_E_INVALID_ARGUMENT);
    CHECK(dnb_symbol_from_penta(1.0, 5.0, 1.0, &s) == DNB_E_OUT_OF_CLASS);
    CHECK(dnb_symbol_from_penta(1.0, 0.0, -1.0, &s) == DNB_E_OUT_OF_CLASS);
    CHECK(s == nullptr);

    const auto ok = lap2();
    CHECK(std::strlen(dnb_last_error()) == 0);
}

TEST_CASE("pentadiagonal symbols") {
    SymbolHandle s;
    REQUIRE(dnb_symbol_from_penta(6.0, -4.0, 1.0, &s.p) == DNB_OK);
    CHECK(dnb_symbol_is_penta(s.p) == 1);
    dnb_penta_info info{};
    REQUIRE(dnb_symbol_penta(s.p, &info) == DNB_OK);
    CHECK(info.scale == 1.0);
    CHECK(std::abs(info.shift) < 1e-12);
    CHECK(std::abs(info.angle) < 1e-12);
    CHECK(dnb_symbol_degree(s.p) == 2);

    double re[5], im[5];
    REQUIRE(dnb_symbol_coefficients(s.p, re, im, 5) == DNB_OK);
    const double expected[] = {1.0, -4.0, 6.0, -4.0, 1.0};
    for (int i = 0; i < 5; ++i) CHECK(re[i] == expected[i]);

    const size_t sizes[] = {8, 16};
    dnb_gap_point points[2];
    dnb_gap_summary summary{};
    CHECK(dnb_gap_scan(s.p, sizes, 2, points, &summary) == DNB_E_OUT_OF_CLASS);

    dnb_bracket_report r{};
    REQUIRE(dnb_check_bracketing(s.p, 6, 7, 1e-9, DNB_BC_MODIFIED_NEUMANN, &r) == DNB_OK);
    CHECK(r.floor_ok);
    CHECK(r.lower_ok);
}

TEST_CASE("matrices") {
    const auto s = lap2();
    MatrixHandle t;
    REQUIRE(dnb_matrix_toeplitz(s.p, 5, &t.p) == DNB_OK);
    CHECK(dnb_matrix_dim(t.p) == 5);
    double re = 0, im = 0;
    REQUIRE(dnb_matrix_entry(t.p, 0, 2, &re, &im) == DNB_OK);
    CHECK(re == 1.0);
    CHECK(dnb_matrix_entry(t.p, 5, 0, &re, &im) == DNB_E_INVALID_ARGUMENT);

    MatrixHandle small;
    CHECK(dnb_matrix_toeplitz(s.p, 3, &small.p) == DNB_E_SIZE_TOO_SMALL);
    CHECK(dnb_matrix_circulant(s.p, 4, &small.p) == DNB_E_SIZE_TOO_SMALL);
    CHECK(dnb_matrix_restricted(s.p, 4, DNB_BC_MODIFIED_NEUMANN, DNB_BC_SIMPLE, &small.p) == DNB_E_SIZE_TOO_SMALL);
    CHECK(dnb_matrix_restricted(s.p, 8, static_cast<dnb_boundary>(7), DNB_BC_SIMPLE, &small.p) ==
          DNB_E_INVALID_ARGUMENT);
    CHECK(small.p == nullptr);

    MatrixHandle c;
    REQUIRE(dnb_matrix_circulant(s.p, 6, &c.p) == DNB_OK);
    std::vector<double> ev(6);
    REQUIRE(dnb_matrix_eigenvalues(c.p, ev.data(), ev.size()) == DNB_OK);
    CHECK(std::abs(ev.front()) < 1e-12);
    CHECK(std::abs(ev.back() - 16.0) < 1e-12);
    CHECK(dnb_matrix_eigenvalues(c.p, ev.data(), 5) == DNB_E_BUFFER_TOO_SMALL);

    MatrixHandle nn;
    REQUIRE(dnb_matrix_restricted(s.p, 10, DNB_BC_MODIFIED_NEUMANN, DNB_BC_MODIFIED_NEUMANN, &nn.p) == DNB_OK);
    std::vector<double> nev(10);
    REQUIRE(dnb_matrix_eigenvalues(nn.p, nev.data(), nev.size()) == DNB_OK);
    CHECK(std::abs(nev[0]) < 1e-10);
    CHECK(std::abs(nev[1]) < 1e-10);
    CHECK(nev[2] > 1e-3);

    MatrixHandle diff;
    REQUIRE(dnb_matrix_split_difference(s.p, 5, 5, DNB_BC_MODIFIED_NEUMANN, &diff.p) == DNB_OK);
    std::vector<double> dev(10);
    REQUIRE(dnb_matrix_eigenvalues(diff.p, dev.data(), dev.size()) == DNB_OK);
    CHECK(dev.front() >= -1e-10);

    MatrixHandle classic;
    REQUIRE(dnb_matrix_split_difference(s.p, 4, 4, DNB_BC_CLASSIC_NEUMANN, &classic.p) == DNB_OK);
    std::vector<double> cev(8);
    REQUIRE(dnb_matrix_eigenvalues(classic.p, cev.data(), cev.size()) == DNB_OK);
    CHECK(cev.front() < -0.1);
    CHECK(cev.back() > 0.1);
}

TEST_CASE("bracketing report") {
    const auto s = lap2();
    dnb_bracket_report r{};
    REQUIRE(dnb_check_bracketing(s.p, 7, 7, 1e-9, DNB_BC_MODIFIED_NEUMANN, &r) == DNB_OK);
    CHECK(r.size == 14);
    CHECK(r.floor_ok + r.nn_ok + r.lower_ok + r.upper_ok == 4);
    CHECK(r.tol == 1e-9);

    REQUIRE(dnb_check_bracketing(s.p, 7, 7, 1e-9, DNB_BC_CLASSIC_NEUMANN, &r) == DNB_OK);
    CHECK(r.lower_ok == 0);
    CHECK(dnb_check_bracketing(s.p, 4, 7, 1e-9, DNB_BC_MODIFIED_NEUMANN, &r) == DNB_E_SIZE_TOO_SMALL);
    CHECK(dnb_check_bracketing(s.p, 7, 7, 1e-9, DNB_BC_SIMPLE, &r) == DNB_E_INVALID_ARGUMENT);
}

TEST_CASE("gap scan") {
    SymbolHandle s;
    const double e[] = {0.0};
    const int a[] = {1};
    REQUIRE(dnb_symbol_from_factors(e, a, 1, &s.p) == DNB_OK);
    const size_t sizes[] = {8, 16, 32, 64};
    dnb_gap_point points[4];
    dnb_gap_summary summary{};
    REQUIRE(dnb_gap_scan(s.p, sizes, 4, points, &summary) == DNB_OK);
    CHECK(summary.alpha_max == 1);
    CHECK(std::abs(summary.slope + 2.0) < 0.15);
    for (int i = 0; i < 4; ++i) {
        CHECK(points[i].size == sizes[i]);
        CHECK(points[i].kernel_count == 1);
        CHECK(std::abs(points[i].gap - (2 - 2 * std::cos(kPi / static_cast<double>(sizes[i])))) < 1e-9);
    }
}

TEST_CASE("grid shift and Vandermonde") {
    const double angles[] = {1.0};
    double shift = 0;
    REQUIRE(dnb_grid_shift(angles, 1, 10, &shift) == DNB_OK);
    CHECK(std::abs(std::remainder(shift - (-1.0 + kPi / 10), 2 * kPi)) < 1e-14);
    const double dup[] = {1.0, 1.0};
    CHECK(dnb_grid_shift(dup, 2, 10, &shift) == DNB_E_DUPLICATE_ANGLE);

    const double re[] = {1.0, std::cos(1.1)}, im[] = {0.0, std::sin(1.1)};
    const int ones[] = {1, 1};
    double v = 0;
    REQUIRE(dnb_confluent_vandermonde_abs(re, im, ones, 2, &v) == DNB_OK);
    CHECK(std::abs(v - std::hypot(1.0 - re[1], im[1])) < 1e-15);
    const double rdup[] = {1.0, 1.0}, idup[] = {0.0, 0.0};
    CHECK(dnb_confluent_vandermonde_abs(rdup, idup, ones, 2, &v) == DNB_E_DUPLICATE_NODE);
}
