// dnbracket: command-line front end for the dnb library.
#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dnb/dnb.h"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr double kPi = 3.14159265358979323846;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ApiError : std::runtime_error {
    dnb_status status;
    ApiError(dnb_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(dnb_status status) {
    if (status != DNB_OK) {
        std::string msg = dnb_status_name(status);
        if (*dnb_last_error()) msg += std::string(": ") + dnb_last_error();
        throw ApiError(status, msg);
    }
}

struct SymbolDeleter {
    void operator()(dnb_symbol* s) const { dnb_symbol_free(s); }
};
struct MatrixDeleter {
    void operator()(dnb_matrix* m) const { dnb_matrix_free(m); }
};
using SymbolPtr = std::unique_ptr<dnb_symbol, SymbolDeleter>;
using MatrixPtr = std::unique_ptr<dnb_matrix, MatrixDeleter>;

// ---- parsing --------------------------------------------------------------

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return {};
    return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) out.push_back(trim(item));
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

double parse_double(const std::string& text, const std::string& what) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (text.empty() || ec != std::errc{} || ptr != last || !std::isfinite(v))
        throw UsageError("invalid " + what + " '" + text + "'");
    return v;
}

template <class T>
T parse_unsigned(const std::string& text, const std::string& what) {
    T v{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw UsageError("invalid " + what + " '" + text + "'");
    return v;
}

// Accepts decimals and multiples of pi: pi, -pi, 2pi, 2*pi, pi/3, 5pi/3, 0.5*pi/2.
double parse_angle(const std::string& raw) {
    std::string s = trim(raw);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    const auto at = s.find("pi");
    if (at == std::string::npos) return parse_double(s, "angle");
    std::string coef = s.substr(0, at);
    std::string rest = s.substr(at + 2);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    double factor = 1.0;
    if (coef == "-") factor = -1.0;
    else if (!coef.empty() && coef != "+") factor = parse_double(coef, "angle '" + raw + "' coefficient");
    double divisor = 1.0;
    if (!rest.empty()) {
        if (rest.front() != '/') throw UsageError("invalid angle '" + raw + "'");
        divisor = parse_double(rest.substr(1), "angle '" + raw + "' divisor");
        if (divisor == 0.0) throw UsageError("angle '" + raw + "' divides by zero");
    }
    return factor * kPi / divisor;
}

struct FactorList {
    std::vector<double> angles;
    std::vector<int> multiplicities;
};

FactorList parse_factors(const std::string& text) {
    FactorList out;
    for (const auto& item : split(text, ',')) {
        const auto colon = item.rfind(':');
        if (colon == std::string::npos) throw UsageError("factor '" + item + "' is not of the form E:alpha");
        out.angles.push_back(parse_angle(item.substr(0, colon)));
        out.multiplicities.push_back(parse_unsigned<int>(trim(item.substr(colon + 1)), "multiplicity"));
    }
    if (out.angles.empty()) throw UsageError("empty factor list");
    return out;
}

std::vector<std::size_t> parse_sizes(const std::string& text, const std::string& what) {
    std::vector<std::size_t> out;
    for (const auto& item : split(text, ',')) out.push_back(parse_unsigned<std::size_t>(item, what));
    if (out.empty()) throw UsageError("empty " + what);
    return out;
}

std::pair<std::size_t, std::size_t> parse_split(const std::string& text) {
    const auto v = parse_sizes(text, "split size");
    if (v.size() != 2) throw UsageError("--split expects L1,L2");
    return {v[0], v[1]};
}

std::optional<dnb_boundary> boundary_letter(char c) {
    switch (c) {
        case 's': case '0': return DNB_BC_SIMPLE;
        case 'n': return DNB_BC_MODIFIED_NEUMANN;
        case 'd': return DNB_BC_MODIFIED_DIRICHLET;
        case 'c': return DNB_BC_CLASSIC_NEUMANN;
        default: return std::nullopt;
    }
}

dnb_boundary parse_boundary(char c) {
    const auto b = boundary_letter(c);
    if (!b) throw UsageError(std::string("unknown boundary letter '") + c + "' (use s, 0, n, d or c)");
    return *b;
}

// ---- formatting -----------------------------------------------------------

std::string fmt17(double v) {
    if (v == 0.0) v = 0.0;  // drop the sign of -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string complex_cell(double re, double im) {
    if (im == 0.0) im = 0.0;
    return fmt17(re) + (std::signbit(im) ? "-" : "+") + fmt17(std::abs(im)) + "i";
}

// ---- symbols --------------------------------------------------------------

struct SymbolOptions {
    std::string factors;
    std::string penta;
};

struct Symbol {
    SymbolPtr handle;
    ordered_json json;
    std::string text;
};

Symbol load_symbol(const SymbolOptions& opt) {
    if (opt.factors.empty() == opt.penta.empty())
        throw UsageError("exactly one of --factors or --penta is required");
    Symbol s;
    dnb_symbol* raw = nullptr;
    if (!opt.factors.empty()) {
        const auto f = parse_factors(opt.factors);
        check(dnb_symbol_from_factors(f.angles.data(), f.multiplicities.data(), f.angles.size(), &raw));
        s.handle.reset(raw);
        ordered_json list = ordered_json::array();
        for (std::size_t i = 0; i < dnb_symbol_factor_count(raw); ++i) {
            double angle = 0.0;
            int mult = 0;
            check(dnb_symbol_factor(raw, i, &angle, &mult));
            list.push_back({{"angle", angle}, {"multiplicity", mult}});
            s.text += (i ? "," : "") + fmt17(angle) + ":" + std::to_string(mult);
        }
        s.json = {{"factors", list}};
    } else {
        const auto parts = split(opt.penta, ',');
        if (parts.size() != 3) throw UsageError("--penta expects a0,a1,a2");
        const double a0 = parse_double(parts[0], "a0");
        const double a1 = parse_double(parts[1], "a1");
        const double a2 = parse_double(parts[2], "a2");
        check(dnb_symbol_from_penta(a0, a1, a2, &raw));
        s.handle.reset(raw);
        dnb_penta_info info{};
        check(dnb_symbol_penta(raw, &info));
        s.json = {{"penta",
                   {{"a0", a0}, {"a1", a1}, {"a2", a2}, {"scale", info.scale}, {"shift", info.shift}, {"b", info.angle}}}};
        s.text = "penta:" + fmt17(a0) + "," + fmt17(a1) + "," + fmt17(a2);
    }
    return s;
}

// ---- output ---------------------------------------------------------------

struct OutputOptions {
    std::string format = "json";
    std::string path;
};

void emit(const OutputOptions& out, const std::string& content) {
    if (out.path.empty()) {
        std::cout << content << std::flush;
        return;
    }
    std::ofstream file(out.path, std::ios::binary);
    file << content;
    file.close();
    if (!file) throw std::runtime_error("cannot write '" + out.path + "': " + std::strerror(errno));
}

void drop_negative_zero(ordered_json& j) {
    if (j.is_number_float() && j.get<double>() == 0.0) j = 0.0;
    else if (j.is_structured())
        for (auto& v : j) drop_negative_zero(v);
}

std::string dump(ordered_json j) {
    drop_negative_zero(j);
    return j.dump(2) + "\n";
}

ordered_json report_header(const std::string& command, const Symbol& s) {
    return {{"command", command}, {"symbol", s.json}};
}

// ---- commands -------------------------------------------------------------

struct Config {
    SymbolOptions symbol;
    OutputOptions out;
    double tol = 1e-9;
    std::vector<std::string> eval;
    std::string split;
    std::string sizes;
    bool classic = false;
    std::size_t size = 0;
    std::string matrix = "restricted";
    std::string bc;
    std::uint64_t seed = 1;
    std::size_t count = 50;
    std::size_t max_size = 60;
};

int cmd_coeffs(const Config& cfg) {
    const auto s = load_symbol(cfg.symbol);
    const std::size_t n = dnb_symbol_degree(s.handle.get());
    std::vector<double> re(2 * n + 1), im(2 * n + 1);
    check(dnb_symbol_coefficients(s.handle.get(), re.data(), im.data(), re.size()));
    std::vector<std::pair<double, double>> values;
    for (const auto& text : cfg.eval) {
        const double x = parse_angle(text);
        double g = 0.0;
        check(dnb_symbol_evaluate(s.handle.get(), x, &g));
        values.emplace_back(x, g);
    }

    if (cfg.out.format == "csv") {
        std::string csv = "k,re,im\n";
        for (std::size_t i = 0; i < re.size(); ++i)
            csv += std::to_string(static_cast<long>(i) - static_cast<long>(n)) + "," + fmt17(re[i]) + "," +
                   fmt17(im[i]) + "\n";
        if (!values.empty()) {
            csv += "x,value\n";
            for (const auto& [x, g] : values) csv += fmt17(x) + "," + fmt17(g) + "\n";
        }
        emit(cfg.out, csv);
        return kExitOk;
    }
    auto j = report_header("coeffs", s);
    j["degree"] = n;
    ordered_json coeffs = ordered_json::array();
    for (std::size_t i = 0; i < re.size(); ++i)
        coeffs.push_back({{"k", static_cast<long>(i) - static_cast<long>(n)}, {"re", re[i]}, {"im", im[i]}});
    j["coefficients"] = coeffs;
    if (!values.empty()) {
        ordered_json ev = ordered_json::array();
        for (const auto& [x, g] : values) ev.push_back({{"x", x}, {"value", g}});
        j["evaluations"] = ev;
    }
    j["version"] = dnb_version();
    emit(cfg.out, dump(j));
    return kExitOk;
}

int cmd_check(const Config& cfg) {
    const auto s = load_symbol(cfg.symbol);
    const auto [l1, l2] = parse_split(cfg.split);
    dnb_bracket_report r{};
    check(dnb_check_bracketing(s.handle.get(), l1, l2, cfg.tol,
                               cfg.classic ? DNB_BC_CLASSIC_NEUMANN : DNB_BC_MODIFIED_NEUMANN, &r));
    const bool all = r.floor_ok && r.nn_ok && r.lower_ok && r.upper_ok;

    if (cfg.out.format == "csv") {
        std::string csv = "margin,value,verdict\n";
        const std::pair<const char*, std::pair<double, int>> rows[] = {{"floor_nn", {r.floor_nn, r.floor_ok}},
                                                                      {"nn_vs_0n", {r.nn_vs_0n, r.nn_ok}},
                                                                      {"lower", {r.lower, r.lower_ok}},
                                                                      {"upper", {r.upper, r.upper_ok}}};
        for (const auto& [name, v] : rows)
            csv += std::string(name) + "," + fmt17(v.first) + "," + (v.second ? "true" : "false") + "\n";
        emit(cfg.out, csv);
        return all ? kExitOk : kExitFailed;
    }
    auto j = report_header("check", s);
    j["sizes"] = {{"L", r.size}, {"L1", r.size_left}, {"L2", r.size_right}};
    j["neumann"] = cfg.classic ? "classic" : "modified";
    j["margins"] = {{"floor_nn", r.floor_nn}, {"nn_vs_0n", r.nn_vs_0n}, {"lower", r.lower}, {"upper", r.upper}};
    j["verdicts"] = {{"floor_nn", r.floor_ok != 0}, {"nn_vs_0n", r.nn_ok != 0}, {"lower", r.lower_ok != 0},
                     {"upper", r.upper_ok != 0}, {"all", all}};
    j["norm"] = r.norm;
    j["tol"] = r.tol;
    j["version"] = dnb_version();
    emit(cfg.out, dump(j));
    return all ? kExitOk : kExitFailed;
}

int cmd_gap(const Config& cfg) {
    const auto s = load_symbol(cfg.symbol);
    const auto sizes = parse_sizes(cfg.sizes, "size");
    std::vector<dnb_gap_point> points(sizes.size());
    dnb_gap_summary summary{};
    check(dnb_gap_scan(s.handle.get(), sizes.data(), sizes.size(), points.data(), &summary));

    if (cfg.out.format == "csv") {
        std::string csv = "# slope=" + fmt17(summary.slope) + " intercept=" + fmt17(summary.intercept) +
                          " C=" + fmt17(summary.constant) + " alpha_max=" + std::to_string(summary.alpha_max) +
                          " fit_points=" + std::to_string(summary.fit_points) + "\n";
        csv += "L,kernel_count,gap\n";
        for (const auto& p : points)
            csv += std::to_string(p.size) + "," + std::to_string(p.kernel_count) + "," + fmt17(p.gap) + "\n";
        emit(cfg.out, csv);
        return kExitOk;
    }
    auto j = report_header("gap", s);
    j["sizes"] = sizes;
    ordered_json rows = ordered_json::array();
    for (const auto& p : points) rows.push_back({{"L", p.size}, {"kernel_count", p.kernel_count}, {"gap", p.gap}});
    j["points"] = rows;
    j["summary"] = {{"slope", summary.slope}, {"intercept", summary.intercept}, {"C", summary.constant},
                    {"alpha_max", summary.alpha_max}, {"fit_points", summary.fit_points}};
    j["version"] = dnb_version();
    emit(cfg.out, dump(j));
    return kExitOk;
}

int cmd_export(const Config& cfg) {
    const auto s = load_symbol(cfg.symbol);
    const dnb_symbol* sym = s.handle.get();
    std::size_t size = cfg.size;
    std::string bc_label;
    dnb_matrix* raw = nullptr;

    const bool is_diff = cfg.matrix == "diff" || cfg.matrix == "lap2-diff";
    if (is_diff) {
        if (cfg.split.empty()) throw UsageError("--matrix " + cfg.matrix + " needs --split L1,L2");
        const auto [l1, l2] = parse_split(cfg.split);
        if (size != 0 && size != l1 + l2) throw UsageError("--size must equal L1+L2");
        size = l1 + l2;
        char kind = 'n';
        if (cfg.matrix == "lap2-diff") {
            if (!cfg.bc.empty()) throw UsageError("--matrix lap2-diff fixes the boundary to classic Neumann");
            kind = 'c';
        } else if (!cfg.bc.empty()) {
            if (cfg.bc.size() != 1) throw UsageError("--bc for a difference matrix is one letter");
            kind = cfg.bc[0];
        }
        check(dnb_matrix_split_difference(sym, l1, l2, parse_boundary(kind), &raw));
        bc_label = std::string("s") + kind + "|" + kind + "s split=" + std::to_string(l1) + "," + std::to_string(l2);
    } else {
        if (size == 0) throw UsageError("--size is required");
        if (cfg.matrix == "toeplitz") {
            check(dnb_matrix_toeplitz(sym, size, &raw));
            bc_label = "ss";
        } else if (cfg.matrix == "circulant") {
            check(dnb_matrix_circulant(sym, size, &raw));
            bc_label = "periodic";
        } else {
            const std::string bc = cfg.bc.empty() ? "ss" : cfg.bc;
            if (bc.size() != 2) throw UsageError("--bc expects two letters, e.g. nn or 0n");
            check(dnb_matrix_restricted(sym, size, parse_boundary(bc[0]), parse_boundary(bc[1]), &raw));
            bc_label = bc;
        }
    }
    MatrixPtr m(raw);
    const std::size_t dim = dnb_matrix_dim(m.get());

    if (cfg.out.format == "csv") {
        std::string csv = "# dim=" + std::to_string(dim) + " symbol=" + s.text + " bc=" + bc_label +
                          " matrix=" + cfg.matrix + "\n";
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t k = 0; k < dim; ++k) {
                double re = 0.0, im = 0.0;
                check(dnb_matrix_entry(m.get(), i, k, &re, &im));
                csv += (k ? "," : "") + complex_cell(re, im);
            }
            csv += "\n";
        }
        emit(cfg.out, csv);
        return kExitOk;
    }
    auto j = report_header("export", s);
    j["matrix"] = cfg.matrix;
    j["bc"] = bc_label;
    j["dim"] = dim;
    ordered_json re_rows = ordered_json::array(), im_rows = ordered_json::array();
    for (std::size_t i = 0; i < dim; ++i) {
        ordered_json re_row = ordered_json::array(), im_row = ordered_json::array();
        for (std::size_t k = 0; k < dim; ++k) {
            double re = 0.0, im = 0.0;
            check(dnb_matrix_entry(m.get(), i, k, &re, &im));
            re_row.push_back(re);
            im_row.push_back(im);
        }
        re_rows.push_back(re_row);
        im_rows.push_back(im_row);
    }
    j["re"] = re_rows;
    j["im"] = im_rows;
    j["version"] = dnb_version();
    emit(cfg.out, dump(j));
    return kExitOk;
}

// Seeded property run: random product symbols and splits through the bracketing check.
int cmd_certify(const Config& cfg) {
    if (cfg.max_size < 7) throw UsageError("--max-size must be at least 7");
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> factor_count(1, 3), mult(1, 2);
    std::uniform_real_distribution<double> angle(0.0, 2 * kPi);

    ordered_json cases = ordered_json::array();
    std::string csv = "case,factors,L1,L2,floor_nn,nn_vs_0n,lower,upper,norm,ok\n";
    std::size_t passed = 0;
    double worst = 0.0;
    for (std::size_t c = 0; c < cfg.count; ++c) {
        FactorList f;
        int degree = 0;
        const int n = factor_count(rng);
        for (int i = 0; i < n; ++i) {
            double e = angle(rng);
            while (std::any_of(f.angles.begin(), f.angles.end(),
                               [&](double a) { return std::abs(std::remainder(a - e, 2 * kPi)) < 1e-6; }))
                e = angle(rng);
            const int a = mult(rng);
            // both halves need at least 2N+1 rows
            if (2 * (2 * (degree + a) + 1) > static_cast<int>(cfg.max_size)) break;
            f.angles.push_back(e);
            f.multiplicities.push_back(a);
            degree += a;
        }
        const auto lo = static_cast<std::size_t>(2 * degree + 1);
        std::uniform_int_distribution<std::size_t> part(lo, cfg.max_size - lo);
        const std::size_t l1 = part(rng);
        const std::size_t l2 = std::uniform_int_distribution<std::size_t>(lo, cfg.max_size - l1)(rng);

        dnb_symbol* raw = nullptr;
        check(dnb_symbol_from_factors(f.angles.data(), f.multiplicities.data(), f.angles.size(), &raw));
        SymbolPtr sym(raw);
        dnb_bracket_report r{};
        check(dnb_check_bracketing(sym.get(), l1, l2, 0.0, DNB_BC_MODIFIED_NEUMANN, &r));
        const double tol = cfg.tol * std::max(1.0, r.norm);
        const double low = std::min({r.floor_nn, r.nn_vs_0n, r.lower, r.upper});
        const bool ok = low >= -tol;
        passed += ok;
        worst = std::min(worst, low / std::max(1.0, r.norm));

        std::string text;
        ordered_json flist = ordered_json::array();
        for (std::size_t i = 0; i < f.angles.size(); ++i) {
            text += (i ? ";" : "") + fmt17(f.angles[i]) + ":" + std::to_string(f.multiplicities[i]);
            flist.push_back({{"angle", f.angles[i]}, {"multiplicity", f.multiplicities[i]}});
        }
        csv += std::to_string(c) + "," + text + "," + std::to_string(l1) + "," + std::to_string(l2) + "," +
               fmt17(r.floor_nn) + "," + fmt17(r.nn_vs_0n) + "," + fmt17(r.lower) + "," + fmt17(r.upper) + "," +
               fmt17(r.norm) + "," + (ok ? "true" : "false") + "\n";
        cases.push_back({{"factors", flist},
                         {"sizes", {{"L1", l1}, {"L2", l2}}},
                         {"margins", {{"floor_nn", r.floor_nn}, {"nn_vs_0n", r.nn_vs_0n}, {"lower", r.lower},
                                      {"upper", r.upper}}},
                         {"norm", r.norm},
                         {"ok", ok}});
    }
    const bool all = passed == cfg.count;
    if (cfg.out.format == "csv") {
        emit(cfg.out, csv);
        return all ? kExitOk : kExitFailed;
    }
    ordered_json j = {{"command", "certify"}, {"seed", cfg.seed}, {"count", cfg.count}, {"passed", passed},
                      {"worst_relative_margin", worst}, {"tol", cfg.tol}, {"cases", cases},
                      {"version", dnb_version()}};
    emit(cfg.out, dump(j));
    return all ? kExitOk : kExitFailed;
}

void add_symbol_options(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--factors", cfg.symbol.factors, "Product symbol as E:alpha,... (angles accept pi)");
    cmd->add_option("--penta", cfg.symbol.penta, "Pentadiagonal symbol as a0,a1,a2");
}

void add_output_options(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--format", cfg.out.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", cfg.out.path, "Write output to PATH instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirichlet-Neumann bracketing for banded Toeplitz matrices"};
    app.set_version_flag("--version", std::string(dnb_version()));
    app.require_subcommand(1);
    Config cfg;

    auto* coeffs = app.add_subcommand("coeffs", "Print the Fourier coefficients a_-N..a_N");
    add_symbol_options(coeffs, cfg);
    coeffs->add_option("--eval", cfg.eval, "Evaluate the symbol at x (repeatable)");
    add_output_options(coeffs, cfg);

    auto* chk = app.add_subcommand("check", "Certify the bracketing inequalities for a split L = L1 + L2");
    add_symbol_options(chk, cfg);
    chk->add_option("--split", cfg.split, "L1,L2")->required();
    chk->add_flag("--classic-neumann", cfg.classic, "Use the classic Neumann restriction instead of the modified one");
    chk->add_option("--tol", cfg.tol, "Absolute tolerance for the margins")->check(CLI::NonNegativeNumber);
    add_output_options(chk, cfg);

    auto* gap = app.add_subcommand("gap", "Scan the spectral gap over a list of sizes");
    add_symbol_options(gap, cfg);
    gap->add_option("--sizes", cfg.sizes, "L1,L2,...")->required();
    add_output_options(gap, cfg);

    auto* exp = app.add_subcommand("export", "Write a matrix as CSV (or JSON)");
    add_symbol_options(exp, cfg);
    exp->add_option("--size", cfg.size, "Matrix dimension L");
    exp->add_option("--matrix", cfg.matrix, "Matrix kind")
        ->check(CLI::IsMember({"toeplitz", "circulant", "restricted", "diff", "lap2-diff"}));
    exp->add_option("--bc", cfg.bc, "Boundary letters (s/0 simple, n, d modified, c classic Neumann)");
    exp->add_option("--split", cfg.split, "L1,L2 for difference matrices");
    add_output_options(exp, cfg);

    auto* cert = app.add_subcommand("certify", "Seeded random bracketing certification");
    cert->add_option("--seed", cfg.seed, "Random seed");
    cert->add_option("--count", cfg.count, "Number of random cases");
    cert->add_option("--max-size", cfg.max_size, "Largest L = L1 + L2");
    cert->add_option("--tol", cfg.tol, "Tolerance relative to max(1, |T|)")->check(CLI::NonNegativeNumber);
    add_output_options(cert, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (exp->parsed() && exp->count("--format") == 0) cfg.out.format = "csv";

    try {
        if (coeffs->parsed()) return cmd_coeffs(cfg);
        if (chk->parsed()) return cmd_check(cfg);
        if (gap->parsed()) return cmd_gap(cfg);
        if (exp->parsed()) return cmd_export(cfg);
        return cmd_certify(cfg);
    } catch (const UsageError& e) {
        std::cerr << "dnbracket: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ApiError& e) {
        std::cerr << "dnbracket: " << e.what() << "\n";
        const bool verification = e.status == DNB_E_KERNEL_MISMATCH || e.status == DNB_E_NO_CONVERGENCE;
        return verification ? kExitFailed : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "dnbracket: " << e.what() << "\n";
        return kExitUsage;
    }
}
