#pragma once

// Command-line driver: parameter sweeps to CSV, the negative-entropy scan and verification.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "thermo/thermo.hpp"

namespace thermo::cli {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// "X" or "min:max:steps[:log]"
struct Range {
    double min = 0, max = 0;
    int steps = 1;
    bool log = false;

    std::vector<double> values() const
    {
        if (steps == 1)
            return {min};
        std::vector<double> v;
        for (int i = 0; i < steps; ++i) {
            const double f = static_cast<double>(i) / (steps - 1);
            v.push_back(log ? min * std::pow(max / min, f) : min + (max - min) * f);
        }
        v.back() = max;
        return v;
    }
};

inline double parse_double(std::string_view s)
{
    double v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw UsageError("not a number: '" + std::string(s) + "'");
    return v;
}

inline Range parse_range(std::string_view text)
{
    std::vector<std::string_view> f;
    std::size_t start = 0;
    for (;;) {
        const auto pos = text.find(':', start);
        f.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    Range r;
    if (f.size() == 1) {
        r.min = r.max = parse_double(f[0]);
        return r;
    }
    if (f.size() < 3 || f.size() > 4 || (f.size() == 4 && f[3] != "log"))
        throw UsageError("range must be X or min:max:steps[:log], got '" + std::string(text) + "'");
    r.min = parse_double(f[0]);
    r.max = parse_double(f[1]);
    const double n = parse_double(f[2]);
    if (!(n >= 1) || n != std::floor(n) || n > 1e6)
        throw UsageError("range steps must be a positive integer: '" + std::string(text) + "'");
    r.steps = static_cast<int>(n);
    r.log = f.size() == 4;
    if (!(r.max >= r.min) || !std::isfinite(r.min) || !std::isfinite(r.max))
        throw UsageError("range needs finite min <= max: '" + std::string(text) + "'");
    if (r.log && !(r.min > 0))
        throw UsageError("log range needs min > 0: '" + std::string(text) + "'");
    if (r.steps == 1 && r.max != r.min)
        throw UsageError("range with one step needs min == max: '" + std::string(text) + "'");
    return r;
}

struct Common {
    double tmin = 1e-2, tmax = 1e2;
    int tpts = 8;
    double rel_tol = 1e-9, abs_tol = 1e-12;
    int max_subdiv = QuadSettings{}.max_subdivisions;
    int jobs = 1;
    std::string out = "-";
    double scale = 1.0;

    QuadSettings settings() const
    {
        if (!(rel_tol >= 0) || !(abs_tol >= 0) || (rel_tol == 0 && abs_tol == 0))
            throw UsageError("tolerances must be >= 0 and not both zero");
        auto s = QuadSettings{}.with_tol(rel_tol, abs_tol);
        s.max_subdivisions = max_subdiv;
        return s;
    }

    std::vector<double> temperatures() const
    {
        if (!(tmin > 0) || !(tmax >= tmin) || !std::isfinite(tmax) || tpts < 1)
            throw UsageError("empty temperature grid: need 0 < tmin <= tmax and tpts >= 1");
        return log_grid(tmin, tmax, tpts);
    }
};

inline std::string format_number(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12e", v);
    return buf;
}

// Evaluates f(i) for i < n on up to jobs threads. f must not throw.
template <class F>
void parallel_for(std::size_t n, int jobs, F&& f)
{
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < n;)
            f(i);
    };
    const auto nt = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), n);
    if (nt <= 1) {
        worker();
        return;
    }
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < nt; ++t)
        pool.emplace_back(worker);
}

namespace detail {

// A cell is either empty (part not selected) or a number.
using Cell = std::optional<double>;

inline std::string join_row(const std::vector<std::string>& fields)
{
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i)
            line += ',';
        line += fields[i];
    }
    return line;
}

struct RowOut {
    std::vector<Cell> cells;
    double max_err = 0;
    bool ok = true;
};

inline std::string render(const std::vector<double>& leading, const RowOut& r, const std::vector<std::string>& trailing,
                          double scale)
{
    std::vector<std::string> f;
    for (double v : leading)
        f.push_back(format_number(v));
    for (const auto& c : r.cells)
        f.push_back(c ? format_number(r.ok ? *c : std::nan("")) : "");
    f.push_back(format_number(r.ok ? r.max_err : std::nan("")));
    for (const auto& t : trailing)
        f.push_back(t);
    f.push_back(r.ok ? "ok" : "error");
    f.push_back(format_number(scale));
    return join_row(f);
}

// Writes to --out or to the given stream for "-".
struct Sink {
    std::ofstream file;
    std::ostream* os = nullptr;

    Sink(const std::string& path, std::ostream& fallback)
    {
        if (path == "-") {
            os = &fallback;
            return;
        }
        file.open(path);
        if (!file)
            throw std::runtime_error("cannot open output file '" + path + "'");
        os = &file;
    }
};

} // namespace detail

struct SheetSpec {
    std::string Omega0 = "1", omega0 = "0";
    std::vector<std::string> parts{"TE", "TM", "sf"};
};

inline std::vector<Part> sheet_parts(const std::vector<std::string>& names)
{
    std::vector<Part> out;
    for (const auto& n : names) {
        Part p;
        if (n == "TE")
            p = Part::TE;
        else if (n == "TM")
            p = Part::TM;
        else if (n == "sf")
            p = Part::surface_plasmon;
        else
            throw UsageError("unknown sheet part '" + n + "' (TE, TM, sf)");
        if (std::find(out.begin(), out.end(), p) == out.end())
            out.push_back(p);
    }
    if (out.empty())
        throw UsageError("no parts selected");
    return out;
}

inline const std::vector<std::string>& sheet_header()
{
    static const std::vector<std::string> h{"Omega0", "omega0", "T",      "F_TE",   "S_TE",    "F_TM",   "S_TM", "F_sf",
                                            "S_sf",   "F_subtr", "S_subtr", "F_raw", "S_raw",  "max_err", "status", "scale"};
    return h;
}

inline int cmd_sheet(const SheetSpec& spec, const Common& c, std::ostream& out)
{
    const auto parts = sheet_parts(spec.parts);
    const auto Ts = c.temperatures();
    const auto s = c.settings();
    struct Job {
        sheet::SheetParams P;
        double T;
    };
    std::vector<Job> jobs;
    for (double W : parse_range(spec.Omega0).values())
        for (double w0 : parse_range(spec.omega0).values()) {
            sheet::SheetParams P{W, w0};
            try {
                P.validate();
            } catch (const std::exception& e) {
                throw UsageError(e.what());
            }
            for (double T : Ts)
                jobs.push_back({P, T});
        }
    std::vector<std::string> rows(jobs.size());
    parallel_for(jobs.size(), c.jobs, [&](std::size_t i) {
        const auto& j = jobs[i];
        detail::RowOut r;
        r.cells.assign(10, std::nullopt);
        double F = 0, S = 0, Fr = 0, Sr = 0;
        try {
            for (Part p : parts) {
                const auto v = sheet::part_value(p, j.T, j.P, s);
                const int col = p == Part::TE ? 0 : p == Part::TM ? 2 : 4;
                r.cells[col] = v.F;
                r.cells[col + 1] = v.S;
                F += v.F, S += v.S, Fr += v.F_raw, Sr += v.S_raw;
                r.max_err = std::max(r.max_err, v.error);
            }
            r.cells[6] = F, r.cells[7] = S, r.cells[8] = Fr, r.cells[9] = Sr;
            r.ok = std::all_of(r.cells.begin(), r.cells.end(), [](const detail::Cell& x) { return !x || std::isfinite(*x); });
        } catch (const std::exception&) {
            r.ok = false;
            for (Part p : parts) {
                const int col = p == Part::TE ? 0 : p == Part::TM ? 2 : 4;
                r.cells[col] = r.cells[col + 1] = 0.0;
            }
            for (int k = 6; k < 10; ++k)
                r.cells[k] = 0.0;
        }
        rows[i] = detail::render({j.P.Omega0, j.P.omega0, j.T}, r, {}, c.scale);
    });
    detail::Sink sink(c.out, out);
    *sink.os << detail::join_row(sheet_header()) << '\n';
    for (const auto& r : rows)
        *sink.os << r << '\n';
    return exit_ok;
}

struct SlabSpec {
    std::string omega_p = "1", L = "1";
    std::vector<std::string> parts{"s", "L", "exp"};
    std::string dispersion;
    double kmin = 1e-2, kmax = 1e2;
    int kpts = 10;
};

inline std::vector<Part> slab_parts(const std::vector<std::string>& names)
{
    std::vector<Part> out;
    auto add = [&](Part p) {
        if (std::find(out.begin(), out.end(), p) == out.end())
            out.push_back(p);
    };
    for (const auto& n : names) {
        if (n == "s")
            add(Part::surface_TE), add(Part::surface_TM);
        else if (n == "L")
            add(Part::lifshitz_TE), add(Part::lifshitz_TM);
        else if (n == "s_TE")
            add(Part::surface_TE);
        else if (n == "s_TM")
            add(Part::surface_TM);
        else if (n == "L_TE")
            add(Part::lifshitz_TE);
        else if (n == "L_TM")
            add(Part::lifshitz_TM);
        else if (n == "exp")
            add(Part::exp);
        else
            throw UsageError("unknown slab part '" + n + "' (s, L, exp, s_TE, s_TM, L_TE, L_TM)");
    }
    if (out.empty())
        throw UsageError("no parts selected");
    return out;
}

inline const std::vector<std::string>& slab_header()
{
    static const std::vector<std::string> h{"omega_p", "L",      "T",       "F_s_TE", "S_s_TE",  "F_s_TM",  "S_s_TM",
                                            "F_L_TE",  "S_L_TE", "F_L_TM",  "S_L_TM", "F_exp",   "S_exp",   "F_subtr",
                                            "S_subtr", "F_raw",  "S_raw",   "max_err", "plasmon_excluded", "status", "scale"};
    return h;
}

inline int slab_column(Part p)
{
    switch (p) {
    case Part::surface_TE: return 0;
    case Part::surface_TM: return 2;
    case Part::lifshitz_TE: return 4;
    case Part::lifshitz_TM: return 6;
    case Part::exp: return 8;
    default: throw std::logic_error("slab_column: not a slab part");
    }
}

inline void write_dispersion(const SlabSpec& spec, const std::vector<slab::SlabParams>& params, const Common& c)
{
    if (!(spec.kmin > 0) || !(spec.kmax >= spec.kmin) || spec.kpts < 1)
        throw UsageError("empty k grid: need 0 < kmin <= kmax and kpts >= 1");
    std::ofstream f(spec.dispersion);
    if (!f)
        throw std::runtime_error("cannot open dispersion file '" + spec.dispersion + "'");
    f << "omega_p,L,k,omega_sf,omega_single,status,scale\n";
    for (const auto& P : params)
        for (double k : log_grid(spec.kmin, spec.kmax, spec.kpts)) {
            double w = std::nan(""), w1 = std::nan("");
            bool ok = true;
            try {
                w = slab::plasmon_dispersion(k, P);
                w1 = slab::plasmon_single_surface(k, P.omega_p);
            } catch (const std::exception&) {
                ok = false;
            }
            f << detail::join_row({format_number(P.omega_p), format_number(P.L), format_number(k), format_number(w),
                                   format_number(w1), ok ? "ok" : "error", format_number(c.scale)})
              << '\n';
        }
}

inline int cmd_slab(const SlabSpec& spec, const Common& c, std::ostream& out)
{
    const auto parts = slab_parts(spec.parts);
    const auto Ts = c.temperatures();
    const auto s = c.settings();
    std::vector<slab::SlabParams> params;
    for (double wp : parse_range(spec.omega_p).values())
        for (double L : parse_range(spec.L).values()) {
            slab::SlabParams P{wp, L};
            try {
                P.validate();
            } catch (const std::exception& e) {
                throw UsageError(e.what());
            }
            params.push_back(P);
        }
    struct Job {
        slab::SlabParams P;
        double T;
    };
    std::vector<Job> jobs;
    for (const auto& P : params)
        for (double T : Ts)
            jobs.push_back({P, T});
    std::vector<std::string> rows(jobs.size());
    parallel_for(jobs.size(), c.jobs, [&](std::size_t i) {
        const auto& j = jobs[i];
        detail::RowOut r;
        r.cells.assign(14, std::nullopt);
        double F = 0, S = 0, Fr = 0, Sr = 0;
        try {
            for (Part p : parts) {
                const auto v = slab::part_value(p, j.T, j.P, s);
                const int col = slab_column(p);
                r.cells[col] = v.F;
                r.cells[col + 1] = v.S;
                F += v.F, S += v.S, Fr += v.F_raw, Sr += v.S_raw;
                r.max_err = std::max(r.max_err, v.error);
            }
            r.cells[10] = F, r.cells[11] = S, r.cells[12] = Fr, r.cells[13] = Sr;
            r.ok = std::all_of(r.cells.begin(), r.cells.end(), [](const detail::Cell& x) { return !x || std::isfinite(*x); });
        } catch (const std::exception&) {
            r.ok = false;
            for (Part p : parts)
                r.cells[slab_column(p)] = r.cells[slab_column(p) + 1] = 0.0;
            for (int k = 10; k < 14; ++k)
                r.cells[k] = 0.0;
        }
        rows[i] = detail::render({j.P.omega_p, j.P.L, j.T}, r, {"1"}, c.scale);
    });
    detail::Sink sink(c.out, out);
    *sink.os << detail::join_row(slab_header()) << '\n';
    for (const auto& r : rows)
        *sink.os << r << '\n';
    if (!spec.dispersion.empty())
        write_dispersion(spec, params, c);
    return exit_ok;
}

struct ScanSpec {
    std::string Omega0 = "1";
    std::string omega0 = "0.6:0.95:71";
};

inline int cmd_scan(const ScanSpec& spec, const Common& c, std::ostream& out, std::ostream& err)
{
    const auto Ts = c.temperatures();
    const auto s = c.settings();
    std::vector<sheet::SheetParams> params;
    for (double W : parse_range(spec.Omega0).values())
        for (double w0 : parse_range(spec.omega0).values()) {
            sheet::SheetParams P{W, w0};
            try {
                P.validate();
            } catch (const std::exception& e) {
                throw UsageError(e.what());
            }
            params.push_back(P);
        }
    std::vector<sheet::ScanRow> res(params.size());
    std::vector<char> ok(params.size(), 1);
    parallel_for(params.size(), c.jobs, [&](std::size_t i) {
        try {
            res[i] = sheet::scan_point(params[i], Ts, s);
            ok[i] = std::isfinite(res[i].c) && std::isfinite(res[i].min_S);
        } catch (const std::exception&) {
            ok[i] = 0;
        }
    });
    {
        detail::Sink sink(c.out, out);
        *sink.os << "Omega0,omega0,c,min_S,T_at_min,max_err,status,scale\n";
        for (std::size_t i = 0; i < params.size(); ++i) {
            const auto& r = res[i];
            const double nan = std::nan("");
            *sink.os << detail::join_row({format_number(params[i].Omega0), format_number(params[i].omega0),
                                          format_number(ok[i] ? r.c : nan), format_number(ok[i] ? r.min_S : nan),
                                          format_number(ok[i] ? r.T_at_min : nan),
                                          format_number(ok[i] ? r.max_error : nan), ok[i] ? "ok" : "error",
                                          format_number(c.scale)})
                     << '\n';
        }
    }
    // summary per Omega0: endpoints of the omega0 points with c < 0
    std::ostream& sum = c.out == "-" ? err : out;
    std::size_t i = 0;
    while (i < params.size()) {
        const double W = params[i].Omega0;
        double lo = std::nan(""), hi = std::nan(""), cmin = std::nan(""), at = std::nan("");
        int n = 0, neg = 0, failed = 0;
        bool contiguous = true, seen_gap = false;
        for (; i < params.size() && params[i].Omega0 == W; ++i, ++n) {
            if (!ok[i]) {
                ++failed;
                continue;
            }
            const bool negative = res[i].c < 0;
            if (negative) {
                if (neg > 0 && seen_gap)
                    contiguous = false;
                if (neg == 0)
                    lo = params[i].omega0;
                hi = params[i].omega0;
                ++neg;
                if (!(res[i].c >= cmin)) {
                    cmin = res[i].c;
                    at = params[i].omega0;
                }
            } else if (neg > 0) {
                seen_gap = true;
            }
        }
        char buf[256];
        if (neg == 0)
            std::snprintf(buf, sizeof buf, "Omega0=%g: no negative ln T coefficient on %d points", W, n);
        else
            std::snprintf(buf, sizeof buf,
                          "Omega0=%g: c < 0 for omega0 in [%.6g, %.6g] (%.6g to %.6g Omega0), %d of %d points%s; "
                          "min c = %.6g at omega0 = %.6g",
                          W, lo, hi, lo / W, hi / W, neg, n, contiguous ? "" : ", not contiguous", cmin, at);
        sum << buf;
        if (failed)
            sum << "; " << failed << " points failed";
        sum << '\n';
    }
    return exit_ok;
}

inline nlohmann::json to_json(const verify::Check& ch, int criterion)
{
    return {{"suite", ch.suite},       {"check", ch.name},          {"expected", ch.expected},
            {"measured", ch.measured}, {"tolerance", ch.tolerance}, {"pass", ch.pass},
            {"mode", to_string(ch.mode)}, {"criterion", criterion}};
}

inline int cmd_verify(const std::string& suite, const Common& c, std::ostream& out, std::ostream& err)
{
    const auto& names = verify::suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw UsageError("unknown suite '" + suite + "'");
    const auto crit = verify::run_suite(suite);
    detail::Sink sink(c.out, out);
    int total = 0, passed = 0;
    for (const auto& cr : crit)
        for (const auto& ch : cr.checks) {
            *sink.os << to_json(ch, cr.number).dump() << '\n';
            ++total;
            passed += ch.pass;
            char buf[320];
            std::snprintf(buf, sizeof buf, "[%s] %-48s measured %.9g expected %.9g (%s %g)\n", ch.pass ? "PASS" : "FAIL",
                          ch.name.c_str(), ch.measured, ch.expected, to_string(ch.mode), ch.tolerance);
            err << buf;
        }
    err << "suite " << suite << ": " << passed << "/" << total << " checks passed\n";
    return passed == total ? exit_ok : exit_failure;
}

inline void add_common(CLI::App* sub, Common& c, bool temperatures)
{
    if (temperatures) {
        sub->add_option("--tmin", c.tmin, "lowest temperature")->capture_default_str();
        sub->add_option("--tmax", c.tmax, "highest temperature")->capture_default_str();
        sub->add_option("--tpts", c.tpts, "temperature points per decade")->capture_default_str();
        sub->add_option("--rel-tol", c.rel_tol, "relative quadrature tolerance")->capture_default_str();
        sub->add_option("--abs-tol", c.abs_tol, "absolute quadrature tolerance")->capture_default_str();
        sub->add_option("--max-subdiv", c.max_subdiv, "adaptive quadrature subdivision limit")
            ->capture_default_str()
            ->check(CLI::Range(1, 1000000));
        sub->add_option("--jobs", c.jobs, "worker threads")->capture_default_str()->check(CLI::Range(1, 1024));
        sub->add_option("--scale", c.scale, "unit label written as the last CSV column, never used in computation")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
    }
    sub->add_option("--out", c.out, "output file, - for stdout")->capture_default_str();
}

// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    CLI::App app{"Thermal Casimir free energy and entropy of a plasma sheet and a plasma slab", "thermo"};
    app.set_config("--config", "", "read options from a TOML/INI file; flags override it");
    app.require_subcommand(1);

    Common sheet_c, slab_c, scan_c, verify_c;
    scan_c.tmax = 1e3;
    scan_c.tpts = 32;
    SheetSpec sheet_spec;
    SlabSpec slab_spec;
    ScanSpec scan_spec;
    std::string suite;

    auto* sh = app.add_subcommand("sheet", "free energy and entropy of a plasma sheet");
    sh->add_option("--Omega0", sheet_spec.Omega0, "plasma frequency Omega0 (X or min:max:steps[:log])")
        ->capture_default_str();
    sh->add_option("--omega0", sheet_spec.omega0, "resonance frequency omega0 (X or min:max:steps[:log])")
        ->capture_default_str();
    sh->add_option("--parts", sheet_spec.parts, "parts: TE, TM, sf")->delimiter(',')->capture_default_str();
    add_common(sh, sheet_c, true);

    auto* sl = app.add_subcommand("slab", "thickness-independent free energy and entropy of a plasma slab");
    sl->add_option("--omegap", slab_spec.omega_p, "plasma frequency (X or min:max:steps[:log])")->capture_default_str();
    sl->add_option("--L", slab_spec.L, "thickness (X or min:max:steps[:log])")->capture_default_str();
    sl->add_option("--parts", slab_spec.parts, "parts: s, L, exp, s_TE, s_TM, L_TE, L_TM")
        ->delimiter(',')
        ->capture_default_str();
    sl->add_option("--dispersion", slab_spec.dispersion, "also write the plasmon dispersion to this CSV");
    sl->add_option("--kmin", slab_spec.kmin, "dispersion k range")->capture_default_str();
    sl->add_option("--kmax", slab_spec.kmax, "dispersion k range")->capture_default_str();
    sl->add_option("--kpts", slab_spec.kpts, "dispersion points per decade")->capture_default_str();
    add_common(sl, slab_c, true);

    auto* sc = app.add_subcommand("scan", "ln T coefficient and minimum entropy of the sheet over omega0");
    sc->add_option("--Omega0", scan_spec.Omega0, "plasma frequency Omega0 (X or min:max:steps[:log])")
        ->capture_default_str();
    sc->add_option("--omega0", scan_spec.omega0, "omega0 range")->capture_default_str();
    add_common(sc, scan_c, true);

    auto* ve = app.add_subcommand("verify", "run a verification suite, JSON lines on the output");
    ve->add_option("suite", suite, "oracle, asymptotics, constants, thermo-identity or nernst")->required();
    add_common(ve, verify_c, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*sh)
            return cmd_sheet(sheet_spec, sheet_c, out);
        if (*sl)
            return cmd_slab(slab_spec, slab_c, out);
        if (*sc)
            return cmd_scan(scan_spec, scan_c, out, err);
        return cmd_verify(suite, verify_c, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\nRun with --help for more information.\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
}

} // namespace thermo::cli
