#pragma once

// Infinitely thin plasma sheet with a resonance frequency omega0.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "thermo/numkernel.hpp"
#include "thermo/spectral.hpp"

namespace thermo::sheet {

struct SheetParams {
    double Omega0 = 1.0;
    double omega0 = 0.0;

    void validate() const
    {
        if (!(Omega0 > 0) || !std::isfinite(Omega0) || !(omega0 >= 0) || !std::isfinite(omega0))
            throw std::invalid_argument("SheetParams: need finite Omega0 > 0 and omega0 >= 0");
    }
};

struct SheetBreakdown {
    double F_TE = 0, F_TM = 0, F_sf = 0;
    double S_TE = 0, S_TM = 0, S_sf = 0;
    double max_error = 0;

    double F_total() const { return F_TE + F_TM + F_sf; }
    double S_total() const { return S_TE + S_TM + S_sf; }
};

namespace detail {

// x - atan(x)
inline double x_minus_atan(double x)
{
    if (std::abs(x) < 0.1) {
        const double x2 = x * x;
        double term = x * x2, sum = 0;
        for (int n = 0; n < 12; ++n) {
            sum += (n % 2 == 0 ? 1.0 : -1.0) * term / (2 * n + 3);
            term *= x2;
        }
        return sum;
    }
    return x - std::atan(x);
}

// atan(x) - x + x^3/3
inline double atan_tail5(double x)
{
    if (std::abs(x) < 0.1) {
        const double x2 = x * x;
        double term = x2 * x2 * x, sum = 0;
        for (int n = 0; n < 12; ++n) {
            sum += (n % 2 == 0 ? 1.0 : -1.0) * term / (2 * n + 5);
            term *= x2;
        }
        return sum;
    }
    return std::atan(x) - x + x * x * x / 3;
}

// (1 - atan(y)/y)/y^2
inline double atan_ratio_series(double y)
{
    const double y2 = y * y;
    double term = 1, sum = 0;
    for (int n = 0; n < 14; ++n) {
        sum += (n % 2 == 0 ? 1.0 : -1.0) * term / (2 * n + 3);
        term *= y2;
    }
    return sum;
}

inline void check_off_resonance(double omega, const SheetParams& P)
{
    if (!(omega > 0))
        throw std::domain_error("sheet: omega must be > 0");
    if (omega * omega - P.omega0 * P.omega0 == 0)
        throw std::domain_error("sheet: evaluation at the resonance omega = omega0");
}

} // namespace detail

// Omega(omega) = Omega0 omega^2/(omega^2 - omega0^2)
inline double Omega_of_omega(double omega, const SheetParams& P)
{
    const double D = omega * omega - P.omega0 * P.omega0;
    if (D == 0)
        throw std::domain_error("Omega_of_omega: pole at omega = omega0");
    return P.Omega0 * omega * omega / D;
}

inline double phase_shift(Channel ch, double p, double k, const SheetParams& P)
{
    if (!(p > 0) || !(k >= 0))
        throw std::domain_error("sheet phase_shift: need p > 0, k >= 0");
    const double w2 = k * k + p * p;
    const double D = w2 - P.omega0 * P.omega0;
    if (D == 0)
        throw std::domain_error("sheet phase_shift: pole at omega = omega0");
    if (ch == Channel::TE)
        return -std::atan(P.Omega0 * w2 / (p * D));
    return -std::numbers::pi / 2 + std::atan(D / (P.Omega0 * p));
}

inline double phase_shift_deriv(Channel ch, double p, double k, const SheetParams& P)
{
    const double W = P.Omega0, w02 = P.omega0 * P.omega0;
    const double k2 = k * k, p2 = p * p;
    if (ch == Channel::TE) {
        const double w2 = k2 + p2;
        const double num = W * (k2 * k2 - k2 * w02 + 2 * k2 * p2 + w02 * p2 + p2 * p2);
        const double D = w2 - w02;
        const double den = W * W * w2 * w2 + p2 * D * D;
        if (den == 0)
            throw std::domain_error("sheet phase_shift_deriv: vanishing denominator");
        return num / den;
    }
    const double a = k2 - w02;
    const double den = a * a + (2 * a + W * W) * p2 + p2 * p2;
    if (den == 0)
        throw std::domain_error("sheet phase_shift_deriv: vanishing denominator");
    return W * (w02 + p2 - k2) / den;
}

inline double h_subtr(Channel ch, double omega, const SheetParams& P);

// Spectral density h = int_0^1 d eps ddelta/dp at p = eps omega, closed form.
// h_TE is continuous at omega0, h_TM jumps by -pi/omega0 there.
inline double h(Channel ch, double omega, const SheetParams& P)
{
    detail::check_off_resonance(omega, P);
    const double W = P.Omega0, w02 = P.omega0 * P.omega0;
    const double D = omega * omega - w02;
    const double A = W * omega;
    if (ch == Channel::TE) {
        const double y = D / A;
        if (std::abs(y) < 0.1)
            return std::atan(y) / omega + 2 * W * w02 / (A * A) * detail::atan_ratio_series(y);
        return std::atan(y) / omega + 2 * W * w02 / (D * D) * (1 - std::atan(y) / y);
    }
    if (D > 0 && A / D < 0.5)
        return h_subtr(ch, omega, P) - W / (3 * omega * omega);
    return (2 * omega * W - (2 * D + W * W) * std::atan(A / D)) / (omega * W * W);
}

// h minus its large-omega asymptote: h_TE - pi/(2 omega) + Omega0/omega^2, h_TM + Omega0/(3 omega^2).
inline double h_subtr(Channel ch, double omega, const SheetParams& P)
{
    detail::check_off_resonance(omega, P);
    const double W = P.Omega0, w02 = P.omega0 * P.omega0;
    const double w2 = omega * omega;
    const double D = w2 - w02;
    const double A = W * omega;
    if (ch == Channel::TE) {
        const double y = D / A;
        if (y > 2) {
            const double x = 1 / y;
            return detail::x_minus_atan(x) / omega - W * w02 / (w2 * D) +
                   2 * W * w02 / (D * D) * (1 - x * std::numbers::pi / 2 + x * std::atan(x));
        }
        return h(ch, omega, P) - std::numbers::pi / (2 * omega) + W / w2;
    }
    if (D > 0 && A / D < 0.5) {
        const double x = A / D;
        return W * (D * w02 * (w2 + w02) + W * W * w2 * w2) / (3 * w2 * D * D * D) -
               (2 * D + W * W) * detail::atan_tail5(x) / (omega * W * W);
    }
    return h(ch, omega, P) + W / (3 * w2);
}

// Oracle: the epsilon integral of the phase-shift derivative.
inline QuadResult h_defining(Channel ch, double omega, const SheetParams& P, const QuadSettings& s = {})
{
    detail::check_off_resonance(omega, P);
    auto f = [&](double eps) {
        const double p = eps * omega;
        const double k = std::sqrt(std::max(0.0, 1 - eps * eps)) * omega;
        return phase_shift_deriv(ch, p, k, P);
    };
    std::vector<double> bps;
    const double width = std::abs(omega * omega - P.omega0 * P.omega0) / (P.Omega0 * omega);
    for (double c : {width, 10 * width, 0.1 * width})
        if (c < 1)
            bps.push_back(c);
    return integrate_finite(f, 0.0, 1.0, s, bps);
}

// Lowest transverse momentum with a surface plasmon.
inline double k_min_surface(const SheetParams& P)
{
    const double W = P.Omega0, w0 = P.omega0;
    if (w0 * w0 <= W * W / 2)
        return w0 * w0 / W;
    return std::sqrt(w0 * w0 - W * W / 4);
}

inline double omega_sf(double k, const SheetParams& P)
{
    const double W = P.Omega0, w02 = P.omega0 * P.omega0;
    const double kmin = k_min_surface(P);
    if (!(k >= kmin * (1 - 1e-14)))
        throw std::domain_error("omega_sf: k below the surface-mode branch");
    const double r1 = std::max(0.0, k * k - w02 + W * W / 4);
    // W sqrt(r1) - W^2/2 rationalized, exact cancellation at small k
    const double r2 = w02 + W * (k * k - w02) / (std::sqrt(r1) + W / 2);
    if (r2 < -1e-14 * std::max(w02, W * W))
        throw std::domain_error("omega_sf: negative radicand");
    return std::sqrt(std::max(0.0, r2));
}

// |1 + Q_TM| at the plasmon, with Q_TM = -Omega eta/omega^2 and eta = sqrt(k^2 - omega_sf^2).
inline double surface_mode_residual(double k, const SheetParams& P)
{
    const double w = omega_sf(k, P);
    const double eta = std::sqrt(std::max(0.0, (k - w) * (k + w)));
    return std::abs(1 - Omega_of_omega(w, P) * eta / (w * w));
}

// Phase-shift description of one channel for the defining-integral oracle. The +i0 rule
// makes the phase drop by pi where omega crosses omega0 for k < omega0.
inline ScatteringChannel scattering_channel(Channel ch, const SheetParams& P)
{
    ScatteringChannel c;
    c.phase_shift = [ch, P](double p, double k) { return phase_shift(ch, p, k, P); };
    c.phase_shift_deriv = [ch, P](double p, double k) { return phase_shift_deriv(ch, p, k, P); };
    c.scale = std::max(P.Omega0, P.omega0);
    if (P.omega0 > 0) {
        const double w0 = P.omega0;
        c.phase_jumps = [w0](double k) {
            std::vector<PhaseJump> j;
            if (k < w0)
                j.push_back({std::sqrt(w0 * w0 - k * k), -std::numbers::pi});
            return j;
        };
        c.p_breakpoints = [w0](double k) {
            std::vector<double> b;
            if (k < w0)
                b.push_back(std::sqrt(w0 * w0 - k * k));
            return b;
        };
        c.k_breakpoints.push_back(w0);
    }
    if (ch == Channel::TM) {
        c.surface_mode = [P](double k) { return omega_sf(k, P); };
        c.k_min_surface = k_min_surface(P);
    }
    return c;
}

inline SubtractionSpec subtraction(Part part, const SheetParams& P)
{
    const double pi = std::numbers::pi;
    switch (part) {
    case Part::TE: return {-zeta3() / (4 * pi), P.Omega0 / 12, 0.0};
    case Part::TM: return {0.0, P.Omega0 / 36, 0.0};
    case Part::surface_plasmon: {
        const double a = 1 - 2 * P.omega0 * P.omega0 / (P.Omega0 * P.Omega0);
        return {-a * zeta3() / (2 * pi), 0.0, -6 * zeta5() / (pi * P.Omega0 * P.Omega0)};
    }
    default: throw std::invalid_argument("sheet subtraction: not a sheet part");
    }
}

// Point-mass contribution -(pi/2) delta(omega - omega0) of h, per channel.
inline double resonance_free_energy(double T, const SheetParams& P)
{
    if (P.omega0 == 0)
        return 0.0;
    return -P.omega0 * P.omega0 / (4 * std::numbers::pi) * T * bose_log(P.omega0 / T);
}

inline double resonance_entropy(double T, const SheetParams& P)
{
    if (P.omega0 == 0)
        return 0.0;
    return -P.omega0 * P.omega0 / (4 * std::numbers::pi) * thermal_weight(P.omega0 / T);
}

namespace detail {

template <class H, class W>
QuadResult omega_integral(H hfun, W weight, double T, const SheetParams& P, const QuadSettings& s)
{
    auto f = [&](double w) { return w * w * weight(w / T) * hfun(w); };
    std::vector<double> bps;
    if (P.omega0 > 0)
        bps.push_back(P.omega0);
    return integrate_semiinf(f, 0.0, s, T, bps);
}

} // namespace detail

// Subtracted free energy of one channel, resonance term included.
inline QuadResult free_energy_channel(Channel ch, double T, const SheetParams& P, const QuadSettings& s = {})
{
    P.validate();
    if (!(T > 0))
        throw std::domain_error("free_energy_channel: T must be > 0");
    auto r = detail::omega_integral([&](double w) { return h_subtr(ch, w, P); }, bose_log, T, P, s);
    r *= T / (2 * std::numbers::pi * std::numbers::pi);
    r.value += resonance_free_energy(T, P);
    return r;
}

inline QuadResult entropy_channel(Channel ch, double T, const SheetParams& P, const QuadSettings& s = {})
{
    P.validate();
    if (!(T > 0))
        throw std::domain_error("entropy_channel: T must be > 0");
    auto r = detail::omega_integral([&](double w) { return h_subtr(ch, w, P); }, thermal_weight, T, P, s);
    r *= 1 / (2 * std::numbers::pi * std::numbers::pi);
    r.value += resonance_entropy(T, P);
    return r;
}

// Unsubtracted channel free energy from the unsubtracted h.
inline QuadResult free_energy_channel_raw(Channel ch, double T, const SheetParams& P, const QuadSettings& s = {})
{
    P.validate();
    if (!(T > 0))
        throw std::domain_error("free_energy_channel_raw: T must be > 0");
    auto r = detail::omega_integral([&](double w) { return h(ch, w, P); }, bose_log, T, P, s);
    r *= T / (2 * std::numbers::pi * std::numbers::pi);
    r.value += resonance_free_energy(T, P);
    return r;
}

inline QuadResult entropy_channel_raw(Channel ch, double T, const SheetParams& P, const QuadSettings& s = {})
{
    P.validate();
    if (!(T > 0))
        throw std::domain_error("entropy_channel_raw: T must be > 0");
    auto r = detail::omega_integral([&](double w) { return h(ch, w, P); }, thermal_weight, T, P, s);
    r *= 1 / (2 * std::numbers::pi * std::numbers::pi);
    r.value += resonance_entropy(T, P);
    return r;
}

namespace detail {

// omega (1 - 2 omega0^2/Omega0^2 + 2 omega^2/Omega0^2), the Jacobian k dk/d omega on the plasmon branch
inline double plasmon_jacobian(double w, const SheetParams& P)
{
    const double W2 = P.Omega0 * P.Omega0;
    return w * (1 - 2 * P.omega0 * P.omega0 / W2 + 2 * w * w / W2);
}

inline double plasmon_cut(const SheetParams& P)
{
    const double r = P.omega0 * P.omega0 - P.Omega0 * P.Omega0 / 2;
    return r > 0 ? std::sqrt(r) : 0.0;
}

} // namespace detail

inline QuadResult plasmon_free_energy_subtr(double T, const SheetParams& P, const QuadSettings& s = {})
{
    P.validate();
    if (!(T > 0))
        throw std::domain_error("plasmon_free_energy_subtr: T must be > 0");
    const double cut = detail::plasmon_cut(P);
    if (cut == 0)
        return {};
    auto r = integrate_finite([&](double w) { return detail::plasmon_jacobian(w, P) * bose_log(w / T); }, 0.0, cut, s);
    r *= -T / (2 * std::numbers::pi);
    return r;
}

inline QuadResult plasmon_entropy_subtr(double T, const SheetParams& P, const QuadSettings& s = {})
{
    P.validate();
    if (!(T > 0))
        throw std::domain_error("plasmon_entropy_subtr: T must be > 0");
    const double cut = detail::plasmon_cut(P);
    if (cut == 0)
        return {};
    auto r = integrate_finite([&](double w) { return detail::plasmon_jacobian(w, P) * thermal_weight(w / T); }, 0.0,
                              cut, s);
    r *= -1 / (2 * std::numbers::pi);
    return r;
}

// Unsubtracted plasmon free energy, the frequency integral over the whole branch.
inline QuadResult plasmon_free_energy_raw(double T, const SheetParams& P, const QuadSettings& s = {})
{
    P.validate();
    auto r = integrate_semiinf([&](double w) { return detail::plasmon_jacobian(w, P) * bose_log(w / T); },
                               detail::plasmon_cut(P), s, T);
    r *= T / (2 * std::numbers::pi);
    return r;
}

inline QuadResult plasmon_entropy_raw(double T, const SheetParams& P, const QuadSettings& s = {})
{
    P.validate();
    auto r = integrate_semiinf([&](double w) { return detail::plasmon_jacobian(w, P) * thermal_weight(w / T); },
                               detail::plasmon_cut(P), s, T);
    r *= 1 / (2 * std::numbers::pi);
    return r;
}

// The same plasmon free energy as a momentum integral over omega_sf(k).
inline QuadResult plasmon_free_energy_k(double T, const SheetParams& P, const QuadSettings& s = {})
{
    P.validate();
    const double kmin = k_min_surface(P);
    auto r = integrate_semiinf([&](double k) { return k * T * bose_log(omega_sf(k, P) / T); }, kmin, s, T);
    r *= 1 / (2 * std::numbers::pi);
    return r;
}

inline SheetBreakdown total(double T, const SheetParams& P, const QuadSettings& s = {})
{
    SheetBreakdown b;
    const auto fte = free_energy_channel(Channel::TE, T, P, s);
    const auto ftm = free_energy_channel(Channel::TM, T, P, s);
    const auto fsf = plasmon_free_energy_subtr(T, P, s);
    const auto ste = entropy_channel(Channel::TE, T, P, s);
    const auto stm = entropy_channel(Channel::TM, T, P, s);
    const auto ssf = plasmon_entropy_subtr(T, P, s);
    b.F_TE = fte.value;
    b.F_TM = ftm.value;
    b.F_sf = fsf.value;
    b.S_TE = ste.value;
    b.S_TM = stm.value;
    b.S_sf = ssf.value;
    for (const auto* r : {&fte, &ftm, &fsf, &ste, &stm, &ssf})
        b.max_error = std::max(b.max_error, r->error_estimate);
    return b;
}

inline ThermoPoint thermo_point(double T, const SheetParams& P, const QuadSettings& s = {})
{
    const SheetBreakdown b = total(T, P, s);
    auto part = [&](Part p, double F, double S) {
        const SubtractionSpec sp = subtraction(p, P);
        PartValue v{p, F, S, 0, 0, b.max_error};
        v.F_raw = F + sp.coeff_T5 * std::pow(T, 5) + sp.coeff_T3 * T * T * T + sp.coeff_T2 * T * T;
        v.S_raw = S - 5 * sp.coeff_T5 * std::pow(T, 4) - 3 * sp.coeff_T3 * T * T - 2 * sp.coeff_T2 * T;
        return v;
    };
    return ThermoPoint::assemble(T, {part(Part::TE, b.F_TE, b.S_TE), part(Part::TM, b.F_TM, b.S_TM),
                                     part(Part::surface_plasmon, b.F_sf, b.S_sf)});
}

inline PartValue part_value(Part part, double T, const SheetParams& P, const QuadSettings& s = {})
{
    QuadResult F, S;
    switch (part) {
    case Part::TE: F = free_energy_channel(Channel::TE, T, P, s); S = entropy_channel(Channel::TE, T, P, s); break;
    case Part::TM: F = free_energy_channel(Channel::TM, T, P, s); S = entropy_channel(Channel::TM, T, P, s); break;
    case Part::surface_plasmon: F = plasmon_free_energy_subtr(T, P, s); S = plasmon_entropy_subtr(T, P, s); break;
    default: throw std::invalid_argument("sheet part_value: not a sheet part");
    }
    const SubtractionSpec sp = subtraction(part, P);
    PartValue v{part, F.value, S.value, 0, 0, std::max(F.error_estimate, S.error_estimate)};
    v.F_raw = F.value + sp.coeff_T5 * std::pow(T, 5) + sp.coeff_T3 * T * T * T + sp.coeff_T2 * T * T;
    v.S_raw = S.value - 5 * sp.coeff_T5 * std::pow(T, 4) - 3 * sp.coeff_T3 * T * T - 2 * sp.coeff_T2 * T;
    return v;
}

// int_0^inf omega^2 h_subtr d omega including the resonance point mass.
inline QuadResult spectral_moment(Channel ch, const SheetParams& P, const QuadSettings& s = {})
{
    P.validate();
    auto f = [&](double w) { return w * w * h_subtr(ch, w, P); };
    std::vector<double> bps;
    if (P.omega0 > 0)
        bps.push_back(P.omega0);
    auto r = integrate_semiinf(f, 0.0, s, std::max(P.Omega0, P.omega0), bps);
    r.value -= std::numbers::pi / 2 * P.omega0 * P.omega0;
    return r;
}

// Coefficient of ln T in the total subtracted entropy at high temperature.
inline double high_T_log_coefficient(const SheetParams& P, const QuadSettings& s = {})
{
    const double pi = std::numbers::pi;
    const double m = spectral_moment(Channel::TE, P, s).value + spectral_moment(Channel::TM, P, s).value;
    const double r = P.omega0 * P.omega0 - P.Omega0 * P.Omega0 / 2;
    const double sf = r > 0 ? r * r / (4 * pi * P.Omega0 * P.Omega0) : 0.0;
    return m / (2 * pi * pi) + sf;
}

inline HeatKernelSet heat_kernel_coeffs(const SheetParams& P, const QuadSettings& s = {})
{
    const double sqpi = std::sqrt(std::numbers::pi);
    const double r = P.omega0 * P.omega0 - P.Omega0 * P.Omega0 / 2;
    HeatKernelSet hk;
    hk.te.a_half = sqpi;
    hk.te.a_one = -2 * P.Omega0;
    hk.te.a_three_half = 4 / sqpi * spectral_moment(Channel::TE, P, s).value;
    hk.tm.a_half = 2 * sqpi * (1 - 2 * P.omega0 * P.omega0 / (P.Omega0 * P.Omega0));
    hk.tm.a_one = -2 * P.Omega0 / 3;
    hk.tm.a_three_half =
        4 / sqpi * spectral_moment(Channel::TM, P, s).value + (r > 0 ? 2 * sqpi * r * r / (P.Omega0 * P.Omega0) : 0.0);
    return hk;
}

struct ScanRow {
    double omega0 = 0;
    double c = 0;       // ln T coefficient of the total entropy
    double min_S = 0;   // minimum of S_total over the T grid
    double T_at_min = 0;
    double max_error = 0;
};

inline ScanRow scan_point(const SheetParams& P, const std::vector<double>& T_grid, const QuadSettings& s = {})
{
    ScanRow row;
    row.omega0 = P.omega0;
    row.c = high_T_log_coefficient(P, s);
    row.min_S = std::numeric_limits<double>::infinity();
    for (double T : T_grid) {
        const auto b = total(T, P, s);
        row.max_error = std::max(row.max_error, b.max_error);
        if (b.S_total() < row.min_S) {
            row.min_S = b.S_total();
            row.T_at_min = T;
        }
    }
    return row;
}

} // namespace thermo::sheet
