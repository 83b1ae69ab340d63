#pragma once

// Thermodynamics of a one-dimensional scattering problem: defining integrals for the free
// energy and entropy, high-temperature subtraction and heat kernel coefficients.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include <boost/math/special_functions/zeta.hpp>

#include "thermo/numkernel.hpp"

namespace thermo {

enum class Channel { TE, TM };

inline const char* to_string(Channel ch) { return ch == Channel::TE ? "TE" : "TM"; }

enum class Part { TE, TM, surface_plasmon, surface_TE, surface_TM, lifshitz_TE, lifshitz_TM, exp };

inline const char* to_string(Part p)
{
    switch (p) {
    case Part::TE: return "TE";
    case Part::TM: return "TM";
    case Part::surface_plasmon: return "sf";
    case Part::surface_TE: return "s_TE";
    case Part::surface_TM: return "s_TM";
    case Part::lifshitz_TE: return "L_TE";
    case Part::lifshitz_TM: return "L_TM";
    case Part::exp: return "exp";
    }
    return "?";
}

inline double zeta3() { return boost::math::zeta(3.0); }
inline double zeta5() { return boost::math::zeta(5.0); }

// A discontinuity of delta(p) at fixed k: delta(p+0) - delta(p-0) = jump.
struct PhaseJump {
    double p;
    double jump;
};

struct ScatteringChannel {
    std::function<double(double p, double k)> phase_shift;
    // left empty: central differences of phase_shift
    std::function<double(double p, double k)> phase_shift_deriv;
    // left empty: no surface mode
    std::function<double(double k)> surface_mode;
    double k_min_surface = 0;
    std::function<std::vector<PhaseJump>(double k)> phase_jumps;
    std::function<std::vector<double>(double k)> p_breakpoints;
    std::vector<double> k_breakpoints;
    // phase shift vanishes for p > p_max
    double p_max = std::numeric_limits<double>::infinity();
    // optional: ddelta/dp from the exact gap p_max - p, and features located by their gap
    std::function<double(double gap, double k)> phase_shift_deriv_gap;
    std::function<std::vector<double>(double k)> gap_breakpoints;
    // ddelta/dp may behave like |p - b|^{-1/2} at the p breakpoints b
    bool sqrt_edges = false;
    double scale = 1.0;
};

inline double phase_derivative(const ScatteringChannel& ch, double p, double k)
{
    if (ch.phase_shift_deriv)
        return ch.phase_shift_deriv(p, k);
    const double h = 1e-6 * std::max(p, ch.scale);
    auto d = [&](double x) { return ch.phase_shift(x, k); };
    if (p - h < 0)
        return (-3 * d(p) + 4 * d(p + h) - d(p + 2 * h)) / (2 * h);
    if (p + h > ch.p_max)
        return (3 * d(p) - 4 * d(p - h) + d(p - 2 * h)) / (2 * h);
    return (d(p + h) - d(p - h)) / (2 * h);
}

namespace detail {

// int k dk/2pi [ w(omega_sf) + int dp/pi w(omega) ddelta/dp + sum jumps ] for a mode weight w
template <class W>
QuadResult spectral_integral(const ScatteringChannel& ch, double T, const QuadSettings& s, W weight)
{
    QuadSettings inner_s = s;
    inner_s.rel_tol = s.rel_tol * 0.1;
    inner_s.abs_tol = s.abs_tol * 0.1;
    double inner_err = 0;

    auto inner = [&](double k) {
        auto integrand = [&](double p) {
            const double w = std::sqrt(k * k + p * p);
            if (w <= 0)
                return 0.0;
            return weight(w) * phase_derivative(ch, p, k) / std::numbers::pi;
        };
        std::vector<double> bps;
        if (ch.p_breakpoints)
            bps = ch.p_breakpoints(k);
        QuadResult r;
        if (std::isfinite(ch.p_max)) {
            // p = p_max - u^2 on the upper half smooths square-root behavior at the cutoff
            const double mid = ch.p_max / 2;
            std::vector<double> lb, ub;
            for (double b : bps) {
                if (b > 0 && b < mid)
                    lb.push_back(b);
                else if (b > mid && b < ch.p_max)
                    ub.push_back(std::sqrt(ch.p_max - b));
            }
            if (ch.gap_breakpoints)
                for (double g : ch.gap_breakpoints(k))
                    if (g > 0 && g < ch.p_max - mid)
                        ub.push_back(std::sqrt(g));
            r = integrate_finite(integrand, 0.0, mid, inner_s, lb);
            auto upper = [&](double u) {
                const double gap = u * u, p = ch.p_max - gap;
                if (!ch.phase_shift_deriv_gap)
                    return 2 * u * integrand(p);
                const double w = std::sqrt(k * k + p * p);
                return 2 * u * weight(w) * ch.phase_shift_deriv_gap(gap, k) / std::numbers::pi;
            };
            r += integrate_finite(upper, 0.0, std::sqrt(ch.p_max - mid), inner_s, ub);
        } else if (ch.sqrt_edges && !bps.empty()) {
            std::sort(bps.begin(), bps.end());
            double lo = 0;
            for (double b : bps) {
                if (!(b > lo))
                    continue;
                const double mid = 0.5 * (lo + b);
                if (lo > 0)
                    r += integrate_finite([&, lo](double u) { return 2 * u * integrand(lo + u * u); }, 0.0,
                                          std::sqrt(mid - lo), inner_s);
                else
                    r += integrate_finite(integrand, lo, mid, inner_s);
                r += integrate_finite([&, b](double u) { return 2 * u * integrand(b - u * u); }, 0.0,
                                      std::sqrt(b - mid), inner_s);
                lo = b;
            }
            r += integrate_finite([&, lo](double u) { return 2 * u * integrand(lo + u * u); }, 0.0, std::sqrt(lo),
                                  inner_s);
            r += integrate_semiinf(integrand, 2 * lo, inner_s, std::max(T, 1e-3 * ch.scale));
        } else {
            r = integrate_semiinf(integrand, 0.0, inner_s, std::max(T, 1e-3 * ch.scale), bps);
        }
        double v = r.value;
        if (ch.phase_jumps)
            for (const auto& j : ch.phase_jumps(k)) {
                const double w = std::sqrt(k * k + j.p * j.p);
                if (w > 0)
                    v += weight(w) * j.jump / std::numbers::pi;
            }
        if (ch.surface_mode && k >= ch.k_min_surface) {
            const double w = ch.surface_mode(k);
            if (w > 0)
                v += weight(w);
        }
        inner_err = std::max(inner_err, r.error_estimate / std::max(std::abs(r.value), 1e-300));
        return k * v / (2 * std::numbers::pi);
    };
    std::vector<double> kb = ch.k_breakpoints;
    if (ch.surface_mode)
        kb.push_back(ch.k_min_surface);
    QuadResult out = integrate_semiinf(inner, 0.0, s, T, kb);
    out.error_estimate += inner_err * std::abs(out.value);
    return out;
}

} // namespace detail

// Free energy per area from the phase shift, the oracle for all closed forms.
inline QuadResult free_energy_defining(const ScatteringChannel& ch, double T, const QuadSettings& s = {})
{
    if (!(T > 0))
        throw std::domain_error("free_energy_defining: T must be > 0");
    return detail::spectral_integral(ch, T, s, [T](double w) { return T * bose_log(w / T); });
}

inline QuadResult entropy_defining(const ScatteringChannel& ch, double T, const QuadSettings& s = {})
{
    if (!(T > 0))
        throw std::domain_error("entropy_defining: T must be > 0");
    return detail::spectral_integral(ch, T, s, [T](double w) { return thermal_weight(w / T); });
}

// High-temperature terms removed from a raw free energy. coeff_T5 only occurs for the
// sheet surface plasmon.
struct SubtractionSpec {
    double coeff_T3 = 0;
    double coeff_T2 = 0;
    double coeff_T5 = 0;
};

inline double subtract_free_energy(double F_raw, const SubtractionSpec& sp, double T)
{
    return F_raw - sp.coeff_T5 * std::pow(T, 5) - sp.coeff_T3 * T * T * T - sp.coeff_T2 * T * T;
}

inline double subtract_entropy(double S_raw, const SubtractionSpec& sp, double T)
{
    return S_raw + 5 * sp.coeff_T5 * std::pow(T, 4) + 3 * sp.coeff_T3 * T * T + 2 * sp.coeff_T2 * T;
}

struct PartValue {
    Part part;
    double F = 0; // subtracted
    double S = 0; // subtracted
    double F_raw = 0;
    double S_raw = 0;
    double error = 0;
};

struct ThermoPoint {
    double T = 0;
    double F_raw = 0, F_subtr = 0, S_raw = 0, S_subtr = 0;
    double max_error = 0;
    std::vector<PartValue> breakdown;

    static ThermoPoint assemble(double T, std::vector<PartValue> parts)
    {
        ThermoPoint pt;
        pt.T = T;
        for (const auto& p : parts) {
            pt.F_raw += p.F_raw;
            pt.F_subtr += p.F;
            pt.S_raw += p.S_raw;
            pt.S_subtr += p.S;
            pt.max_error = std::max(pt.max_error, p.error);
        }
        pt.breakdown = std::move(parts);
        return pt;
    }

    const PartValue* find(Part p) const
    {
        for (const auto& v : breakdown)
            if (v.part == p)
                return &v;
        return nullptr;
    }
};

using ThermoCurve = std::vector<ThermoPoint>;

struct HeatKernelCoeffs {
    double a_half = 0;
    double a_one = 0;
    double a_three_half = 0;
};

struct HeatKernelSet {
    HeatKernelCoeffs te;
    HeatKernelCoeffs tm;
    std::vector<double> fit_residuals;
};

// Coefficients of T^3, T^2 and T ln T in the high-temperature free energy.
struct Expansion {
    double coeff_T3 = 0;
    double coeff_T2 = 0;
    double coeff_TlnT = 0;
};

inline HeatKernelCoeffs heat_kernel_from_expansion(const Expansion& e)
{
    const double pi = std::numbers::pi;
    return {-4 * std::pow(pi, 1.5) * e.coeff_T3 / zeta3(), -24 * e.coeff_T2, -std::pow(4 * pi, 1.5) * e.coeff_TlnT};
}

inline Expansion expansion_from_heat_kernel(const HeatKernelCoeffs& a)
{
    const double pi = std::numbers::pi;
    return {-zeta3() * a.a_half / (4 * std::pow(pi, 1.5)), -a.a_one / 24, -a.a_three_half / std::pow(4 * pi, 1.5)};
}

inline SubtractionSpec subtraction_from_heat_kernel(const HeatKernelCoeffs& a)
{
    const Expansion e = expansion_from_heat_kernel(a);
    return {e.coeff_T3, e.coeff_T2, 0.0};
}

inline HeatKernelCoeffs heat_kernel_from_subtraction(const SubtractionSpec& sp, double coeff_TlnT = 0)
{
    return heat_kernel_from_expansion({sp.coeff_T3, sp.coeff_T2, coeff_TlnT});
}

struct HeatKernelFit {
    HeatKernelCoeffs coeffs;
    AsymptoticFit fit;
};

// Fit a raw free energy sampled at large T and map the coefficients through the heat
// kernel expansion. Extra basis functions (T^5, T, 1) are fitted but not mapped.
inline HeatKernelFit extract_heat_kernel(std::span<const Sample> raw_free_energy,
                                         std::vector<Basis> basis = {Basis::T3, Basis::T2, Basis::TlnT, Basis::T},
                                         double max_residual = 1e-6)
{
    HeatKernelFit out;
    out.fit = fit_asymptotic(raw_free_energy, std::move(basis));
    if (!(out.fit.residual_norm <= max_residual))
        throw std::domain_error("extract_heat_kernel: fit residual " + std::to_string(out.fit.residual_norm) +
                                " above threshold");
    out.coeffs = heat_kernel_from_expansion(
        {out.fit.coefficient(Basis::T3), out.fit.coefficient(Basis::T2), out.fit.coefficient(Basis::TlnT)});
    return out;
}

} // namespace thermo
