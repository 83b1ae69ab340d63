#pragma once

// Dielectric slab of thickness L with plasma-model permittivity eps = 1 - omega_p^2/omega^2.

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "thermo/numkernel.hpp"
#include "thermo/spectral.hpp"

namespace thermo::slab {

struct SlabParams {
    double omega_p = 1.0;
    double L = 1.0;

    void validate() const
    {
        if (!(omega_p > 0) || !std::isfinite(omega_p) || !(L > 0) || !std::isfinite(L))
            throw std::invalid_argument("SlabParams: need finite omega_p > 0 and L > 0");
    }
};

struct SlabBreakdown {
    double F_s_TE = 0, F_s_TM = 0, F_L_TE = 0, F_L_TM = 0, F_exp = 0;
    double S_s_TE = 0, S_s_TM = 0, S_L_TE = 0, S_L_TM = 0, S_exp = 0;
    double max_error = 0;

    double F_total() const { return F_s_TE + F_s_TM + F_L_TE + F_L_TM + F_exp; }
    double S_total() const { return S_s_TE + S_s_TM + S_L_TE + S_L_TM + S_exp; }
};

inline double epsilon(double omega, const SlabParams& P)
{
    if (omega == 0)
        throw std::domain_error("slab epsilon: omega = 0");
    return 1 - P.omega_p * P.omega_p / (omega * omega);
}

struct Transmission {
    std::complex<double> t;
    std::complex<double> t_s;   // surfaces
    std::complex<double> t_L;   // thickness dependent
    std::complex<double> t_exp; // e^{i(q-p)L}
};

inline Transmission transmission(Channel ch, double p, double k, const SlabParams& P)
{
    using cd = std::complex<double>;
    if (!(p > 0) || !(k >= 0))
        throw std::domain_error("slab transmission: need p > 0, k >= 0");
    const double wp2 = P.omega_p * P.omega_p;
    const double e = ch == Channel::TE ? 1.0 : epsilon(std::sqrt(k * k + p * p), P);
    const cd q = p < P.omega_p ? cd(0, std::sqrt(wp2 - p * p)) : cd(std::sqrt(p * p - wp2), 0);
    const cd I(0, 1);
    const cd ep = e * p;
    const cd plus = ep + q, minus = ep - q;
    const cd den = plus * plus * std::exp(-I * q * P.L) - minus * minus * std::exp(I * q * P.L);
    if (std::abs(den) == 0 || std::abs(plus) == 0)
        throw std::domain_error("slab transmission: vanishing denominator");
    Transmission t;
    t.t = 4.0 * ep * q * std::exp(-I * p * P.L) / den;
    t.t_s = 4.0 * ep * q / (plus * plus);
    const cd r = minus / plus;
    t.t_L = 1.0 / (1.0 - r * r * std::exp(2.0 * I * q * P.L));
    t.t_exp = std::exp(I * (q - p) * P.L);
    return t;
}

// Surface phase shifts, zero above omega_p.
inline double delta_s(Channel ch, double p, double omega, const SlabParams& P)
{
    if (!(p >= 0))
        throw std::domain_error("delta_s: p must be >= 0");
    const double wp = P.omega_p;
    if (p > wp)
        return 0.0;
    const double gamma = std::sqrt(wp * wp - p * p);
    if (ch == Channel::TE) {
        if (p == 0)
            return -std::numbers::pi / 2;
        return std::numbers::pi / 2 - 2 * std::atan(gamma / p);
    }
    const double e = epsilon(omega, P);
    if (gamma == 0) {
        if (e == 0)
            return -std::numbers::pi / 2;
        return -std::numbers::pi / 2 + (e > 0 ? std::numbers::pi : -std::numbers::pi);
    }
    return -std::numbers::pi / 2 + 2 * std::atan(e * p / gamma);
}

namespace detail {

// (atanh(a s) - atanh(b s))/s for u = s^2 >= 0 and (atan(a t) - atan(b t))/t for u = -t^2 < 0.
inline double odd_difference_series(double a, double b, double u)
{
    double sum = 0, an = a, bn = b, un = 1;
    for (int n = 0; n < 40; ++n) {
        const double term = (an - bn) * un / (2 * n + 1);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum))
            break;
        an *= a * a;
        bn *= b * b;
        un *= u;
    }
    return sum;
}

// atanh(x) given 1 - x computed without cancellation
inline double atanh_from_gap(double x, double gap) { return 0.5 * (std::log1p(x) - std::log(gap)); }

} // namespace detail

// h(omega) = int_0^{min(omega, omega_p)} delta_s_TM(p, omega) dp, closed form.
inline double h_surface(double omega, const SlabParams& P)
{
    if (!(omega > 0))
        throw std::domain_error("h_surface: omega must be > 0");
    const double wp = P.omega_p, pi = std::numbers::pi;
    const double w2 = omega * omega, wp2 = wp * wp;
    if (omega == wp)
        return -pi * wp / 2;
    if (omega > wp) {
        const double sigma = std::sqrt(2 * w2 - wp2);
        return pi * wp / 2 + 2 * w2 / sigma * std::atan(wp * sigma / (wp2 - w2));
    }
    const double r2 = wp2 - w2, r = std::sqrt(r2);
    const double u = wp2 - 2 * w2;
    const double a = wp / r2, b = 1 / r;
    double Q;
    if (std::abs(u) * a * a < 0.01) {
        Q = detail::odd_difference_series(a, b, u);
    } else if (u > 0) {
        const double s = std::sqrt(u);
        const double gap_a = w2 * w2 / (r2 * (r2 + wp * s)); // 1 - a s
        const double gap_b = w2 / (r * (r + s));             // 1 - b s
        Q = (detail::atanh_from_gap(a * s, gap_a) - detail::atanh_from_gap(b * s, gap_b)) / s;
    } else {
        const double t = std::sqrt(-u);
        Q = (std::atan(a * t) - std::atan(b * t)) / t;
    }
    return -pi * omega / 2 - 2 * omega * std::atan(r / omega) + 2 * w2 * Q;
}

// omega -> infinity limit of h_surface
inline double h_surface_inf(const SlabParams& P) { return (std::numbers::pi - 4) / 2 * P.omega_p; }

inline double h_surface_minus_inf(double omega, const SlabParams& P)
{
    const double wp = P.omega_p;
    if (omega > 4 * wp) {
        const double w2 = omega * omega, wp2 = wp * wp;
        const double sigma = std::sqrt(2 * w2 - wp2);
        const double x = wp * sigma / (wp2 - w2);
        // atan(x) - x = -(x - atan x)
        const double xa = std::abs(x) < 0.1 ? [&] {
            const double x2 = x * x;
            double term = x * x2, sum = 0;
            for (int n = 0; n < 12; ++n) {
                sum += (n % 2 == 0 ? 1.0 : -1.0) * term / (2 * n + 3);
                term *= x2;
            }
            return sum;
        }()
                                            : x - std::atan(x);
        return -2 * wp2 * wp / (w2 - wp2) - 2 * w2 / sigma * xa;
    }
    return h_surface(omega, P) - h_surface_inf(P);
}

// Oracle: the p integral defining h_surface.
inline QuadResult h_surface_defining(double omega, const SlabParams& P, const QuadSettings& s = {})
{
    const double top = std::min(omega, P.omega_p);
    return integrate_finite([&](double p) { return delta_s(Channel::TM, p, omega, P); }, 0.0, top, s);
}

// H(omega) = int_0^{min(omega, omega_p)} p delta_s_TM(p, omega) dp, the spectral function that
// the surface TM free energy actually needs (integration by parts of the defining integral).
inline double h_surface_moment(double omega, const SlabParams& P)
{
    if (!(omega > 0))
        throw std::domain_error("h_surface_moment: omega must be > 0");
    const double wp = P.omega_p, wp2 = wp * wp, w2 = omega * omega, pi = std::numbers::pi;
    if (omega >= wp)
        return -pi / 4 * wp2 * wp2 / (2 * w2 - wp2);
    if (omega < 2e-3 * wp) {
        // the closed form cancels like (omega_p/omega)^2 here
        const double pf = w2 / wp;
        const double bps[] = {0.1 * pf, pf, 10 * pf};
        return integrate_finite([&](double p) { return p * delta_s(Channel::TM, p, omega, P); }, 0.0, omega,
                                QuadSettings{}.with_tol(1e-13, 1e-300), bps)
            .value;
    }
    const double e = 1 - wp2 / w2;
    const double g2 = (wp - omega) * (wp + omega), g = std::sqrt(g2);
    const double u = std::abs(e), t = omega / g;
    // (u atan(u t) - atan t)/(u^2 - 1) without the removable singularity at u = 1
    const double x = (u - 1) * t / (1 + u * t * t);
    const double atanc = std::abs(x) < 1e-4 ? 1 - x * x / 3 + x * x * x * x / 5 : std::atan(x) / x;
    const double Fq = (u * t / (1 + u * t * t) * atanc + std::atan(t)) / (u + 1);
    return -pi * w2 / 4 - g2 * std::atan(e * omega / g) + e * wp2 * Fq;
}

inline QuadResult h_surface_moment_defining(double omega, const SlabParams& P, const QuadSettings& s = {})
{
    const double top = std::min(omega, P.omega_p);
    std::vector<double> bps;
    const double pf = omega * omega / P.omega_p;
    for (double f : {0.1, 1.0, 10.0})
        if (f * pf < top)
            bps.push_back(f * pf);
    return integrate_finite([&](double p) { return p * delta_s(Channel::TM, p, omega, P); }, 0.0, top, s, bps);
}

// c = int_0^inf (h_inf - h) d omega / omega_p^2, about pi/2.
inline QuadResult slab_constant_c(const SlabParams& P = {}, const QuadSettings& s = {})
{
    const double wp = P.omega_p;
    const double X = 1e4 * wp;
    const double bps[] = {wp / std::sqrt(2.0), wp, 4 * wp, 16 * wp, 64 * wp, 256 * wp, 1024 * wp};
    auto r = integrate_finite([&](double w) { return -h_surface_minus_inf(w, P); }, 0.0, X, s, bps);
    // tail from h - h_inf = -2 omega_p^3/(3 omega^2) + O(omega^-4)
    r.value += 2 * wp * wp * wp / (3 * X);
    r.error_estimate += wp * wp * wp * wp * wp / (X * X * X);
    r *= 1 / (wp * wp);
    return r;
}

// Lifshitz phase shift; delta_L_TE does not depend on omega.
inline double delta_L(Channel ch, double p, double omega, const SlabParams& P)
{
    using cd = std::complex<double>;
    if (!(p > 0))
        throw std::domain_error("delta_L: p must be > 0");
    const double wp = P.omega_p;
    const double e = ch == Channel::TE ? 1.0 : epsilon(omega, P);
    if (p < wp) {
        const double gamma = std::sqrt(wp * wp - p * p);
        const cd z = cd(e * p, gamma) / cd(e * p, -gamma);
        return std::arg(1.0 - z * z * std::exp(-2 * gamma * P.L));
    }
    const double q = std::sqrt(p * p - wp * wp);
    const double r = (e * p - q) / (e * p + q);
    return std::arg(1.0 - r * r * std::exp(cd(0, -2 * q * P.L)));
}

// |delta_L| bound for p >= 2 omega_p at any omega >= p, used for oscillatory tails
inline double delta_L_envelope(double p, const SlabParams& P)
{
    const double q = std::sqrt(p * p - P.omega_p * P.omega_p);
    const double rte = (p - q) / (p + q);
    const double e = epsilon(p, P);
    const double rtm = (e * p - q) / (e * p + q);
    const double r2 = std::max(rte * rte, rtm * rtm);
    return 1.25 * r2;
}

namespace detail {

// int_a^inf f for f oscillating like sin(2 q L) beyond cut_lo under a decreasing envelope env(p);
// the tail beyond the cut is bounded by 2 env/L (integration by parts).
template <class F, class E>
QuadResult oscillatory_semiinf(F& f, E& env, double a, double cut_lo, const SlabParams& P, const QuadSettings& s,
                               std::vector<double> bps)
{
    QuadSettings big = s;
    big.max_subdivisions = std::max(s.max_subdivisions, 20000);
    double X = std::max(cut_lo, a + 4 * std::numbers::pi / P.L);
    bps.push_back(P.omega_p);
    QuadResult r = integrate_finite(f, a, X, big, bps);
    for (int i = 0; i < 60; ++i) {
        const double tail = 2 * env(X) / P.L;
        const double tol = std::max(s.abs_tol, s.rel_tol * std::abs(r.value));
        if (tail <= 0.25 * tol) {
            r.error_estimate += tail;
            return r;
        }
        QuadSettings ext = big;
        ext.abs_tol = std::max(s.abs_tol, 0.1 * s.rel_tol * std::abs(r.value));
        r += integrate_finite(f, X, 2 * X, ext, bps);
        X *= 2;
    }
    throw QuadError(QuadError::Kind::tail_bound, "slab: oscillatory tail did not decay");
}

inline double pi2() { return std::numbers::pi * std::numbers::pi; }

} // namespace detail

// h_L(omega) = int_0^omega p delta_L_TM(p, omega) dp
inline QuadResult h_L(double omega, const SlabParams& P, const QuadSettings& s = {})
{
    QuadSettings big = s;
    big.max_subdivisions = std::max(s.max_subdivisions, 20000);
    const double bps[] = {P.omega_p};
    return integrate_finite([&](double p) { return p * delta_L(Channel::TM, p, omega, P); }, 0.0, omega, big, bps);
}

// Lifshitz TE free energy (T/2 pi^2) int omega ln(1 - e^{-omega/T}) delta_L_TE(omega).
inline QuadResult F_L_TE(double T, const SlabParams& P, const QuadSettings& s = {})
{
    P.validate();
    auto f = [&](double w) { return w * bose_log(w / T) * delta_L(Channel::TE, w, w, P); };
    auto env = [&](double w) { return w * std::abs(bose_log(w / T)) * delta_L_envelope(w, P); };
    auto r = detail::oscillatory_semiinf(f, env, 0.0, std::max(2 * P.omega_p, 40 * T), P, s, {});
    r *= T / (2 * detail::pi2());
    return r;
}

inline QuadResult S_L_TE(double T, const SlabParams& P, const QuadSettings& s = {})
{
    P.validate();
    auto f = [&](double w) { return w * thermal_weight(w / T) * delta_L(Channel::TE, w, w, P); };
    auto env = [&](double w) { return w * thermal_weight(w / T) * delta_L_envelope(w, P); };
    auto r = detail::oscillatory_semiinf(f, env, 0.0, std::max(2 * P.omega_p, 40 * T), P, s, {});
    r *= 1 / (2 * detail::pi2());
    return r;
}

namespace detail {

// int_0^inf dp p int_p^inf d omega weight(omega) delta_L_TM(p, omega); weight decays on scale T
// and is bounded by wbound(p) = int_p^inf |weight|.
template <class W, class B>
QuadResult lifshitz_tm_double(W weight, B wbound, double T, const SlabParams& P, const QuadSettings& s)
{
    QuadSettings inner_s = s;
    inner_s.rel_tol = s.rel_tol * 0.1;
    double inner_rel = 0;
    auto g = [&](double p) {
        std::vector<double> bps;
        if (p < P.omega_p)
            bps.push_back(P.omega_p);
        auto r = integrate_semiinf([&](double w) { return weight(w) * delta_L(Channel::TM, p, w, P); }, p, inner_s,
                                   std::max(T, 1e-3 * P.omega_p), bps);
        inner_rel = std::max(inner_rel, r.error_estimate / std::max(std::abs(r.value), 1e-300));
        return p * r.value;
    };
    auto env = [&](double p) { return p * wbound(p) * delta_L_envelope(p, P); };
    auto r = oscillatory_semiinf(g, env, 0.0, std::max(2 * P.omega_p, 40 * T), P, s, {});
    r.error_estimate += inner_rel * std::abs(r.value);
    return r;
}

} // namespace detail

// Lifshitz TM free energy -(1/2 pi^2) int d omega h_L(omega)/(e^{omega/T} - 1), integrated
// in the order p outer, omega inner.
inline QuadResult F_L_TM(double T, const SlabParams& P, const QuadSettings& s = {})
{
    P.validate();
    auto r = detail::lifshitz_tm_double([T](double w) { return bose_factor(w / T); },
                                        [T](double p) { return -T * bose_log(p / T); }, T, P, s);
    r *= -1 / (2 * detail::pi2());
    return r;
}

inline QuadResult S_L_TM(double T, const SlabParams& P, const QuadSettings& s = {})
{
    P.validate();
    // int_p^inf omega n'(omega/T) d omega <= T^2 (x + 1) n(x) e^x... use a simple bound
    auto bound = [T](double p) {
        const double x = p / T;
        return T * T * (x * bose_factor(x) - bose_log(x)) * 2;
    };
    auto r = detail::lifshitz_tm_double([T](double w) { return w * bose_factor_deriv(w / T); }, bound, T, P, s);
    r *= 1 / (2 * detail::pi2() * T * T);
    return r;
}

inline QuadResult S_L(Channel ch, double T, const SlabParams& P, const QuadSettings& s = {})
{
    return ch == Channel::TE ? S_L_TE(T, P, s) : S_L_TM(T, P, s);
}

// d from the TE route: (1/2 pi^2 omega_p^2) int omega ln(omega/omega_p) delta_L_TE.
inline QuadResult slab_constant_d_te(const SlabParams& P = {}, const QuadSettings& s = {})
{
    P.validate();
    const double wp = P.omega_p;
    auto f = [&](double w) { return w * std::log(w / wp) * delta_L(Channel::TE, w, w, P); };
    auto env = [&](double w) { return w * std::abs(std::log(w / wp)) * delta_L_envelope(w, P); };
    auto r = detail::oscillatory_semiinf(f, env, 0.0, 4 * wp, P, s, {});
    r *= 1 / (2 * detail::pi2() * wp * wp);
    return r;
}

// int omega delta_L_TE d omega, the coefficient of a T ln T term in F_L_TE (found to vanish).
inline QuadResult lifshitz_te_log_moment(const SlabParams& P = {}, const QuadSettings& s = {})
{
    P.validate();
    auto f = [&](double w) { return w * delta_L(Channel::TE, w, w, P); };
    auto env = [&](double w) { return w * delta_L_envelope(w, P); };
    return detail::oscillatory_semiinf(f, env, 0.0, 4 * P.omega_p, P, s, {});
}

// d from the TM route: -(1/2 pi^2 omega_p^2) int h_L(omega)/omega.
inline QuadResult slab_constant_d_tm(const SlabParams& P = {}, const QuadSettings& s = {})
{
    P.validate();
    const double wp = P.omega_p;
    const double X = 200 * wp;
    QuadSettings inner = s;
    inner.rel_tol = s.rel_tol * 0.1;
    QuadSettings outer = s;
    outer.max_subdivisions = std::max(s.max_subdivisions, 20000);
    const double bps[] = {wp, 2 * wp, 4 * wp, 8 * wp, 16 * wp, 32 * wp, 64 * wp, 128 * wp};
    auto r = integrate_finite([&](double w) { return h_L(w, P, inner).value / w; }, 0.0, X, outer, bps);
    // h_L ~ K/omega^2 at large omega
    const double K = h_L(X, P, inner).value * X * X;
    r.value += K / (2 * X * X);
    r.error_estimate += std::abs(K) / (2 * X * X);
    r *= -1 / (2 * detail::pi2() * wp * wp);
    return r;
}

// Surface TE part.
inline QuadResult F_s_TE(double T, const SlabParams& P, const QuadSettings& s = {}, bool subtracted = true)
{
    P.validate();
    const double wp = P.omega_p;
    auto r = integrate_finite(
        [&](double w) { return w * bose_log(w / T) * std::atan(std::sqrt(wp * wp - w * w) / w); }, 0.0, wp, s);
    r *= -T / detail::pi2();
    if (!subtracted)
        r.value += -zeta3() * T * T * T / (2 * std::numbers::pi);
    return r;
}

inline QuadResult S_s_TE(double T, const SlabParams& P, const QuadSettings& s = {}, bool subtracted = true)
{
    P.validate();
    const double wp = P.omega_p;
    auto r = integrate_finite(
        [&](double w) { return w * thermal_weight(w / T) * std::atan(std::sqrt(wp * wp - w * w) / w); }, 0.0, wp, s);
    r *= -1 / detail::pi2();
    if (!subtracted)
        r.value += 3 * zeta3() * T * T / (2 * std::numbers::pi);
    return r;
}

// Surface TM part F = A + B, B = -(1/2 pi^2) int d omega H(omega)/(e^{omega/T} - 1).
inline QuadResult F_s_TM(double T, const SlabParams& P, const QuadSettings& s = {}, bool subtracted = true)
{
    P.validate();
    const double wp = P.omega_p, pi = std::numbers::pi;
    auto A = integrate_finite([&](double w) { return w * bose_log(w / T); }, 0.0, wp, s);
    A *= -T / (4 * pi);
    const double bps[] = {wp / std::sqrt(2.0), wp};
    auto B = integrate_semiinf([&](double w) { return h_surface_moment(w, P) * bose_factor(w / T); }, 0.0, s, T, bps);
    B *= -1 / (2 * detail::pi2());
    auto r = A + B;
    if (!subtracted)
        r.value += -zeta3() * T * T * T / (2 * pi);
    return r;
}

inline QuadResult S_s_TM(double T, const SlabParams& P, const QuadSettings& s = {}, bool subtracted = true)
{
    P.validate();
    const double wp = P.omega_p, pi = std::numbers::pi;
    auto A = integrate_finite([&](double w) { return w * thermal_weight(w / T); }, 0.0, wp, s);
    A *= -1 / (4 * pi);
    const double bps[] = {wp / std::sqrt(2.0), wp};
    auto B = integrate_semiinf(
        [&](double w) { return w * h_surface_moment(w, P) * bose_factor_deriv(w / T); }, 0.0, s, T, bps);
    B *= 1 / (2 * detail::pi2() * T * T);
    auto r = A + B;
    if (!subtracted)
        r.value += 3 * zeta3() * T * T / (2 * pi);
    return r;
}

// -(1/2 pi^2 omega_p^2) int H(omega)/omega, the T coefficient B contributes at high temperature.
inline QuadResult surface_tm_linear_coefficient(const SlabParams& P = {}, const QuadSettings& s = {})
{
    P.validate();
    const double wp = P.omega_p;
    const double bps[] = {wp / std::sqrt(2.0), wp};
    auto r = integrate_semiinf([&](double w) { return h_surface_moment(w, P) / w; }, 0.0, s, wp, bps);
    r *= -1 / (2 * detail::pi2() * wp * wp);
    return r;
}

// Thickness-proportional part in the closed form pi^2 L T^4/90 + (L T/2 pi^2) int omega sqrt(omega^2 - omega_p^2) ln(...).
inline QuadResult F_exp_closed(double T, const SlabParams& P, const QuadSettings& s = {})
{
    P.validate();
    const double wp = P.omega_p;
    auto r = integrate_semiinf([&](double w) { return w * std::sqrt(w * w - wp * wp) * bose_log(w / T); }, wp, s, T);
    r *= P.L * T / (2 * detail::pi2());
    r.value += detail::pi2() * P.L * std::pow(T, 4) / 90;
    return r;
}

namespace detail {

// (L/2 pi^2) int K(omega) w(omega/T) with the T^4 and T^2 pieces of K = omega sqrt(omega^2 - omega_p^2) theta(omega - omega_p)
// removed analytically.
template <class W>
QuadResult exp_kernel_integral(W weight, double T, const SlabParams& P, const QuadSettings& s)
{
    const double wp = P.omega_p, wp2 = wp * wp;
    auto low = integrate_finite([&](double w) { return (wp2 / 2 - w * w) * weight(w / T); }, 0.0, wp, s);
    auto high = integrate_semiinf(
        [&](double w) {
            const double d = std::sqrt(w * w - wp2) + w;
            return -wp2 * wp2 / (2 * d * d) * weight(w / T);
        },
        wp, s, std::max(T, wp));
    auto r = low + high;
    r *= P.L / (2 * pi2());
    return r;
}

} // namespace detail

inline QuadResult F_exp(double T, const SlabParams& P, const QuadSettings& s = {}, bool subtracted = true)
{
    P.validate();
    auto r = detail::exp_kernel_integral([](double x) { return bose_log(x); }, T, P, s);
    r *= T;
    if (!subtracted)
        r.value += P.omega_p * P.omega_p * P.L / 24 * T * T;
    return r;
}

inline QuadResult S_exp(double T, const SlabParams& P, const QuadSettings& s = {}, bool subtracted = true)
{
    P.validate();
    auto r = detail::exp_kernel_integral([](double x) { return thermal_weight(x); }, T, P, s);
    if (!subtracted)
        r.value -= P.omega_p * P.omega_p * P.L / 12 * T;
    return r;
}

inline SubtractionSpec subtraction(Part part, const SlabParams& P)
{
    const double pi = std::numbers::pi;
    switch (part) {
    case Part::surface_TE: return {-zeta3() / (2 * pi), 0.0, 0.0};
    case Part::surface_TM: return {-zeta3() / (2 * pi), 0.0, 0.0};
    case Part::lifshitz_TE:
    case Part::lifshitz_TM: return {};
    case Part::exp: return {0.0, P.omega_p * P.omega_p * P.L / 24, 0.0};
    default: throw std::invalid_argument("slab subtraction: not a slab part");
    }
}

// Phase-shift descriptions for the defining-integral oracle.
inline ScatteringChannel surface_channel(Channel ch, const SlabParams& P)
{
    ScatteringChannel c;
    c.p_max = P.omega_p;
    c.scale = P.omega_p;
    if (ch == Channel::TE) {
        c.phase_shift = [P](double p, double) { return delta_s(Channel::TE, p, p, P); };
        c.phase_shift_deriv = [P](double p, double) { return 2 / std::sqrt((P.omega_p - p) * (P.omega_p + p)); };
        c.phase_shift_deriv_gap = [P](double gap, double) {
            const double g2 = gap * (2 * P.omega_p - gap);
            return g2 > 0 ? 2 / std::sqrt(g2) : 0.0;
        };
    } else {
        c.phase_shift = [P](double p, double k) { return delta_s(Channel::TM, p, std::sqrt(k * k + p * p), P); };
        // in terms of gamma^2 = omega_p^2 - p^2
        auto deriv = [P](double p, double g2, double k) {
            const double wp2 = P.omega_p * P.omega_p, w2 = k * k + p * p;
            const double e = (k * k - g2) / w2, de = 2 * wp2 * p / (w2 * w2);
            const double den = std::sqrt(g2) * (g2 + e * e * p * p);
            return den > 0 ? 2 * (de * p * g2 + e * wp2) / den : 0.0;
        };
        c.phase_shift_deriv = [P, deriv](double p, double k) {
            return deriv(p, (P.omega_p - p) * (P.omega_p + p), k);
        };
        c.phase_shift_deriv_gap = [P, deriv](double gap, double k) {
            return deriv(P.omega_p - gap, gap * (2 * P.omega_p - gap), k);
        };
        // the phase drops by pi over p ~ k^2/omega_p
        c.p_breakpoints = [P](double k) {
            std::vector<double> b;
            for (double f : {1.0, 0.1, 10.0})
                if (f * k * k / P.omega_p < P.omega_p)
                    b.push_back(f * k * k / P.omega_p);
            return b;
        };
        // near the cutoff: eps = 0, and the rise to +pi/2 at gamma ~ eps(omega_p) omega_p
        c.gap_breakpoints = [P](double k) {
            const double wp = P.omega_p, k2 = k * k;
            std::vector<double> g;
            if (k < wp)
                g.push_back(k2 / (wp + std::sqrt(wp * wp - k2)));
            const double e_edge = k2 / (k2 + wp * wp);
            for (double f : {0.1, 1.0, 10.0}) {
                const double gam = f * e_edge * wp;
                g.push_back(gam * gam / (2 * wp));
            }
            return g;
        };
    }
    return c;
}

inline ScatteringChannel exp_channel(const SlabParams& P)
{
    ScatteringChannel c;
    c.scale = P.omega_p;
    c.phase_shift = [P](double p, double) {
        return p < P.omega_p ? -p * P.L : (std::sqrt(p * p - P.omega_p * P.omega_p) - p) * P.L;
    };
    c.phase_shift_deriv = [P](double p, double) {
        if (p < P.omega_p)
            return -P.L;
        const double q = std::sqrt((p - P.omega_p) * (p + P.omega_p));
        return q > 0 ? (p / q - 1) * P.L : 0.0;
    };
    c.p_breakpoints = [P](double) { return std::vector<double>{P.omega_p}; };
    c.sqrt_edges = true;
    return c;
}

// Single-surface plasmon omega^2 = k^2 + omega_p^2/2 - sqrt(k^4 + omega_p^4/4).
inline double plasmon_single_surface(double k, double omega_p)
{
    const double k2 = k * k, wp2 = omega_p * omega_p;
    // rationalized to avoid cancellation at large k
    const double w2 = (k2 + wp2 / 2) - std::sqrt(k2 * k2 + wp2 * wp2 / 4);
    const double alt = (wp2 * k2) / ((k2 + wp2 / 2) + std::sqrt(k2 * k2 + wp2 * wp2 / 4));
    return std::sqrt(std::max(0.0, k2 > wp2 ? alt : w2));
}

// Both branches of the slab plasmon condition, (eps eta + gamma) -/+ (eps eta - gamma) e^{-gamma L} = 0.
inline double plasmon_branch(int sign, double omega, double k, const SlabParams& P)
{
    const double e = epsilon(omega, P);
    const double eta = std::sqrt(std::max(0.0, k * k - omega * omega));
    const double gamma = std::sqrt(k * k + P.omega_p * P.omega_p - omega * omega);
    return (e * eta + gamma) - sign * (e * eta - gamma) * std::exp(-gamma * P.L);
}

// Lowest surface plasmon frequency at transverse momentum k.
inline double plasmon_dispersion(double k, const SlabParams& P, double x_tol = 1e-14)
{
    P.validate();
    if (!(k > 0))
        throw std::domain_error("plasmon_dispersion: k must be > 0");
    const double hi = std::min(k, P.omega_p / std::sqrt(2.0));
    constexpr int seeds = 64;
    double best = std::numeric_limits<double>::infinity();
    for (int sign : {+1, -1}) {
        auto f = [&](double w) { return plasmon_branch(sign, w, k, P); };
        double lo_w = hi / seeds, lo_f = f(lo_w);
        for (int i = 2; i <= seeds; ++i) {
            const double w = hi * i / seeds;
            const double fw = f(w);
            if ((lo_f < 0) != (fw < 0) || fw == 0) {
                best = std::min(best, find_root_bracketed(f, lo_w, w, x_tol * std::max(1.0, hi)));
                break;
            }
            lo_w = w;
            lo_f = fw;
        }
    }
    if (!std::isfinite(best))
        throw std::domain_error("plasmon_dispersion: no root in (0, min(k, omega_p/sqrt2))");
    return best;
}

inline PartValue part_value(Part part, double T, const SlabParams& P, const QuadSettings& s = {})
{
    QuadResult F, S;
    switch (part) {
    case Part::surface_TE: F = F_s_TE(T, P, s); S = S_s_TE(T, P, s); break;
    case Part::surface_TM: F = F_s_TM(T, P, s); S = S_s_TM(T, P, s); break;
    case Part::lifshitz_TE: F = F_L_TE(T, P, s); S = S_L_TE(T, P, s); break;
    case Part::lifshitz_TM: F = F_L_TM(T, P, s); S = S_L_TM(T, P, s); break;
    case Part::exp: F = F_exp(T, P, s); S = S_exp(T, P, s); break;
    default: throw std::invalid_argument("slab part_value: not a slab part");
    }
    const SubtractionSpec sp = subtraction(part, P);
    PartValue v{part, F.value, S.value, 0, 0, std::max(F.error_estimate, S.error_estimate)};
    v.F_raw = F.value + sp.coeff_T3 * T * T * T + sp.coeff_T2 * T * T;
    v.S_raw = S.value - 3 * sp.coeff_T3 * T * T - 2 * sp.coeff_T2 * T;
    return v;
}

inline SlabBreakdown total(double T, const SlabParams& P, const QuadSettings& s = {})
{
    SlabBreakdown b;
    const auto a = part_value(Part::surface_TE, T, P, s);
    const auto c = part_value(Part::surface_TM, T, P, s);
    const auto d = part_value(Part::lifshitz_TE, T, P, s);
    const auto e = part_value(Part::lifshitz_TM, T, P, s);
    const auto x = part_value(Part::exp, T, P, s);
    b.F_s_TE = a.F, b.S_s_TE = a.S;
    b.F_s_TM = c.F, b.S_s_TM = c.S;
    b.F_L_TE = d.F, b.S_L_TE = d.S;
    b.F_L_TM = e.F, b.S_L_TM = e.S;
    b.F_exp = x.F, b.S_exp = x.S;
    b.max_error = std::max({a.error, c.error, d.error, e.error, x.error});
    return b;
}

} // namespace thermo::slab
