#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "thermo/slab.hpp"

using namespace thermo;
using slab::SlabParams;

namespace {

QuadSettings tight(double rel = 1e-12) { return QuadSettings{}.with_tol(rel, 1e-300); }

const SlabParams unit{1.0, 1.0};

} // namespace

TEST(Slab, TransmissionFactorizes)
{
    for (Channel ch : {Channel::TE, Channel::TM})
        for (double p : {0.1, 0.9, 1.1, 4.0})
            for (double k : {0.0, 0.5, 3.0}) {
                const auto t = slab::transmission(ch, p, k, unit);
                EXPECT_LT(std::abs(t.t - t.t_s * t.t_L * t.t_exp), 1e-13 * std::abs(t.t));
            }
}

TEST(Slab, SurfaceSpectralFunctionMatchesDefinition)
{
    for (double w : {0.01, 0.3, 0.70, 0.72, 0.95, 1.05, 3.0, 40.0}) {
        EXPECT_NEAR(slab::h_surface(w, unit) / slab::h_surface_defining(w, unit, tight(1e-13)).value, 1.0, 1e-9) << w;
        EXPECT_NEAR(slab::h_surface_moment(w, unit) / slab::h_surface_moment_defining(w, unit, tight(1e-13)).value, 1.0,
                    1e-9)
            << w;
    }
}

TEST(Slab, SurfaceSpectralFunctionLimits)
{
    EXPECT_NEAR(slab::h_surface(1e4, unit), slab::h_surface_inf(unit), 1e-7);
    EXPECT_NEAR(slab::h_surface_inf(unit), (std::numbers::pi - 4) / 2, 1e-15);
    // continuous across omega_p/sqrt2
    const double c = 1 / std::sqrt(2.0);
    EXPECT_NEAR(slab::h_surface(c - 1e-7, unit), slab::h_surface(c + 1e-7, unit), 1e-6);
    // the p-weighted moment vanishes at large omega
    EXPECT_LT(std::abs(slab::h_surface_moment(1e3, unit)), 1e-6);
}

TEST(Slab, SurfaceFreeEnergiesMatchDefiningIntegral)
{
    for (double T : {0.3, 1.0}) {
        for (Channel ch : {Channel::TE, Channel::TM}) {
            const double ref = free_energy_defining(slab::surface_channel(ch, unit), T, tight(1e-10)).value;
            const double closed = ch == Channel::TE ? slab::F_s_TE(T, unit, tight(), false).value
                                                    : slab::F_s_TM(T, unit, tight(), false).value;
            EXPECT_NEAR(closed / ref, 1.0, 1e-8) << to_string(ch) << " T=" << T;
        }
        const double ref = free_energy_defining(slab::exp_channel(unit), T, tight(1e-10)).value;
        EXPECT_NEAR(slab::F_exp_closed(T, unit, tight()).value / ref, 1.0, 1e-8) << T;
    }
}

TEST(Slab, ExpClosedAndStableFormsAgree)
{
    for (double T : {0.2, 2.0, 20.0})
        EXPECT_NEAR(slab::F_exp(T, unit, tight(), false).value / slab::F_exp_closed(T, unit, tight()).value, 1.0, 1e-9)
            << T;
}

TEST(Slab, ExpPartIsLinearInThickness)
{
    for (double T : {0.1, 3.0}) {
        const double a = slab::S_exp(T, {1.0, 1.0}).value;
        const double b = slab::S_exp(T, {1.0, 2.0}).value;
        EXPECT_NEAR(b / a, 2.0, 1e-8) << T;
    }
}

TEST(Slab, EntropyIsMinusTemperatureDerivative)
{
    for (Part part : {Part::surface_TE, Part::surface_TM, Part::lifshitz_TE, Part::lifshitz_TM, Part::exp})
        for (double T : {0.05, 1.0, 20.0}) {
            const auto s = part == Part::lifshitz_TM ? QuadSettings{}.with_tol(1e-11, 1e-20) : tight(1e-13);
            auto F = [&](double t) { return slab::part_value(part, t, unit, s).F; };
            const double S = slab::part_value(part, T, unit, s).S;
            EXPECT_NEAR(-derivative_fd(F, T, 1e-4 * T) / S, 1.0, 1e-5) << to_string(part) << " T=" << T;
        }
}

TEST(Slab, LifshitzEntropyRisesToPlateau)
{
    const double d = slab::slab_constant_d_te(unit, tight(1e-10)).value;
    EXPECT_LT(d, 0.0);
    double prev = 0;
    for (double T : {0.02, 0.1, 0.3, 1.0}) {
        const double S = slab::S_L_TE(T, unit).value + slab::S_L_TM(T, unit).value;
        EXPECT_GT(S, prev) << T;
        prev = S;
    }
    EXPECT_NEAR(slab::S_L_TE(1e3, unit).value / -d, 1.0, 1e-3);
    EXPECT_NEAR(slab::S_L_TM(1e3, unit, QuadSettings{}.with_tol(1e-8, 1e-14)).value / -d, 1.0, 1e-3);
}

TEST(Slab, SurfaceEntropyNegativeAtHighTemperature)
{
    for (double T : {10.0, 100.0, 1000.0}) {
        const double S = slab::S_s_TE(T, unit).value + slab::S_s_TM(T, unit).value;
        EXPECT_LT(S, 0.0) << T;
    }
    // slope in ln T of the TE part approaches -omega_p^2/(8 pi)
    const double a = slab::S_s_TE(1e3, unit).value, b = slab::S_s_TE(1e4, unit).value;
    EXPECT_NEAR((b - a) / std::log(10.0), -1 / (8 * std::numbers::pi), 1e-3);
}

TEST(Slab, ConstantsAreScaleInvariant)
{
    const double c1 = slab::slab_constant_c(unit).value;
    EXPECT_NEAR(c1, std::numbers::pi / 2, 1e-6);
    EXPECT_NEAR(slab::slab_constant_c({3.0, 1.0}).value, c1, 1e-6);
    EXPECT_NEAR(slab::slab_constant_d_te({2.0, 0.5}, tight(1e-10)).value / slab::slab_constant_d_te(unit, tight(1e-10)).value,
                1.0, 1e-6);
}

TEST(Slab, LifshitzTENoLogTerm)
{
    EXPECT_NEAR(slab::lifshitz_te_log_moment(unit, QuadSettings{}.with_tol(1e-10, 1e-14)).value, 0.0, 1e-8);
}

TEST(Slab, PlasmonBelowSurfaceFrequency)
{
    for (double L : {0.3, 1.0, 5.0})
        for (double k : log_grid(1e-2, 1e2, 6)) {
            const double w = slab::plasmon_dispersion(k, {1.0, L});
            EXPECT_GT(w, 0.0);
            EXPECT_LE(w, 1 / std::sqrt(2.0));
            EXPECT_LT(w, k);
        }
}

TEST(Slab, PlasmonThickSlabMatchesSingleSurface)
{
    for (double k : {0.1, 1.0, 10.0})
        EXPECT_NEAR(slab::plasmon_dispersion(k, {1.0, 50.0}) / slab::plasmon_single_surface(k, 1.0), 1.0, 1e-10) << k;
    // a thin slab binds the symmetric mode more weakly
    EXPECT_LT(slab::plasmon_dispersion(0.5, unit), slab::plasmon_single_surface(0.5, 1.0));
}

TEST(Slab, TotalSumsParts)
{
    const auto b = slab::total(0.5, unit);
    double F = 0;
    for (Part p : {Part::surface_TE, Part::surface_TM, Part::lifshitz_TE, Part::lifshitz_TM, Part::exp})
        F += slab::part_value(p, 0.5, unit).F;
    EXPECT_NEAR(b.F_total(), F, 1e-14);
}

TEST(Slab, InvalidParameters)
{
    EXPECT_THROW(slab::total(1.0, {0.0, 1.0}), std::invalid_argument);
    EXPECT_THROW(slab::total(1.0, {1.0, -1.0}), std::invalid_argument);
    EXPECT_THROW(slab::part_value(Part::TE, 1.0, unit), std::invalid_argument);
}
