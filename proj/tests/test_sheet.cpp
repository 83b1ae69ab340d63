#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "thermo/plasma_sheet.hpp"

using namespace thermo;
using sheet::SheetParams;

namespace {

QuadSettings tight(double rel = 1e-12) { return QuadSettings{}.with_tol(rel, 1e-300); }

class SheetByOmega0 : public ::testing::TestWithParam<double> {
protected:
    SheetParams P{1.0, GetParam()};
};

} // namespace

TEST_P(SheetByOmega0, ClosedFormHMatchesEpsilonIntegral)
{
    for (Channel ch : {Channel::TE, Channel::TM})
        for (double w : {0.013, 0.2, 0.77, 1.9, 12.0, 45.0}) {
            const double ref = sheet::h_defining(ch, w, P, tight(1e-13)).value;
            EXPECT_NEAR(sheet::h(ch, w, P) / ref, 1.0, 1e-9) << to_string(ch) << " omega=" << w;
        }
}

TEST_P(SheetByOmega0, SubtractedHDecaysFasterThanRaw)
{
    for (Channel ch : {Channel::TE, Channel::TM}) {
        const double a = std::abs(sheet::h_subtr(ch, 1e2, P));
        const double b = std::abs(sheet::h_subtr(ch, 1e3, P));
        EXPECT_LT(b, a / 50) << to_string(ch);
    }
    // the subtracted forms equal h minus the asymptote where both are accurate
    for (double w : {3.0, 20.0}) {
        EXPECT_NEAR(sheet::h_subtr(Channel::TE, w, P),
                    sheet::h(Channel::TE, w, P) - std::numbers::pi / (2 * w) + P.Omega0 / (w * w), 1e-12);
        EXPECT_NEAR(sheet::h_subtr(Channel::TM, w, P), sheet::h(Channel::TM, w, P) + P.Omega0 / (3 * w * w), 1e-12);
    }
}

TEST_P(SheetByOmega0, FreeEnergyMatchesDefiningIntegral)
{
    for (double T : {0.3, 2.0}) {
        const double te = free_energy_defining(sheet::scattering_channel(Channel::TE, P), T, tight(1e-10)).value;
        EXPECT_NEAR(sheet::free_energy_channel_raw(Channel::TE, T, P, tight()).value / te, 1.0, 1e-7) << T;
        // the TM phase shift carries the surface plasmon as a bound state
        const double tm = free_energy_defining(sheet::scattering_channel(Channel::TM, P), T, tight(1e-10)).value;
        const double closed = sheet::free_energy_channel_raw(Channel::TM, T, P, tight()).value +
                              sheet::plasmon_free_energy_raw(T, P, tight()).value;
        EXPECT_NEAR(closed / tm, 1.0, 1e-7) << T;
    }
}

TEST_P(SheetByOmega0, PlasmonEnergyMatchesMomentumIntegral)
{
    const double T = 0.7;
    EXPECT_NEAR(sheet::plasmon_free_energy_raw(T, P, tight()).value,
                sheet::plasmon_free_energy_k(T, P, tight()).value, 1e-10);
}

TEST_P(SheetByOmega0, EntropyIsMinusTemperatureDerivative)
{
    for (Part part : {Part::TE, Part::TM, Part::surface_plasmon})
        for (double T : {0.05, 1.0, 30.0}) {
            const double h = 1e-4 * T;
            auto F = [&](double t) { return sheet::part_value(part, t, P, tight(1e-13)).F; };
            const double S = sheet::part_value(part, T, P, tight(1e-13)).S;
            EXPECT_NEAR(-derivative_fd(F, T, h), S, 1e-6 * std::max(std::abs(S), 1e-3))
                << to_string(part) << " T=" << T;
        }
}

TEST_P(SheetByOmega0, RawAndSubtractedDifferByAnalyticTerms)
{
    const double T = 5.0;
    for (Part part : {Part::TE, Part::TM, Part::surface_plasmon}) {
        const auto v = sheet::part_value(part, T, P, tight());
        const auto sp = sheet::subtraction(part, P);
        EXPECT_NEAR(subtract_free_energy(v.F_raw, sp, T), v.F, 1e-9 * std::abs(v.F_raw));
        EXPECT_NEAR(subtract_entropy(v.S_raw, sp, T), v.S, 1e-9 * std::abs(v.S_raw));
    }
}

TEST_P(SheetByOmega0, PlasmonSatisfiesDispersionRelation)
{
    // below k = omega0 the branch solves only the squared relation (Omega < 0)
    const double k0 = std::max({P.omega0, sheet::k_min_surface(P), 1e-2}) * 1.001;
    for (double k : log_grid(k0, 1e2, 4))
        EXPECT_LT(sheet::surface_mode_residual(k, P), 1e-10) << k;
}

INSTANTIATE_TEST_SUITE_P(Omega0, SheetByOmega0, ::testing::Values(0.0, 0.5, 0.85, 1.3));

TEST(Sheet, LowTemperatureSlopes)
{
    const SheetParams P{1.0, 0.0};
    const double T = 1e-4;
    const auto b = sheet::total(T, P, tight(1e-11));
    EXPECT_NEAR(b.S_TE / T, 1.0 / 6, 1e-3);
    EXPECT_NEAR(b.S_TM / T, 1.0 / 18, 1e-3);
    EXPECT_NEAR(b.S_total() / T, 2.0 / 9, 2e-3);
}

TEST(Sheet, EntropyPositiveWithoutResonance)
{
    const SheetParams P{1.0, 0.0};
    for (double T : log_grid(1e-2, 1e2, 4))
        EXPECT_GE(sheet::total(T, P).S_total(), 0.0) << T;
}

TEST(Sheet, EntropyNegativeInsideWindow)
{
    const SheetParams P{1.0, 0.85};
    EXPECT_LT(sheet::high_T_log_coefficient(P), 0.0);
    EXPECT_LT(sheet::total(1e3, P).S_total(), 0.0);
    EXPECT_GT(sheet::high_T_log_coefficient({1.0, 0.5}), 0.0);
    EXPECT_GT(sheet::high_T_log_coefficient({1.0, 1.4}), 0.0);
}

TEST(Sheet, WindowEdgesAreSqrtHalfAndSqrtThreeHalves)
{
    auto c = [](double w) { return sheet::high_T_log_coefficient({1.0, w}, tight(1e-12)); };
    EXPECT_NEAR(find_root_bracketed(c, 0.6, 0.8, 1e-10), 1 / std::sqrt(2.0), 1e-8);
    EXPECT_NEAR(find_root_bracketed(c, 1.1, 1.3, 1e-10), std::sqrt(1.5), 1e-8);
}

TEST(Sheet, ScaleInvariance)
{
    // F(T; a Omega0, a omega0) = a^3 F(T/a; Omega0, omega0)
    const double a = 2.5;
    const SheetParams P{1.0, 0.6}, Q{a, a * 0.6};
    for (Part part : {Part::TE, Part::TM, Part::surface_plasmon}) {
        // subtracted plasmon is identically zero below omega0 = Omega0/sqrt2, compare raw values
        const double f1 = sheet::part_value(part, 0.8, P, tight()).F_raw;
        const double f2 = sheet::part_value(part, a * 0.8, Q, tight()).F_raw;
        EXPECT_NEAR(f2 / (a * a * a * f1), 1.0, 1e-8) << to_string(part);
    }
}

TEST(Sheet, TEContinuousAndTMJumpsAtResonance)
{
    const SheetParams P{1.0, 0.7};
    const double e = 1e-9;
    EXPECT_NEAR(sheet::h(Channel::TE, 0.7 - e, P), sheet::h(Channel::TE, 0.7 + e, P), 1e-6);
    EXPECT_NEAR(sheet::h(Channel::TM, 0.7 + e, P) - sheet::h(Channel::TM, 0.7 - e, P), -std::numbers::pi / 0.7, 1e-6);
    EXPECT_THROW(sheet::h(Channel::TE, 0.7, P), std::domain_error);
}

TEST(Sheet, SumRule)
{
    for (double w0 : {0.0, 0.5})
        EXPECT_NEAR(sheet::spectral_moment(Channel::TM, {1.0, w0}, tight()).value, 0.0, 1e-9) << w0;
}

TEST(Sheet, HeatKernelFromFormulas)
{
    const auto hk = sheet::heat_kernel_coeffs({1.0, 0.5});
    EXPECT_NEAR(hk.te.a_half, std::sqrt(std::numbers::pi), 1e-15);
    EXPECT_NEAR(hk.tm.a_half, std::sqrt(std::numbers::pi), 1e-14);
    EXPECT_NEAR(hk.tm.a_one, -2.0 / 3, 1e-15);
}

TEST(Sheet, InvalidParameters)
{
    EXPECT_THROW(sheet::total(1.0, {0.0, 0.0}), std::invalid_argument);
    EXPECT_THROW(sheet::total(1.0, {1.0, -0.1}), std::invalid_argument);
    EXPECT_THROW(sheet::free_energy_channel(Channel::TE, 0.0, {1.0, 0.0}), std::domain_error);
    EXPECT_THROW(sheet::omega_sf(0.1, {1.0, 0.9}), std::domain_error);
}
