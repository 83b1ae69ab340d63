#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "thermo/spectral.hpp"

using namespace thermo;

namespace {

QuadSettings tight() { return QuadSettings{}.with_tol(1e-11, 1e-300); }

// A channel whose only content is a phase jump of pi at p = 0: one massless mode per k.
ScatteringChannel massless_jump()
{
    ScatteringChannel ch;
    ch.phase_shift = [](double, double) { return 0.0; };
    ch.phase_shift_deriv = [](double, double) { return 0.0; };
    ch.phase_jumps = [](double) { return std::vector<PhaseJump>{{0.0, std::numbers::pi}}; };
    return ch;
}

} // namespace

TEST(DefiningIntegral, MasslessModeFreeEnergy)
{
    // int k dk/2pi T ln(1 - e^{-k/T}) = -zeta(3) T^3/(2 pi)
    for (double T : {0.1, 1.0, 7.0}) {
        const double F = free_energy_defining(massless_jump(), T, tight()).value;
        EXPECT_NEAR(F / (-zeta3() * T * T * T / (2 * std::numbers::pi)), 1.0, 1e-9) << T;
        const double S = entropy_defining(massless_jump(), T, tight()).value;
        EXPECT_NEAR(S / (3 * zeta3() * T * T / (2 * std::numbers::pi)), 1.0, 1e-9) << T;
    }
}

TEST(DefiningIntegral, SurfaceModeCountsLikeAJump)
{
    ScatteringChannel ch;
    ch.phase_shift = [](double, double) { return 0.0; };
    ch.phase_shift_deriv = [](double, double) { return 0.0; };
    ch.surface_mode = [](double k) { return k; };
    const double T = 2.0;
    EXPECT_NEAR(free_energy_defining(ch, T, tight()).value, free_energy_defining(massless_jump(), T, tight()).value,
                1e-10);
}

TEST(DefiningIntegral, FiniteDifferenceDerivativeFallback)
{
    // delta = -atan(1/p): smooth, decays; analytic and numerical derivative must agree
    ScatteringChannel a;
    a.phase_shift = [](double p, double) { return -std::atan(1 / p); };
    ScatteringChannel b = a;
    b.phase_shift_deriv = [](double p, double) { return 1 / (1 + p * p); };
    EXPECT_NEAR(phase_derivative(a, 0.7, 0.0), phase_derivative(b, 0.7, 0.0), 1e-8);
    const double T = 1.0;
    const auto s = QuadSettings{}.with_tol(1e-8, 1e-300);
    EXPECT_NEAR(free_energy_defining(a, T, s).value / free_energy_defining(b, T, s).value, 1.0, 1e-6);
}

TEST(DefiningIntegral, RejectsNonPositiveTemperature)
{
    EXPECT_THROW(free_energy_defining(massless_jump(), 0.0), std::domain_error);
    EXPECT_THROW(entropy_defining(massless_jump(), -1.0), std::domain_error);
}

TEST(Subtraction, FreeEnergyAndEntropyConsistent)
{
    const SubtractionSpec sp{-0.1, 0.05, 0.002};
    auto Fpoly = [&](double T) { return sp.coeff_T5 * std::pow(T, 5) + sp.coeff_T3 * T * T * T + sp.coeff_T2 * T * T; };
    for (double T : {0.5, 2.0}) {
        EXPECT_NEAR(subtract_free_energy(Fpoly(T), sp, T), 0.0, 1e-13);
        const double S = -derivative_fd(Fpoly, T, 1e-5);
        EXPECT_NEAR(subtract_entropy(S, sp, T), 0.0, 1e-8);
    }
}

TEST(HeatKernel, RoundTrip)
{
    const HeatKernelCoeffs a{std::sqrt(std::numbers::pi), -2.0, 0.37};
    const auto back = heat_kernel_from_expansion(expansion_from_heat_kernel(a));
    EXPECT_NEAR(back.a_half, a.a_half, 1e-14);
    EXPECT_NEAR(back.a_one, a.a_one, 1e-14);
    EXPECT_NEAR(back.a_three_half, a.a_three_half, 1e-14);
    const auto sp = subtraction_from_heat_kernel(a);
    EXPECT_NEAR(sp.coeff_T3, -zeta3() / (4 * std::numbers::pi), 1e-15);
    EXPECT_NEAR(sp.coeff_T2, 1.0 / 12, 1e-15);
}

TEST(HeatKernel, ExtractRejectsPoorFit)
{
    std::vector<Sample> s;
    for (double T : log_grid(1e2, 1e3, 10))
        s.push_back({T, std::sin(T)});
    EXPECT_THROW(extract_heat_kernel(s), std::domain_error);
}

TEST(ThermoPoint, AssembleSums)
{
    std::vector<PartValue> parts{{Part::TE, 1, 2, 3, 4, 1e-9}, {Part::TM, 10, 20, 30, 40, 1e-7}};
    const auto pt = ThermoPoint::assemble(0.5, parts);
    EXPECT_EQ(pt.F_subtr, 11);
    EXPECT_EQ(pt.S_subtr, 22);
    EXPECT_EQ(pt.F_raw, 33);
    EXPECT_EQ(pt.S_raw, 44);
    EXPECT_EQ(pt.max_error, 1e-7);
    ASSERT_NE(pt.find(Part::TM), nullptr);
    EXPECT_EQ(pt.find(Part::exp), nullptr);
}
