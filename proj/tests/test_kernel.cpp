#include "support.hpp"

#include <preschwarz/errors.hpp>
#include <preschwarz/kernel.hpp>

#include <gtest/gtest.h>

#include <functional>
#include <limits>

using namespace preschwarz;
using preschwarz::testing::Sampler;

TEST(DiscPoint, AcceptsInteriorRejectsBoundary)
{
    EXPECT_DOUBLE_EQ(DiscPoint({0.6, 0.0}).hyperbolic_weight(), 0.64);
    EXPECT_EQ(DiscPoint({0.0, 0.0}).hyperbolic_weight(), 1.0);
    EXPECT_THROW(DiscPoint({1.0, 0.0}), DomainError);
    EXPECT_THROW(DiscPoint({0.0, -1.0}), DomainError);
    EXPECT_THROW(DiscPoint({0.8, 0.8}), DomainError);
    EXPECT_THROW(DiscPoint({std::numeric_limits<double>::quiet_NaN(), 0.0}), DomainError);
}

TEST(PrincipalLog, BranchCut)
{
    EXPECT_EQ(principal_log({-1.0, 0.0}), Complex(0.0, kPi));
    EXPECT_EQ(principal_log({-1.0, -0.0}), Complex(0.0, kPi));
    EXPECT_NEAR(principal_log({-1.0, -1e-12}).imag(), -kPi, 1e-11);
    EXPECT_EQ(principal_log({1.0, 0.0}), Complex(0.0, 0.0));
    EXPECT_NEAR(principal_log({0.0, 1.0}).imag(), kPi / 2, 1e-16);
    EXPECT_THROW((void)principal_log({0.0, 0.0}), DomainError);
}

TEST(PrincipalLog, ArgumentRangeProperty)
{
    Sampler s(11);
    for (int i = 0; i < 20000; ++i) {
        const Complex z = std::polar(std::exp(s.uniform(-20.0, 20.0)), s.uniform(-kPi, kPi));
        const Complex l = principal_log(z);
        ASSERT_GT(l.imag(), -kPi);
        ASSERT_LE(l.imag(), kPi);
        ASSERT_LT(std::abs(std::exp(l) - z), 1e-13 * std::abs(z));
    }
}

TEST(LogModulusBounds, Examples)
{
    EXPECT_DOUBLE_EQ(log_modulus_bound_outer({1.0, 0.0}), kPi);
    EXPECT_DOUBLE_EQ(log_modulus_bound_outer({-1.0, 0.0}), std::sqrt(4.0 + kPi * kPi));
    EXPECT_DOUBLE_EQ(log_modulus_bound_inner({0.5, 0.0}), std::sqrt(1.0 + kPi * kPi));
    EXPECT_THROW((void)log_modulus_bound_outer({0.5, 0.0}), DomainError);
    EXPECT_THROW((void)log_modulus_bound_inner({0.0, 0.0}), DomainError);
    EXPECT_THROW((void)log_modulus_bound_inner({1.0, 0.0}), DomainError);
}

TEST(LogModulusBounds, OuterHoldsOnRandomSamples)
{
    Sampler s(12);
    for (int i = 0; i < 100000; ++i) {
        const double r = std::exp(s.uniform(0.0, 12.0));
        const Complex z = std::polar(r, i % 10 == 0 ? kPi : s.uniform(-kPi, kPi));
        ASSERT_LE(std::abs(principal_log(z)), log_modulus_bound_outer(z) + 1e-12) << z;
    }
}

TEST(LogModulusBounds, InnerHoldsOnRandomSamples)
{
    Sampler s(13);
    for (int i = 0; i < 100000; ++i) {
        const double r = std::exp(s.uniform(-30.0, -1e-12));
        const Complex z = std::polar(r, i % 10 == 0 ? kPi : s.uniform(-kPi, kPi));
        ASSERT_LE(std::abs(principal_log(z)), log_modulus_bound_inner(z) + 1e-12) << z;
    }
}

namespace {

struct SchwarzFunction {
    const char* name;
    std::function<Complex(Complex)> w;
    std::function<Complex(Complex)> dw;
};

std::vector<SchwarzFunction> schwarz_functions()
{
    const Complex a{0.3, -0.5};
    return {
        {"z", [](Complex z) { return z; }, [](Complex) { return Complex{1.0, 0.0}; }},
        {"z^2", [](Complex z) { return z * z; }, [](Complex z) { return 2.0 * z; }},
        {"z^3", [](Complex z) { return z * z * z; }, [](Complex z) { return 3.0 * z * z; }},
        {"blaschke", [a](Complex z) { return z * (z - a) / (1.0 - std::conj(a) * z); },
         [a](Complex z) {
             const Complex d = 1.0 - std::conj(a) * z;
             return ((2.0 * z - a) * d + std::conj(a) * z * (z - a)) / (d * d);
         }},
        {"z^2/2", [](Complex z) { return 0.5 * z * z; }, [](Complex z) { return z; }},
    };
}

} // namespace

TEST(SchwarzPick, ExamplesAreTightForAutomorphisms)
{
    EXPECT_NEAR(schwarz_pick_defect(DiscPoint({0.5, 0.0}), {1.0, 0.0}, DiscPoint({0.5, 0.0})), 0.0,
                1e-15);
    EXPECT_DOUBLE_EQ(schwarz_pick_defect(DiscPoint({0.25, 0.0}), {1.0, 0.0}, DiscPoint({0.5, 0.0})),
                     0.9375 / 0.75 - 1.0);
}

TEST(SchwarzPick, DefectNonnegativeForSchwarzFunctions)
{
    Sampler s(14);
    for (const auto& f : schwarz_functions()) {
        for (int i = 0; i < 10000; ++i) {
            const Complex z = s.in_disc(0.999);
            const double d = schwarz_pick_defect(DiscPoint(f.w(z)), f.dw(z), DiscPoint(z));
            ASSERT_GE(d, -kNonnegativeSlack) << f.name << " at " << z;
        }
    }
}

TEST(UnitTurn, QuarterTurnsAreExact)
{
    EXPECT_EQ(unit_turn(0.5), Complex(-1.0, 0.0));
    EXPECT_EQ(unit_turn(0.25), Complex(0.0, 1.0));
    EXPECT_EQ(unit_turn(1.0), Complex(1.0, 0.0));
    EXPECT_NEAR(std::abs(unit_turn(1.0 / 3.0) - std::exp(Complex(0.0, 2.0 * kPi / 3.0))), 0.0,
                1e-15);
}
