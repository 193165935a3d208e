#pragma once

#include <preschwarz/kernel.hpp>

#include <cmath>
#include <cstdint>
#include <random>

namespace preschwarz::testing {

// Reference values computed with 40-digit arithmetic.
namespace oracle {
inline constexpr double kBound_0_2 = 5.3826229520792186103;
inline constexpr double kBound_05_2 = 3.8271984610086278778;
inline constexpr double kBound_09_11 = -0.20060999667178149469;

inline const Complex kExtremal_0_2_a3{-0.81056946913870217, 0.0};
inline const Complex kExtremal_0_2_a4{0.0, -0.20254530676133203};
inline const Complex kExtremal_05_2_a2{0.41349667156634404, 0.71619724391352901};
inline const Complex kExtremal_05_2_a3{-0.274353665288031, 0.47519448752161555};
inline const Complex kExtremal_05_2_a4{-0.26524543483580017, 0.0};

inline const Complex kExtremal_0_2_at_half{0.39617795540644911616, 0.30502955209285151414};
inline const Complex kExtremal_05_2_at_03_04i{0.12260170294676888056, 0.39181982455413800634};

inline const Complex kP_0_2_at_half{1.0, 0.6993983051321195560};
inline const Complex kP_0_2_at_09{1.0, 1.8744880726671729103};
} // namespace oracle

/// Seeded sampler for property tests.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    /// Uniform by area in the annulus r_lo <= |z| < r_hi.
    Complex in_annulus(double r_lo, double r_hi)
    {
        const double r = std::sqrt(uniform(r_lo * r_lo, r_hi * r_hi));
        return std::polar(r, uniform(-kPi, kPi));
    }

    Complex in_disc(double radius) { return in_annulus(0.0, radius); }

    /// A valid (alpha, beta) pair with beta up to beta_max.
    std::pair<double, double> strip(double beta_max = 5.0)
    {
        return {uniform(0.0, 1.0), uniform(1.0 + 1e-3, beta_max)};
    }

private:
    std::mt19937_64 rng_;
};

inline double rel_err(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

} // namespace preschwarz::testing
