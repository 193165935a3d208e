#pragma once

#include <complex>

namespace preschwarz {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Slack used by nonnegativity assertions on computed moduli.
inline constexpr double kNonnegativeSlack = 1e-12;

/// A point of the open unit disc, |value| < 1.
class DiscPoint {
public:
    /// Throws DomainError unless |z| < 1.
    explicit DiscPoint(Complex z);

    [[nodiscard]] Complex value() const noexcept { return value_; }
    [[nodiscard]] double modulus() const noexcept { return std::abs(value_); }

    /// 1 - |z|^2, computed as (1-|z|)(1+|z|) to keep precision near the boundary.
    [[nodiscard]] double hyperbolic_weight() const noexcept;

private:
    Complex value_;
};

/// Principal logarithm ln|z| + i arg z with arg z in (-pi, pi].
///
/// std::log follows atan2 and yields -pi on the negative real axis when the
/// imaginary part is -0.0; that case is folded onto +pi. Throws DomainError
/// for z = 0.
[[nodiscard]] Complex principal_log(Complex z);

/// sqrt(|z-1|^2 + pi^2), an upper bound for |Log z| valid when |z| >= 1.
[[nodiscard]] double log_modulus_bound_outer(Complex z);

/// sqrt(|(z-1)/z|^2 + pi^2), an upper bound for |Log z| valid when 0 < |z| < 1.
[[nodiscard]] double log_modulus_bound_inner(Complex z);

/// (1-|w|^2)/(1-|z|^2) - |w'|; nonnegative for any Schwarz function w.
[[nodiscard]] double schwarz_pick_defect(DiscPoint w_val, Complex w_deriv, DiscPoint z);

/// exp(2 pi i t) with exact values at quarter turns (t = 1/2 gives -1 + 0i).
[[nodiscard]] Complex unit_turn(double t);

} // namespace preschwarz
