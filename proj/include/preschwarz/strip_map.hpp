#pragma once

#include "preschwarz/kernel.hpp"

#include <cstddef>
#include <vector>

namespace preschwarz {

/// Validated strip parameters 0 <= alpha < 1 < beta together with the
/// opening angle phi = 2 pi (1 - alpha) / (beta - alpha) in (0, 2 pi).
class StripParams {
public:
    /// Throws ParameterError unless 0 <= alpha < 1 and beta > 1.
    static StripParams make(double alpha, double beta);

    [[nodiscard]] double alpha() const noexcept { return alpha_; }
    [[nodiscard]] double beta() const noexcept { return beta_; }
    [[nodiscard]] double phi() const noexcept { return phi_; }
    /// phi / (2 pi) = (1 - alpha) / (beta - alpha), the turn fraction of phi.
    [[nodiscard]] double turn() const noexcept { return turn_; }
    /// e^{i phi}, exact at quarter turns.
    [[nodiscard]] Complex rotation() const noexcept { return rotation_; }
    /// (beta - alpha) i / pi, the factor in front of the logarithm.
    [[nodiscard]] Complex log_factor() const noexcept { return {0.0, width() / kPi}; }
    [[nodiscard]] double width() const noexcept { return beta_ - alpha_; }

private:
    StripParams(double alpha, double beta);

    double alpha_;
    double beta_;
    double turn_;
    double phi_;
    Complex rotation_;
};

/// Strip map P(z) = 1 + ((beta-alpha) i / pi) Log((1 - e^{i phi} z) / (1 - z)).
/// Maps the unit disc onto alpha < Re w < beta with P(0) = 1.
[[nodiscard]] Complex eval_P(const StripParams& p, DiscPoint z);

/// P'(z) = ((beta-alpha) i / pi) (1 - e^{i phi}) / ((1 - z)(1 - e^{i phi} z)).
[[nodiscard]] Complex eval_P_prime(const StripParams& p, DiscPoint z);

/// (P(z) - 1) / z with the removable singularity at 0 handled by the series
/// for |z| < kSeriesNearOrigin.
[[nodiscard]] Complex eval_P_difference_quotient(const StripParams& p, DiscPoint z);

/// Maclaurin coefficients (p_1, ..., p_{n_max}) of P(z) = 1 + sum p_n z^n,
/// p_n = ((beta-alpha) i / pi) (1 - e^{i n phi}) / n. Throws ParameterError
/// for n_max < 1.
[[nodiscard]] std::vector<Complex> P_series_coeffs(const StripParams& p, std::size_t n_max);

/// Upper bound for |P(z) - (1 + sum_{n<=N} p_n z^n)| at |z| <= r, from
/// |p_n| <= 2 (beta-alpha) / (pi n).
[[nodiscard]] double P_series_tail_bound(const StripParams& p, std::size_t n_terms, double r);

/// Smallest N for which P_series_tail_bound(p, N, r) <= tolerance.
[[nodiscard]] std::size_t P_series_terms_for(const StripParams& p, double r, double tolerance);

/// alpha + margin < Re w < beta - margin.
[[nodiscard]] bool strip_contains(const StripParams& p, Complex w, double margin = 0.0);

/// Signed distance from Re w to the nearest strip edge (negative outside).
[[nodiscard]] double strip_margin(const StripParams& p, Complex w) noexcept;

/// Below this modulus, quotients by z use truncated series.
inline constexpr double kSeriesNearOrigin = 1e-3;

/// Margin used for floating-point strict-containment checks.
inline constexpr double kAcceptanceMargin = 1e-9;

} // namespace preschwarz
