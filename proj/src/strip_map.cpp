#include "preschwarz/strip_map.hpp"

#include "preschwarz/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace preschwarz {

namespace {

// Terms of the origin series for (P(z)-1)/z; at |z| < 1e-3 the 12th term is
// below 1e-33 relative to the first.
constexpr std::size_t kNearOriginTerms = 12;

} // namespace

StripParams::StripParams(double alpha, double beta)
    : alpha_(alpha)
    , beta_(beta)
    , turn_((1.0 - alpha) / (beta - alpha))
    , phi_(2.0 * kPi * turn_)
    , rotation_(unit_turn(turn_))
{
}

StripParams StripParams::make(double alpha, double beta)
{
    if (!std::isfinite(alpha) || !std::isfinite(beta)) {
        throw ParameterError("alpha and beta must be finite");
    }
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        throw ParameterError("alpha = " + std::to_string(alpha) +
                             " violates 0 <= alpha < 1 (class condition 0 <= alpha < 1 < beta)");
    }
    if (!(beta > 1.0)) {
        throw ParameterError("beta = " + std::to_string(beta) +
                             " violates beta > 1 (class condition 0 <= alpha < 1 < beta)");
    }
    return StripParams(alpha, beta);
}

Complex eval_P(const StripParams& p, DiscPoint z)
{
    const Complex w = z.value();
    if (w == Complex{0.0, 0.0}) {
        return {1.0, 0.0};
    }
    const Complex ratio = (1.0 - p.rotation() * w) / (1.0 - w);
    return 1.0 + p.log_factor() * principal_log(ratio);
}

Complex eval_P_prime(const StripParams& p, DiscPoint z)
{
    const Complex w = z.value();
    const Complex e = p.rotation();
    return p.log_factor() * (1.0 - e) / ((1.0 - w) * (1.0 - e * w));
}

Complex eval_P_difference_quotient(const StripParams& p, DiscPoint z)
{
    const Complex w = z.value();
    if (std::abs(w) < kSeriesNearOrigin) {
        const auto coeffs = P_series_coeffs(p, kNearOriginTerms);
        Complex acc{0.0, 0.0};
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            acc = acc * w + *it;
        }
        return acc;
    }
    return (eval_P(p, z) - 1.0) / w;
}

std::vector<Complex> P_series_coeffs(const StripParams& p, std::size_t n_max)
{
    if (n_max < 1) {
        throw ParameterError("P_series_coeffs requires n_max >= 1");
    }
    std::vector<Complex> coeffs;
    coeffs.reserve(n_max);
    const Complex factor = p.log_factor();
    for (std::size_t n = 1; n <= n_max; ++n) {
        const double dn = static_cast<double>(n);
        coeffs.push_back(factor * (1.0 - unit_turn(dn * p.turn())) / dn);
    }
    return coeffs;
}

double P_series_tail_bound(const StripParams& p, std::size_t n_terms, double r)
{
    if (!(r >= 0.0 && r < 1.0)) {
        throw DomainError("P_series_tail_bound requires 0 <= r < 1");
    }
    const double n1 = static_cast<double>(n_terms + 1);
    return 2.0 * p.width() / kPi * std::pow(r, n1) / (n1 * (1.0 - r));
}

std::size_t P_series_terms_for(const StripParams& p, double r, double tolerance)
{
    if (!(tolerance > 0.0)) {
        throw ParameterError("tolerance must be positive");
    }
    std::size_t n = 1;
    while (P_series_tail_bound(p, n, r) > tolerance) {
        n *= 2;
    }
    // bisect back down to the smallest sufficient N
    std::size_t lo = n / 2;
    while (lo + 1 < n) {
        const std::size_t mid = lo + (n - lo) / 2;
        if (P_series_tail_bound(p, mid, r) > tolerance) {
            lo = mid;
        } else {
            n = mid;
        }
    }
    return n;
}

double strip_margin(const StripParams& p, Complex w) noexcept
{
    return std::min(w.real() - p.alpha(), p.beta() - w.real());
}

bool strip_contains(const StripParams& p, Complex w, double margin)
{
    return p.alpha() + margin < w.real() && w.real() < p.beta() - margin;
}

} // namespace preschwarz
