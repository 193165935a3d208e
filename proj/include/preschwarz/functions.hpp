#pragma once

#include "preschwarz/model.hpp"
#include "preschwarz/strip_map.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace preschwarz {

inline constexpr std::size_t kDefaultTerms = 512;
inline constexpr std::size_t kMaxTerms = 8192;

/// Options shared by the series constructions.
struct SeriesOptions {
    std::size_t n_terms = kDefaultTerms;
    /// n_terms is doubled (up to kMaxTerms) until the series is certified on
    /// |z| <= target_radius. Zero disables doubling.
    double target_radius = 0.0;
};

/// Extremal function of S(alpha, beta): z f'/f = P(z), i.e.
/// f(z) = z exp(int_0^z (P(t) - 1)/t dt). Carries the closed-form
/// pre-Schwarzian (P - 1)/z + P'/P.
[[nodiscard]] AnalyticModel extremal_S(const StripParams& p, SeriesOptions opts = {});

/// Rotated extremal: z f'/f = 1 + ((beta-alpha) i / pi) Log((1 - e^{i phi} z)/(1 - e^{-i phi} z)).
/// Its driver coefficients are real, ((beta-alpha)/pi) 2 sin(k phi)/k.
[[nodiscard]] AnalyticModel extremal_S_rotated(const StripParams& p, SeriesOptions opts = {});

/// Driver coefficients ((beta-alpha)/pi) 2 sin(k phi)/k, k = 1..n, of the rotated extremal.
[[nodiscard]] std::vector<Complex> rotated_driver_coeffs(const StripParams& p, std::size_t n);

/// Coefficients b_0..b_n of g = z/f for the V(alpha, beta) sample with Schwarz
/// function w(z) = t z^2: g - z g' = P(t z^2), so b_{2k} = t^k p_k / (1 - 2k)
/// and odd b vanish.
[[nodiscard]] std::vector<Complex> v_sample_g_coeffs(const StripParams& p, std::size_t n,
                                                     double schwarz_scale);

/// Number of zeros of g = z/f (for the V sample with scale t) inside |z| < radius,
/// by the argument principle on the closed form of g.
[[nodiscard]] int v_sample_zero_count(const StripParams& p, double schwarz_scale, double radius);

/// Member of V(alpha, beta) with (z/f)^2 f' = P(t z^2).
///
/// Throws ConstructionError if g = z/f vanishes inside the test radius
/// (0.999 for t = 1, the closed unit disc for t < 1), i.e. f has a pole.
[[nodiscard]] AnalyticModel sample_V_member(const StripParams& p, double schwarz_scale,
                                            SeriesOptions opts = {});

/// Same, with t the largest of 1, 1/2, 1/4, ... for which the construction
/// succeeds.
[[nodiscard]] AnalyticModel sample_V_member(const StripParams& p, SeriesOptions opts = {});

/// Largest t in {1, 1/2, 1/4, ...} for which sample_V_member(p, t) is valid.
[[nodiscard]] double v_sample_schwarz_scale(const StripParams& p);

/// Radius inside which g = z/f of the t = 1 sample is checked for zeros.
inline constexpr double kVSampleTestRadius = 0.999;

/// Names accepted by catalog().
[[nodiscard]] const std::vector<std::string>& catalog_names();

/// Reference functions with closed forms: "identity" (z), "koebe" z/(1-z)^2,
/// "cayley_like" z/(1-z), "exp_like" e^z - 1. Throws UnknownFunctionError.
[[nodiscard]] AnalyticModel catalog(const std::string& name, std::size_t n_terms = kDefaultTerms);

/// Sample points for class-membership checks: the origin plus `rings`
/// equally spaced circles up to max_radius, `angles` points each.
struct DiscSampling {
    int rings = 100;
    int angles = 100;
    double max_radius = 0.99;

    void validate() const;
    [[nodiscard]] std::size_t size() const noexcept
    {
        return 1 + static_cast<std::size_t>(rings) * static_cast<std::size_t>(angles);
    }
};

enum class FunctionClass { S, V };

[[nodiscard]] std::string to_string(FunctionClass c);

struct MembershipReport {
    FunctionClass function_class;
    StripParams params;
    DiscSampling grid;
    bool verdict;        ///< worst_margin > 0
    double worst_margin; ///< signed distance of the Re-value to the nearest strip edge
    Complex worst_point;
};

/// Checks alpha < Re(z f'/f) < beta at every sample point.
[[nodiscard]] MembershipReport check_membership_S(const AnalyticModel& model, const StripParams& p,
                                                  const DiscSampling& grid = {});

/// Checks alpha < Re((z/f)^2 f') < beta at every sample point.
[[nodiscard]] MembershipReport check_membership_V(const AnalyticModel& model, const StripParams& p,
                                                  const DiscSampling& grid = {});

} // namespace preschwarz
