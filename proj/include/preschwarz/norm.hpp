#pragma once

#include "preschwarz/functions.hpp"
#include "preschwarz/model.hpp"
#include "preschwarz/strip_map.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace preschwarz {

/// Default cap on the search radius, 1 - 2^-12.
inline constexpr double kDefaultRadiusCap = 1.0 - 1.0 / 4096.0;

/// Polar search grid for the hyperbolic sup-norm.
///
/// Base grid: the origin plus circles r_k = 1 - 2^-k (k = 1..radius_levels)
/// with `angles` equally spaced points theta_j = 2 pi j / angles. Each
/// refinement round evaluates a (2m+1) x (2m+1) polar patch around the current
/// argmax and then shrinks the patch by refine_shrink.
struct GridSpec {
    int radius_levels = 10;
    int angles = 128;
    int refine_rounds = 3;
    double refine_shrink = 0.25;
    double radius_cap = kDefaultRadiusCap;

    /// Throws ParameterError on K < 1, M < 8, shrink outside (0,1) or a top
    /// radius above radius_cap.
    void validate() const;
    [[nodiscard]] double radius(int level) const noexcept; ///< r_k; level 0 is the origin
    [[nodiscard]] double max_radius() const noexcept { return radius(radius_levels); }
};

/// Half-width in patch steps of a refinement patch (patch is (2m+1)^2 points).
inline constexpr int kRefinePatchHalfWidth = 8;

struct LevelMax {
    double radius;
    double max_value;

    friend bool operator==(const LevelMax&, const LevelMax&) = default;
};

/// Grid estimate of ||f|| = sup (1-|z|^2) |f''/f'|.
///
/// `value` is the largest evaluated sample, hence a lower bound for the
/// supremum up to rounding. `uncertainty` is the largest jump between
/// neighbouring samples of the finest patch: a resolution indicator only.
struct NormEstimate {
    double value = 0.0;
    Complex argmax{0.0, 0.0};
    std::vector<LevelMax> per_level_max;
    double uncertainty = 0.0;
    std::size_t evaluations = 0;
    std::size_t skipped_critical = 0;

    friend bool operator==(const NormEstimate&, const NormEstimate&) = default;
};

/// f''/f' at z (closed form when the model has one). Throws CriticalPointError.
[[nodiscard]] Complex preschwarzian(const AnalyticModel& model, DiscPoint z);

/// (1-|z|^2) |f''(z)/f'(z)|.
[[nodiscard]] double hyperbolic_quantity(const AnalyticModel& model, DiscPoint z);

/// Deterministic grid search for ||f||. Critical points of f' are skipped and
/// counted; any other evaluation error propagates. Throws TruncationError when
/// the grid leaves the model's evaluation radius.
[[nodiscard]] NormEstimate estimate_norm(const AnalyticModel& model, const GridSpec& grid);
[[nodiscard]] NormEstimate estimate_norm(const AnalyticModel& model, const GridSpec& grid,
                                         std::size_t threads);

/// Closed-form bound for S(alpha, beta):
/// (2(beta-alpha)/pi) sqrt(4 sin^2(phi/2) + 2 pi^2) - 4 sin(phi/2) / sqrt(4 sin^2(phi/2) + 2 pi^2).
[[nodiscard]] double bound_theorem1(const StripParams& p);

/// (2(beta-alpha)/pi)(1 - e^{2 pi i (1-alpha)/(beta-alpha)}), complex-valued as stated.
[[nodiscard]] Complex bound_theoremA(const StripParams& p);
/// (3(beta-alpha)/pi)(1 - e^{2 pi i (1-alpha)/(beta-alpha)}); exactly 1.5 * bound_theoremA.
[[nodiscard]] Complex bound_theoremB(const StripParams& p);

struct BoundReport {
    StripParams params;
    double theorem1;
    Complex theoremA;
    Complex theoremB;
    double theoremA_im_abs;
    double theoremB_im_abs;
};

[[nodiscard]] BoundReport bound_report(const StripParams& p);

/// Relative slack before a norm above the bound counts as a violation.
inline constexpr double kViolationSlack = 1e-6;

struct SharpnessEntry {
    MembershipReport membership;
    /// Set only when the membership verdict is true.
    std::optional<NormEstimate> norm;
    std::optional<double> ratio; ///< norm / bound
};

struct SharpnessReport {
    StripParams params;
    GridSpec grid;
    double bound;
    SharpnessEntry extremal;
    SharpnessEntry rotated;
    /// Some class member's norm exceeds bound + 1e-6 |bound|.
    bool violation_flag;
};

/// Estimates the norms of both extremal functions and compares them with the
/// closed-form bound. Models failing check_membership_S are reported but not
/// normed. Reports arithmetic only; never throws on a violation.
[[nodiscard]] SharpnessReport sharpness_report(const StripParams& p, const GridSpec& grid,
                                               std::size_t n_terms = kDefaultTerms);

/// Relative spread below which the last three level maxima count as stable.
inline constexpr double kStabilizationTolerance = 0.05;

struct FinitenessReport {
    StripParams params;
    std::string function;
    std::optional<double> schwarz_scale; ///< t in w(z) = t z^2 for V samples
    int angles;
    MembershipReport membership;
    std::vector<LevelMax> levels;
    std::size_t skipped_critical = 0;
    bool bounded_verdict;
};

/// Level maxima of (1-|z|^2)|f''/f'| on |z| = 1 - 2^-k, k = 1..levels, and a
/// stabilization verdict: the last three maxima are non-increasing or within
/// 5% of each other. Throws PreconditionError unless the model passes
/// check_membership_V for p.
[[nodiscard]] FinitenessReport finiteness_experiment(const StripParams& p,
                                                     const AnalyticModel& model, int levels,
                                                     int angles = 256);

/// The stabilization rule applied to a sequence of level maxima.
[[nodiscard]] bool stabilization_verdict(const std::vector<LevelMax>& levels);

} // namespace preschwarz
