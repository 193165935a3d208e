#include "preschwarz/norm.hpp"

#include "preschwarz/errors.hpp"
#include "preschwarz/parallel.hpp"

#include <boost/math/special_functions/sin_pi.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace preschwarz {

void GridSpec::validate() const
{
    if (radius_levels < 1) {
        throw ParameterError("radius_levels must be at least 1");
    }
    if (angles < 8) {
        throw ParameterError("angles must be at least 8");
    }
    if (refine_rounds < 0) {
        throw ParameterError("refine_rounds must be nonnegative");
    }
    if (!(refine_shrink > 0.0 && refine_shrink < 1.0)) {
        throw ParameterError("refine_shrink must lie in (0, 1)");
    }
    if (!(radius_cap > 0.0 && radius_cap < 1.0)) {
        throw ParameterError("radius_cap must lie in (0, 1)");
    }
    if (max_radius() > radius_cap) {
        throw ParameterError("radius_levels = " + std::to_string(radius_levels) +
                             " puts the top circle 1 - 2^-K above the radius cap " +
                             std::to_string(radius_cap));
    }
}

double GridSpec::radius(int level) const noexcept
{
    return level <= 0 ? 0.0 : 1.0 - std::ldexp(1.0, -level);
}

Complex preschwarzian(const AnalyticModel& model, DiscPoint z)
{
    return model.pre_schwarzian(z.value());
}

double hyperbolic_quantity(const AnalyticModel& model, DiscPoint z)
{
    return z.hyperbolic_weight() * std::abs(model.pre_schwarzian(z.value()));
}

namespace {

struct Sample {
    double radius;
    double angle;
};

// NaN marks a skipped (critical or non-finite) sample.
double sample_value(const AnalyticModel& model, const Sample& s)
{
    try {
        const Complex t = model.pre_schwarzian(std::polar(s.radius, s.angle));
        const double v = (1.0 - s.radius) * (1.0 + s.radius) * std::abs(t);
        return std::isfinite(v) ? v : std::numeric_limits<double>::quiet_NaN();
    } catch (const CriticalPointError&) {
        return std::numeric_limits<double>::quiet_NaN();
    }
}

std::vector<double> evaluate_all(const AnalyticModel& model, const std::vector<Sample>& samples,
                                 std::size_t threads)
{
    std::vector<double> values(samples.size());
    parallel_for(samples.size(), threads,
                 [&](std::size_t i) { values[i] = sample_value(model, samples[i]); });
    return values;
}

struct Best {
    double value = -std::numeric_limits<double>::infinity();
    double radius = 0.0;
    double angle = 0.0;
    bool found = false;

    // lexicographic on (value, radius, angle); returns true if s became the best
    bool offer(double v, const Sample& s)
    {
        if (std::isnan(v)) {
            return false;
        }
        if (!found || v > value || (v == value && (s.radius > radius ||
                                                   (s.radius == radius && s.angle > angle)))) {
            value = v;
            radius = s.radius;
            angle = s.angle;
            found = true;
            return true;
        }
        return false;
    }
};

double max_adjacent_jump(double a, double b, double current)
{
    if (std::isnan(a) || std::isnan(b)) {
        return current;
    }
    return std::max(current, std::abs(a - b));
}

} // namespace

NormEstimate estimate_norm(const AnalyticModel& model, const GridSpec& grid)
{
    return estimate_norm(model, grid, configured_thread_count());
}

NormEstimate estimate_norm(const AnalyticModel& model, const GridSpec& grid, std::size_t threads)
{
    grid.validate();
    const double r_max = grid.max_radius();
    if (r_max > model.pre_schwarzian_radius()) {
        throw TruncationError("grid radius " + std::to_string(r_max) + " exceeds the radius " +
                              std::to_string(model.pre_schwarzian_radius()) + " where model '" +
                              model.name() + "' can be evaluated; lower radius_levels");
    }

    const int K = grid.radius_levels;
    const int M = grid.angles;
    const double dtheta = 2.0 * kPi / M;

    std::vector<Sample> base;
    base.reserve(1 + static_cast<std::size_t>(K) * M);
    base.push_back({0.0, 0.0});
    for (int k = 1; k <= K; ++k) {
        for (int j = 0; j < M; ++j) {
            base.push_back({grid.radius(k), dtheta * j});
        }
    }
    const std::vector<double> base_values = evaluate_all(model, base, threads);

    NormEstimate est;
    est.evaluations = base.size();
    Best best;
    int best_level = 0;
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (best.offer(base_values[i], base[i])) {
            best_level = i == 0 ? 0 : 1 + static_cast<int>((i - 1) / M);
        }
        if (std::isnan(base_values[i])) {
            ++est.skipped_critical;
        }
    }

    auto level_value = [&](int k, int j) {
        return k == 0 ? base_values[0] : base_values[1 + static_cast<std::size_t>(k - 1) * M + j];
    };
    for (int k = 0; k <= K; ++k) {
        const int count = k == 0 ? 1 : M;
        double level_max = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < count; ++j) {
            const double v = level_value(k, j);
            if (!std::isnan(v)) {
                level_max = std::max(level_max, v);
            }
        }
        if (std::isfinite(level_max)) {
            est.per_level_max.push_back({grid.radius(k), level_max});
        }
    }

    double uncertainty = 0.0;
    if (grid.refine_rounds == 0) {
        for (int k = 1; k <= K; ++k) {
            for (int j = 0; j < M; ++j) {
                uncertainty = max_adjacent_jump(level_value(k, j), level_value(k, (j + 1) % M),
                                                uncertainty);
                uncertainty = max_adjacent_jump(level_value(k, j),
                                                k == 1 ? base_values[0] : level_value(k - 1, j),
                                                uncertainty);
            }
        }
    }

    if (best.found && grid.refine_rounds > 0) {
        double half_r;
        if (best_level == 0) {
            half_r = grid.radius(1);
        } else if (best_level == K) {
            half_r = grid.radius(K) - grid.radius(K - 1);
        } else {
            half_r = std::max(grid.radius(best_level) - grid.radius(best_level - 1),
                              grid.radius(best_level + 1) - grid.radius(best_level));
        }
        double half_theta = best.radius == 0.0 ? kPi : dtheta;
        constexpr int m = kRefinePatchHalfWidth;
        constexpr int side = 2 * m + 1;

        for (int round = 0; round < grid.refine_rounds; ++round) {
            const double r0 = best.radius;
            const double t0 = best.angle;
            std::vector<Sample> patch;
            std::vector<int> slot(side * side, -1);
            patch.reserve(side * side);
            for (int i = -m; i <= m; ++i) {
                const double r = r0 + half_r * i / m;
                if (r < 0.0 || r > r_max) {
                    continue;
                }
                for (int j = -m; j <= m; ++j) {
                    if (r == 0.0 && j != 0) {
                        continue;
                    }
                    slot[(i + m) * side + (j + m)] = static_cast<int>(patch.size());
                    patch.push_back({r, t0 + half_theta * j / m});
                }
            }
            const std::vector<double> values = evaluate_all(model, patch, threads);
            est.evaluations += patch.size();
            for (std::size_t i = 0; i < patch.size(); ++i) {
                if (std::isnan(values[i])) {
                    ++est.skipped_critical;
                }
                best.offer(values[i], patch[i]);
            }
            if (round + 1 == grid.refine_rounds) {
                auto at = [&](int i, int j) {
                    const int s = slot[i * side + j];
                    return s < 0 ? std::numeric_limits<double>::quiet_NaN() : values[s];
                };
                for (int i = 0; i < side; ++i) {
                    for (int j = 0; j < side; ++j) {
                        if (i + 1 < side) {
                            uncertainty = max_adjacent_jump(at(i, j), at(i + 1, j), uncertainty);
                        }
                        if (j + 1 < side) {
                            uncertainty = max_adjacent_jump(at(i, j), at(i, j + 1), uncertainty);
                        }
                    }
                }
            }
            half_r *= grid.refine_shrink;
            half_theta *= grid.refine_shrink;
        }
    }

    if (best.found) {
        est.value = best.value;
        est.argmax = std::polar(best.radius, best.angle);
    }
    est.uncertainty = uncertainty;
    return est;
}

double bound_theorem1(const StripParams& p)
{
    // sin(phi/2) = sin(pi * turn)
    const double s = boost::math::sin_pi(p.turn());
    const double root = std::sqrt(4.0 * s * s + 2.0 * kPi * kPi);
    return 2.0 * p.width() / kPi * root - 4.0 * s / root;
}

namespace {

Complex theorem_ab_base(const StripParams& p)
{
    return (p.width() / kPi) * (1.0 - p.rotation());
}

} // namespace

Complex bound_theoremA(const StripParams& p)
{
    return 2.0 * theorem_ab_base(p);
}

Complex bound_theoremB(const StripParams& p)
{
    // 2 * base is exact, so this equals 1.5 * bound_theoremA bit for bit
    return 3.0 * theorem_ab_base(p);
}

BoundReport bound_report(const StripParams& p)
{
    const Complex a = bound_theoremA(p);
    const Complex b = bound_theoremB(p);
    return {p, bound_theorem1(p), a, b, std::abs(a.imag()), std::abs(b.imag())};
}

namespace {

SharpnessEntry assess(const AnalyticModel& model, const StripParams& p, const GridSpec& grid,
                      double bound)
{
    SharpnessEntry entry{check_membership_S(model, p), std::nullopt, std::nullopt};
    if (entry.membership.verdict) {
        entry.norm = estimate_norm(model, grid);
        entry.ratio = entry.norm->value / bound;
    }
    return entry;
}

bool violates(const SharpnessEntry& e, double bound)
{
    return e.norm && e.norm->value > bound + kViolationSlack * std::abs(bound);
}

} // namespace

SharpnessReport sharpness_report(const StripParams& p, const GridSpec& grid, std::size_t n_terms)
{
    grid.validate();
    const double bound = bound_theorem1(p);
    const SeriesOptions opts{n_terms, 0.0};
    SharpnessEntry extremal = assess(extremal_S(p, opts), p, grid, bound);
    SharpnessEntry rotated = assess(extremal_S_rotated(p, opts), p, grid, bound);
    const bool flag = violates(extremal, bound) || violates(rotated, bound);
    return {p, grid, bound, std::move(extremal), std::move(rotated), flag};
}

bool stabilization_verdict(const std::vector<LevelMax>& levels)
{
    if (levels.size() < 3) {
        return false;
    }
    const double a = levels[levels.size() - 3].max_value;
    const double b = levels[levels.size() - 2].max_value;
    const double c = levels[levels.size() - 1].max_value;
    if (a >= b && b >= c) {
        return true;
    }
    const double hi = std::max({a, b, c});
    const double lo = std::min({a, b, c});
    return hi == 0.0 || (hi - lo) / hi < kStabilizationTolerance;
}

FinitenessReport finiteness_experiment(const StripParams& p, const AnalyticModel& model,
                                       int levels, int angles)
{
    if (levels < 1 || angles < 8) {
        throw ParameterError("finiteness experiment needs levels >= 1 and angles >= 8");
    }
    MembershipReport membership = check_membership_V(model, p);
    if (!membership.verdict) {
        throw PreconditionError("model '" + model.name() + "' fails the V(" +
                                std::to_string(p.alpha()) + ", " + std::to_string(p.beta()) +
                                ") membership check (worst margin " +
                                std::to_string(membership.worst_margin) + ")");
    }
    auto circle_radius = [](int k) { return 1.0 - std::ldexp(1.0, -k); };
    if (circle_radius(levels) > model.pre_schwarzian_radius()) {
        throw TruncationError("finiteness levels exceed the evaluation radius of model '" +
                              model.name() + "'");
    }
    std::vector<Sample> samples;
    samples.reserve(static_cast<std::size_t>(levels) * angles);
    for (int k = 1; k <= levels; ++k) {
        for (int j = 0; j < angles; ++j) {
            samples.push_back({circle_radius(k), 2.0 * kPi * j / angles});
        }
    }
    const std::vector<double> values = evaluate_all(model, samples, configured_thread_count());

    FinitenessReport report{p, model.name(), model.origin().schwarz_scale,
                            angles, std::move(membership), {}, 0, false};
    for (int k = 1; k <= levels; ++k) {
        double level_max = 0.0;
        for (int j = 0; j < angles; ++j) {
            const double v = values[static_cast<std::size_t>(k - 1) * angles + j];
            if (std::isnan(v)) {
                ++report.skipped_critical;
            } else {
                level_max = std::max(level_max, v);
            }
        }
        report.levels.push_back({circle_radius(k), level_max});
    }
    report.bounded_verdict = stabilization_verdict(report.levels);
    return report;
}

} // namespace preschwarz
