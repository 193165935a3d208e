#pragma once

#include "preschwarz/kernel.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace preschwarz {

/// Optional closed-form evaluators attached to a model. Any member may be empty.
struct ClosedForms {
    using Fn = std::function<Complex(Complex)>;
    Fn f;
    Fn f1;
    Fn f2;
    Fn pre_schwarzian;    ///< f''/f'; throws CriticalPointError where f' vanishes
    Fn starlike_quotient; ///< z f'/f
    Fn v_quotient;        ///< (z/f)^2 f'
};

/// Where a model came from; drives serialization only.
struct ModelOrigin {
    std::string kind; ///< catalog name, "extremal", "extremal-rotated", "v-sample" or "series"
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> schwarz_scale; ///< t in w(z) = t z^2 for V samples
};

/// A normalized analytic function f(z) = z + a_2 z^2 + ... on the unit disc.
///
/// Holds the truncated Maclaurin coefficients a_1..a_N (a_1 = 1) and, when
/// known, closed forms. Closed forms take precedence over the series. Series
/// evaluation beyond certified_radius() throws TruncationError.
///
/// Immutable after construction and safe to share across threads.
class AnalyticModel {
public:
    enum class Kind { Catalog, Series };

    /// Throws ParameterError unless coefficients is nonempty with a_1 == 1.
    AnalyticModel(Kind kind, ModelOrigin origin, std::vector<Complex> coefficients,
                  ClosedForms closed = {}, std::optional<double> certified_radius = std::nullopt);

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] const std::string& name() const noexcept { return origin_.kind; }
    [[nodiscard]] const ModelOrigin& origin() const noexcept { return origin_; }
    /// a_1..a_N.
    [[nodiscard]] const std::vector<Complex>& coefficients() const noexcept { return coefficients_; }
    [[nodiscard]] std::size_t n_terms() const noexcept { return coefficients_.size(); }
    /// Radius up to which the series (and its two derivatives) is trusted.
    [[nodiscard]] double certified_radius() const noexcept { return radius_; }

    [[nodiscard]] bool has_closed_pre_schwarzian() const noexcept
    {
        return static_cast<bool>(closed_.pre_schwarzian) ||
               (static_cast<bool>(closed_.f1) && static_cast<bool>(closed_.f2));
    }
    /// Radius up to which pre_schwarzian() can be evaluated.
    [[nodiscard]] double pre_schwarzian_radius() const noexcept
    {
        return has_closed_pre_schwarzian() ? 1.0 : radius_;
    }

    [[nodiscard]] Complex f(Complex z) const;
    [[nodiscard]] Complex f1(Complex z) const;
    [[nodiscard]] Complex f2(Complex z) const;

    /// f''/f'. Throws CriticalPointError if |f'| < 1e-12 (1 + |f''|).
    [[nodiscard]] Complex pre_schwarzian(Complex z) const;
    /// z f'/f with the limit value 1 at the origin.
    [[nodiscard]] Complex starlike_quotient(Complex z) const;
    /// (z/f)^2 f' with the limit value 1 at the origin. Throws SingularityError
    /// if |f(z)| < 1e-14 at z != 0.
    [[nodiscard]] Complex v_quotient(Complex z) const;

    /// Same coefficients with every closed form dropped.
    [[nodiscard]] AnalyticModel series_only() const;

private:
    void require_series_radius(Complex z) const;

    Kind kind_;
    ModelOrigin origin_;
    std::vector<Complex> coefficients_;
    std::vector<Complex> padded_; // 0, a_1, ..., a_N
    ClosedForms closed_;
    double radius_;
};

inline constexpr double kCriticalPointTolerance = 1e-12;
inline constexpr double kSingularityTolerance = 1e-14;

} // namespace preschwarz
