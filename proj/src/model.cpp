#include "preschwarz/model.hpp"

#include "preschwarz/errors.hpp"
#include "preschwarz/power_series.hpp"

#include <cmath>
#include <string>

namespace preschwarz {

AnalyticModel::AnalyticModel(Kind kind, ModelOrigin origin, std::vector<Complex> coefficients,
                             ClosedForms closed, std::optional<double> certified_radius)
    : kind_(kind)
    , origin_(std::move(origin))
    , coefficients_(std::move(coefficients))
    , closed_(std::move(closed))
{
    if (coefficients_.empty() || coefficients_.front() != Complex{1.0, 0.0}) {
        throw ParameterError("model '" + origin_.kind +
                             "' is not normalized: coefficient a_1 must equal 1");
    }
    padded_.reserve(coefficients_.size() + 1);
    padded_.push_back({0.0, 0.0});
    padded_.insert(padded_.end(), coefficients_.begin(), coefficients_.end());
    radius_ = certified_radius ? *certified_radius : series::certified_radius(padded_);
}

void AnalyticModel::require_series_radius(Complex z) const
{
    if (std::abs(z) > radius_) {
        throw TruncationError("model '" + origin_.kind + "': |z| = " +
                              std::to_string(std::abs(z)) +
                              " exceeds the certified series radius " + std::to_string(radius_) +
                              " (n_terms = " + std::to_string(n_terms()) + ")");
    }
}

Complex AnalyticModel::f(Complex z) const
{
    if (closed_.f) {
        return closed_.f(z);
    }
    require_series_radius(z);
    return series::evaluate(padded_, z).value;
}

Complex AnalyticModel::f1(Complex z) const
{
    if (closed_.f1) {
        return closed_.f1(z);
    }
    require_series_radius(z);
    return series::evaluate(padded_, z).first;
}

Complex AnalyticModel::f2(Complex z) const
{
    if (closed_.f2) {
        return closed_.f2(z);
    }
    require_series_radius(z);
    return series::evaluate(padded_, z).second;
}

Complex AnalyticModel::pre_schwarzian(Complex z) const
{
    if (closed_.pre_schwarzian) {
        return closed_.pre_schwarzian(z);
    }
    Complex d1;
    Complex d2;
    if (closed_.f1 && closed_.f2) {
        d1 = closed_.f1(z);
        d2 = closed_.f2(z);
    } else {
        require_series_radius(z);
        const auto jet = series::evaluate(padded_, z);
        d1 = jet.first;
        d2 = jet.second;
    }
    if (std::abs(d1) < kCriticalPointTolerance * (1.0 + std::abs(d2))) {
        throw CriticalPointError("f' vanishes numerically at z = " + std::to_string(z.real()) +
                                 "+" + std::to_string(z.imag()) + "i");
    }
    return d2 / d1;
}

Complex AnalyticModel::starlike_quotient(Complex z) const
{
    if (z == Complex{0.0, 0.0}) {
        return {1.0, 0.0};
    }
    if (closed_.starlike_quotient) {
        return closed_.starlike_quotient(z);
    }
    const Complex fz = f(z);
    if (std::abs(fz) < kSingularityTolerance) {
        throw SingularityError("f vanishes at a nonzero grid point");
    }
    return z * f1(z) / fz;
}

Complex AnalyticModel::v_quotient(Complex z) const
{
    if (z == Complex{0.0, 0.0}) {
        return {1.0, 0.0};
    }
    if (closed_.v_quotient) {
        return closed_.v_quotient(z);
    }
    const Complex fz = f(z);
    if (std::abs(fz) < kSingularityTolerance) {
        throw SingularityError("f vanishes at a nonzero grid point");
    }
    const Complex q = z / fz;
    return q * q * f1(z);
}

AnalyticModel AnalyticModel::series_only() const
{
    return AnalyticModel(Kind::Series, origin_, coefficients_, {}, radius_);
}

} // namespace preschwarz
