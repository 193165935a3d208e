#include "preschwarz/kernel.hpp"

#include "preschwarz/errors.hpp"

#include <boost/math/special_functions/cos_pi.hpp>
#include <boost/math/special_functions/sin_pi.hpp>

#include <cmath>
#include <string>

namespace preschwarz {

DiscPoint::DiscPoint(Complex z) : value_(z)
{
    if (!(std::abs(z) < 1.0)) {
        throw DomainError("point " + std::to_string(z.real()) + "+" +
                          std::to_string(z.imag()) + "i is not in the open unit disc");
    }
}

double DiscPoint::hyperbolic_weight() const noexcept
{
    const double r = std::abs(value_);
    return (1.0 - r) * (1.0 + r);
}

Complex principal_log(Complex z)
{
    if (z == Complex{0.0, 0.0}) {
        throw DomainError("principal_log: logarithm of zero");
    }
    double arg = std::arg(z);
    if (arg == -kPi) {
        arg = kPi;
    }
    return {std::log(std::abs(z)), arg};
}

double log_modulus_bound_outer(Complex z)
{
    if (!(std::abs(z) >= 1.0)) {
        throw DomainError("log_modulus_bound_outer requires |z| >= 1");
    }
    const double d = std::abs(z - 1.0);
    return std::sqrt(d * d + kPi * kPi);
}

double log_modulus_bound_inner(Complex z)
{
    const double m = std::abs(z);
    if (!(m > 0.0 && m < 1.0)) {
        throw DomainError("log_modulus_bound_inner requires 0 < |z| < 1");
    }
    const double d = std::abs((z - 1.0) / z);
    return std::sqrt(d * d + kPi * kPi);
}

double schwarz_pick_defect(DiscPoint w_val, Complex w_deriv, DiscPoint z)
{
    return w_val.hyperbolic_weight() / z.hyperbolic_weight() - std::abs(w_deriv);
}

Complex unit_turn(double t)
{
    // exp(2 pi i t) = cos(pi * 2t) + i sin(pi * 2t)
    const double x = 2.0 * t;
    return {boost::math::cos_pi(x), boost::math::sin_pi(x)};
}

} // namespace preschwarz
