#include "preschwarz/power_series.hpp"

#include "preschwarz/errors.hpp"

#include <algorithm>
#include <cmath>

namespace preschwarz::series {

Jet evaluate(std::span<const Complex> c, Complex z) noexcept
{
    Complex v{0.0, 0.0};
    Complex d1{0.0, 0.0};
    Complex d2{0.0, 0.0};
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        d2 = d2 * z + 2.0 * d1;
        d1 = d1 * z + v;
        v = v * z + *it;
    }
    return {v, d1, d2};
}

std::vector<Complex> reciprocal(std::span<const Complex> g, std::size_t n)
{
    if (g.empty() || g[0] == Complex{0.0, 0.0}) {
        throw DomainError("series reciprocal requires a nonzero constant term");
    }
    std::vector<Complex> r(n, Complex{0.0, 0.0});
    if (n == 0) {
        return r;
    }
    const Complex inv0 = 1.0 / g[0];
    r[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        Complex acc{0.0, 0.0};
        const std::size_t top = std::min(k, g.size() - 1);
        for (std::size_t j = 1; j <= top; ++j) {
            acc += g[j] * r[k - j];
        }
        r[k] = -acc * inv0;
    }
    return r;
}

std::vector<Complex> starlike_from_driver(std::span<const Complex> driver, std::size_t n_terms)
{
    std::vector<Complex> a(n_terms, Complex{0.0, 0.0});
    if (n_terms == 0) {
        return a;
    }
    a[0] = 1.0;
    for (std::size_t n = 2; n <= n_terms; ++n) {
        Complex acc{0.0, 0.0};
        const std::size_t top = std::min(n - 1, driver.size());
        for (std::size_t k = 1; k <= top; ++k) {
            acc += driver[k - 1] * a[n - k - 1];
        }
        a[n - 1] = acc / static_cast<double>(n - 1);
    }
    return a;
}

double certified_radius(std::span<const Complex> c, double tolerance)
{
    const std::size_t n = c.size() - (c.empty() ? 0 : 1);
    if (n == 0) {
        return 1.0;
    }
    double tail_scale = 0.0;
    for (std::size_t k = n / 2 + 1; k <= n; ++k) {
        tail_scale = std::max(tail_scale, std::abs(c[k]));
    }
    if (tail_scale == 0.0) {
        return 1.0;
    }
    const double nn = static_cast<double>(n);
    auto tail = [&](double r) {
        return std::log(tail_scale) + 2.0 * std::log(nn + 1.0) + (nn - 1.0) * std::log(r) -
               3.0 * std::log1p(-r);
    };
    const double target = std::log(tolerance);
    double lo = 0.0;
    double hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (tail(mid) <= target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

} // namespace preschwarz::series
