#include "preschwarz/functions.hpp"

#include "preschwarz/errors.hpp"
#include "preschwarz/parallel.hpp"
#include "preschwarz/power_series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace preschwarz {

namespace {

constexpr std::size_t kOriginSeriesTerms = 12;

Complex horner(const std::vector<Complex>& c, Complex z)
{
    Complex acc{0.0, 0.0};
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

void require_critical_free(Complex q, Complex q_prime, Complex z)
{
    if (std::abs(q) < kCriticalPointTolerance * (1.0 + std::abs(q_prime))) {
        throw CriticalPointError("z f'/f vanishes at z = " + std::to_string(z.real()) + "+" +
                                 std::to_string(z.imag()) + "i");
    }
}

// Builds a series model from a driver, doubling n_terms until the target
// radius is certified or kMaxTerms is reached.
template <typename CoeffsFor>
std::vector<Complex> grow_series(SeriesOptions opts, CoeffsFor&& coeffs_for)
{
    if (opts.n_terms < 2) {
        throw ParameterError("n_terms must be at least 2");
    }
    std::size_t n = opts.n_terms;
    for (;;) {
        auto coeffs = coeffs_for(n);
        std::vector<Complex> padded{{0.0, 0.0}};
        padded.insert(padded.end(), coeffs.begin(), coeffs.end());
        if (opts.target_radius <= 0.0 || n >= kMaxTerms ||
            series::certified_radius(padded) >= opts.target_radius) {
            return coeffs;
        }
        n = std::min(2 * n, kMaxTerms);
    }
}

// --- rotated driver Q(z) = 1 + c Log((1 - e z)/(1 - conj(e) z)) -------------

Complex rotated_Q(const StripParams& p, Complex z)
{
    const Complex e = p.rotation();
    return 1.0 + p.log_factor() * principal_log((1.0 - e * z) / (1.0 - std::conj(e) * z));
}

Complex rotated_Q_prime(const StripParams& p, Complex z)
{
    const Complex e = p.rotation();
    const Complex eb = std::conj(e);
    return p.log_factor() * (eb - e) / ((1.0 - e * z) * (1.0 - eb * z));
}

// --- V sample: g(z) = z/f(z) with g - z g' = P(t z^2) ----------------------

struct VSampleForms {
    StripParams params;
    double rho; // sqrt(t)
    Complex half_rotation; // e^{i phi / 2}

    // base function g_1 at u = rho z
    [[nodiscard]] Complex g_base(Complex u) const
    {
        const Complex e = params.rotation();
        const Complex s = half_rotation;
        const Complex u2 = u * u;
        return 1.0 + params.log_factor() *
                         (-principal_log(1.0 - u2) + principal_log(1.0 - e * u2) -
                          2.0 * u * std::atanh(u) + 2.0 * s * u * std::atanh(s * u));
    }
    [[nodiscard]] Complex g_base_prime(Complex u) const
    {
        const Complex s = half_rotation;
        return 2.0 * params.log_factor() * (s * std::atanh(s * u) - std::atanh(u));
    }
    [[nodiscard]] Complex g(Complex z) const { return g_base(rho * z); }
    [[nodiscard]] Complex g_prime(Complex z) const { return rho * g_base_prime(rho * z); }
    [[nodiscard]] Complex Q(Complex z) const { return eval_P(params, DiscPoint(rho * rho * z * z)); }
    [[nodiscard]] Complex Q_prime(Complex z) const
    {
        return 2.0 * rho * rho * z * eval_P_prime(params, DiscPoint(rho * rho * z * z));
    }
};

int winding_number(const VSampleForms& forms, double radius)
{
    for (std::size_t n = 1024; n <= (std::size_t{1} << 20); n *= 2) {
        Complex prev = forms.g_base(forms.rho * radius);
        double total = 0.0;
        bool resolved = true;
        for (std::size_t j = 1; j <= n; ++j) {
            const double theta = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n);
            const Complex cur = forms.g_base(std::polar(forms.rho * radius, theta));
            if (std::abs(cur) < kSingularityTolerance) {
                throw ConstructionError("g = z/f vanishes on the test circle");
            }
            const double step = std::arg(cur / prev);
            if (std::abs(step) > 0.5) {
                resolved = false;
                break;
            }
            total += step;
            prev = cur;
        }
        if (resolved) {
            return static_cast<int>(std::lround(total / (2.0 * kPi)));
        }
    }
    throw ConstructionError("argument principle did not resolve the winding of z/f");
}

VSampleForms v_sample_forms(const StripParams& p, double schwarz_scale)
{
    if (!(schwarz_scale > 0.0 && schwarz_scale <= 1.0)) {
        throw ParameterError("Schwarz scale t in w(z) = t z^2 must lie in (0, 1]");
    }
    return {p, std::sqrt(schwarz_scale), unit_turn(0.5 * p.turn())};
}

double test_radius_for(double schwarz_scale)
{
    return schwarz_scale < 1.0 ? 1.0 : kVSampleTestRadius;
}

Complex expm1_complex(Complex z)
{
    if (std::abs(z) < kSeriesNearOrigin) {
        // z + z^2/2 + ... + z^8/8!
        Complex acc{0.0, 0.0};
        double fact = 1.0;
        std::vector<Complex> c{{0.0, 0.0}};
        for (int n = 1; n <= 8; ++n) {
            fact *= n;
            c.emplace_back(1.0 / fact, 0.0);
        }
        return horner(c, z);
    }
    return std::exp(z) - 1.0;
}

} // namespace

AnalyticModel extremal_S(const StripParams& p, SeriesOptions opts)
{
    auto coeffs = grow_series(opts, [&](std::size_t n) {
        const auto driver = P_series_coeffs(p, n);
        return series::starlike_from_driver(driver, n);
    });

    ClosedForms closed;
    closed.pre_schwarzian = [p](Complex z) {
        const DiscPoint d(z);
        const Complex P = eval_P(p, d);
        const Complex dP = eval_P_prime(p, d);
        require_critical_free(P, dP, z);
        return eval_P_difference_quotient(p, d) + dP / P;
    };
    closed.starlike_quotient = [p](Complex z) { return eval_P(p, DiscPoint(z)); };

    return AnalyticModel(AnalyticModel::Kind::Series, {"extremal", p.alpha(), p.beta(), {}},
                         std::move(coeffs), std::move(closed));
}

std::vector<Complex> rotated_driver_coeffs(const StripParams& p, std::size_t n)
{
    std::vector<Complex> d;
    d.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const double dk = static_cast<double>(k);
        // c (e^{-ik phi} - e^{ik phi}) / k = ((beta-alpha)/pi) 2 sin(k phi) / k
        d.emplace_back(p.width() / kPi * 2.0 * unit_turn(dk * p.turn()).imag() / dk, 0.0);
    }
    return d;
}

AnalyticModel extremal_S_rotated(const StripParams& p, SeriesOptions opts)
{
    auto coeffs = grow_series(opts, [&](std::size_t n) {
        const auto driver = rotated_driver_coeffs(p, n);
        return series::starlike_from_driver(driver, n);
    });

    ClosedForms closed;
    closed.pre_schwarzian = [p](Complex z) {
        const DiscPoint d(z);
        const Complex Q = rotated_Q(p, z);
        const Complex dQ = rotated_Q_prime(p, z);
        require_critical_free(Q, dQ, z);
        Complex quotient;
        if (std::abs(z) < kSeriesNearOrigin) {
            quotient = horner(rotated_driver_coeffs(p, kOriginSeriesTerms), z);
        } else {
            quotient = (Q - 1.0) / z;
        }
        return quotient + dQ / Q;
    };
    closed.starlike_quotient = [p](Complex z) { return rotated_Q(p, DiscPoint(z).value()); };

    return AnalyticModel(AnalyticModel::Kind::Series,
                         {"extremal-rotated", p.alpha(), p.beta(), {}}, std::move(coeffs),
                         std::move(closed));
}

std::vector<Complex> v_sample_g_coeffs(const StripParams& p, std::size_t n, double schwarz_scale)
{
    std::vector<Complex> b(n + 1, Complex{0.0, 0.0});
    b[0] = 1.0;
    const auto drivers = P_series_coeffs(p, std::max<std::size_t>(1, n / 2));
    double scale_power = 1.0;
    for (std::size_t k = 1; 2 * k <= n; ++k) {
        scale_power *= schwarz_scale;
        const double denom = 1.0 - 2.0 * static_cast<double>(k);
        b[2 * k] = scale_power * drivers[k - 1] / denom;
    }
    return b;
}

int v_sample_zero_count(const StripParams& p, double schwarz_scale, double radius)
{
    return winding_number(v_sample_forms(p, schwarz_scale), radius);
}

AnalyticModel sample_V_member(const StripParams& p, double schwarz_scale, SeriesOptions opts)
{
    const VSampleForms forms = v_sample_forms(p, schwarz_scale);
    const double test_radius = test_radius_for(schwarz_scale);
    const int zeros = winding_number(forms, test_radius);
    if (zeros != 0) {
        throw ConstructionError("V sample with w(z) = " + std::to_string(schwarz_scale) +
                                " z^2: z/f has " + std::to_string(zeros) +
                                " zero(s) inside |z| < " + std::to_string(test_radius) +
                                ", so f has poles in the disc");
    }

    auto coeffs = grow_series(opts, [&](std::size_t n) {
        const auto g = v_sample_g_coeffs(p, n, schwarz_scale);
        return series::reciprocal(g, n); // c_j becomes a_{j+1}
    });

    ClosedForms closed;
    closed.f = [forms](Complex z) { return z / forms.g(z); };
    closed.f1 = [forms](Complex z) {
        const Complex g = forms.g(z);
        return forms.Q(z) / (g * g);
    };
    closed.f2 = [forms](Complex z) {
        const Complex g = forms.g(z);
        return (forms.Q_prime(z) - 2.0 * forms.Q(z) * forms.g_prime(z) / g) / (g * g);
    };
    closed.pre_schwarzian = [forms](Complex z) {
        const Complex Q = forms.Q(z);
        const Complex dQ = forms.Q_prime(z);
        require_critical_free(Q, dQ, z);
        return dQ / Q - 2.0 * forms.g_prime(z) / forms.g(z);
    };
    closed.starlike_quotient = [forms](Complex z) { return forms.Q(z) / forms.g(z); };
    closed.v_quotient = [forms](Complex z) { return forms.Q(z); };

    return AnalyticModel(AnalyticModel::Kind::Series,
                         {"v-sample", p.alpha(), p.beta(), schwarz_scale}, std::move(coeffs),
                         std::move(closed));
}

double v_sample_schwarz_scale(const StripParams& p)
{
    double t = 1.0;
    for (int halvings = 0; halvings <= 40; ++halvings, t *= 0.5) {
        if (v_sample_zero_count(p, t, test_radius_for(t)) == 0) {
            return t;
        }
    }
    throw ConstructionError("no Schwarz scale makes z/f zero-free");
}

AnalyticModel sample_V_member(const StripParams& p, SeriesOptions opts)
{
    return sample_V_member(p, v_sample_schwarz_scale(p), opts);
}

const std::vector<std::string>& catalog_names()
{
    static const std::vector<std::string> names{"identity", "koebe", "cayley_like", "exp_like"};
    return names;
}

AnalyticModel catalog(const std::string& name, std::size_t n_terms)
{
    n_terms = std::max<std::size_t>(1, n_terms);
    ClosedForms c;
    std::vector<Complex> coeffs;
    if (name == "identity") {
        coeffs = {1.0};
        c.f = [](Complex z) { return z; };
        c.f1 = [](Complex) { return Complex{1.0, 0.0}; };
        c.f2 = [](Complex) { return Complex{0.0, 0.0}; };
        c.pre_schwarzian = [](Complex) { return Complex{0.0, 0.0}; };
        c.starlike_quotient = [](Complex) { return Complex{1.0, 0.0}; };
        c.v_quotient = [](Complex) { return Complex{1.0, 0.0}; };
    } else if (name == "koebe") {
        for (std::size_t n = 1; n <= n_terms; ++n) {
            coeffs.emplace_back(static_cast<double>(n), 0.0);
        }
        c.f = [](Complex z) { return z / ((1.0 - z) * (1.0 - z)); };
        c.f1 = [](Complex z) { return (1.0 + z) / std::pow(1.0 - z, 3); };
        c.f2 = [](Complex z) { return (4.0 + 2.0 * z) / std::pow(1.0 - z, 4); };
        c.pre_schwarzian = [](Complex z) { return (4.0 + 2.0 * z) / ((1.0 - z) * (1.0 + z)); };
        c.starlike_quotient = [](Complex z) { return (1.0 + z) / (1.0 - z); };
        c.v_quotient = [](Complex z) { return (1.0 - z) * (1.0 + z); };
    } else if (name == "cayley_like") {
        coeffs.assign(n_terms, Complex{1.0, 0.0});
        c.f = [](Complex z) { return z / (1.0 - z); };
        c.f1 = [](Complex z) { return 1.0 / ((1.0 - z) * (1.0 - z)); };
        c.f2 = [](Complex z) { return 2.0 / std::pow(1.0 - z, 3); };
        c.pre_schwarzian = [](Complex z) { return 2.0 / (1.0 - z); };
        c.starlike_quotient = [](Complex z) { return 1.0 / (1.0 - z); };
        c.v_quotient = [](Complex) { return Complex{1.0, 0.0}; };
    } else if (name == "exp_like") {
        double fact = 1.0;
        for (std::size_t n = 1; n <= n_terms; ++n) {
            fact *= static_cast<double>(n);
            coeffs.emplace_back(1.0 / fact, 0.0);
        }
        c.f = [](Complex z) { return expm1_complex(z); };
        c.f1 = [](Complex z) { return std::exp(z); };
        c.f2 = [](Complex z) { return std::exp(z); };
        c.pre_schwarzian = [](Complex) { return Complex{1.0, 0.0}; };
        c.starlike_quotient = [](Complex z) { return z * std::exp(z) / expm1_complex(z); };
        c.v_quotient = [](Complex z) {
            const Complex q = z / expm1_complex(z);
            return q * q * std::exp(z);
        };
    } else {
        throw UnknownFunctionError("unknown catalog function '" + name + "'");
    }
    // identity is an exact polynomial; the other series are truncations
    const std::optional<double> radius = name == "identity" ? std::optional(1.0) : std::nullopt;
    return AnalyticModel(AnalyticModel::Kind::Catalog, {name, {}, {}, {}}, std::move(coeffs),
                         std::move(c), radius);
}

void DiscSampling::validate() const
{
    if (rings < 1 || angles < 1) {
        throw ParameterError("membership grid needs at least one ring and one angle");
    }
    if (!(max_radius > 0.0 && max_radius < 1.0)) {
        throw ParameterError("membership grid radius must lie in (0, 1)");
    }
}

std::string to_string(FunctionClass c)
{
    return c == FunctionClass::S ? "S" : "V";
}

namespace {

template <typename Quotient>
MembershipReport check_membership(FunctionClass cls, const StripParams& p,
                                  const DiscSampling& grid, Quotient&& quotient)
{
    grid.validate();
    const std::size_t n = grid.size();
    std::vector<Complex> points(n);
    points[0] = {0.0, 0.0};
    for (int k = 1; k <= grid.rings; ++k) {
        const double r = grid.max_radius * static_cast<double>(k) / grid.rings;
        for (int j = 0; j < grid.angles; ++j) {
            const double theta = 2.0 * kPi * static_cast<double>(j) / grid.angles;
            points[1 + static_cast<std::size_t>(k - 1) * grid.angles + j] = std::polar(r, theta);
        }
    }
    std::vector<double> margins(n);
    parallel_for(n, configured_thread_count(),
                 [&](std::size_t i) { margins[i] = strip_margin(p, quotient(points[i])); });

    double worst = std::numeric_limits<double>::infinity();
    Complex worst_point{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        // NaN compares false; treat it as a violation
        if (std::isnan(margins[i])) {
            worst = -std::numeric_limits<double>::infinity();
            worst_point = points[i];
            break;
        }
        if (margins[i] < worst) {
            worst = margins[i];
            worst_point = points[i];
        }
    }
    return {cls, p, grid, worst > 0.0, worst, worst_point};
}

} // namespace

MembershipReport check_membership_S(const AnalyticModel& model, const StripParams& p,
                                    const DiscSampling& grid)
{
    return check_membership(FunctionClass::S, p, grid,
                            [&](Complex z) { return model.starlike_quotient(z); });
}

MembershipReport check_membership_V(const AnalyticModel& model, const StripParams& p,
                                    const DiscSampling& grid)
{
    return check_membership(FunctionClass::V, p, grid,
                            [&](Complex z) { return model.v_quotient(z); });
}

} // namespace preschwarz
