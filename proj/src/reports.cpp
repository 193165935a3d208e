#include "preschwarz/reports.hpp"

#include <fmt/format.h>

namespace preschwarz {

using nlohmann::json;

namespace {

json optional_number(const std::optional<double>& v)
{
    return v ? json(*v) : json(nullptr);
}

json levels_json(const std::vector<LevelMax>& levels)
{
    json out = json::array();
    for (const auto& l : levels) {
        out.push_back({l.radius, l.max_value});
    }
    return out;
}

json entry_json(const SharpnessEntry& e)
{
    return {
        {"membership", to_json(e.membership)},
        {"norm", e.norm ? to_json(*e.norm) : json(nullptr)},
        {"ratio", optional_number(e.ratio)},
    };
}

} // namespace

json to_json(Complex z)
{
    return json::array({z.real(), z.imag()});
}

json to_json(const StripParams& p)
{
    return {{"alpha", p.alpha()}, {"beta", p.beta()}, {"phi", p.phi()}};
}

json to_json(const GridSpec& g)
{
    return {
        {"radius_levels", g.radius_levels}, {"angles", g.angles},
        {"refine_rounds", g.refine_rounds}, {"refine_shrink", g.refine_shrink},
        {"radius_cap", g.radius_cap},
    };
}

json to_json(const DiscSampling& g)
{
    return {{"rings", g.rings}, {"angles", g.angles}, {"max_radius", g.max_radius}};
}

json to_json(const NormEstimate& e)
{
    return {
        {"value", e.value},
        {"argmax", to_json(e.argmax)},
        {"per_level_max", levels_json(e.per_level_max)},
        {"uncertainty", e.uncertainty},
        {"evaluations", e.evaluations},
        {"skipped_critical", e.skipped_critical},
    };
}

NormEstimate norm_estimate_from_json(const json& doc)
{
    NormEstimate e;
    e.value = doc.at("value").get<double>();
    const auto& am = doc.at("argmax");
    e.argmax = {am.at(0).get<double>(), am.at(1).get<double>()};
    for (const auto& l : doc.at("per_level_max")) {
        e.per_level_max.push_back({l.at(0).get<double>(), l.at(1).get<double>()});
    }
    e.uncertainty = doc.at("uncertainty").get<double>();
    e.evaluations = doc.at("evaluations").get<std::size_t>();
    e.skipped_critical = doc.at("skipped_critical").get<std::size_t>();
    return e;
}

json to_json(const BoundReport& r)
{
    return {
        {"params", to_json(r.params)},
        {"theorem1", r.theorem1},
        {"theoremA", to_json(r.theoremA)},
        {"theoremB", to_json(r.theoremB)},
        {"theoremA_im_abs", r.theoremA_im_abs},
        {"theoremB_im_abs", r.theoremB_im_abs},
    };
}

json to_json(const MembershipReport& r)
{
    return {
        {"class_name", to_string(r.function_class)},
        {"params", to_json(r.params)},
        {"grid", to_json(r.grid)},
        {"verdict", r.verdict},
        {"worst_margin", r.worst_margin},
        {"worst_point", to_json(r.worst_point)},
    };
}

json to_json(const SharpnessReport& r)
{
    return {
        {"params", to_json(r.params)},
        {"grid", to_json(r.grid)},
        {"bound", r.bound},
        {"extremal", entry_json(r.extremal)},
        {"rotated", entry_json(r.rotated)},
        {"norm_extremal", r.extremal.norm ? json(r.extremal.norm->value) : json(nullptr)},
        {"norm_rotated", r.rotated.norm ? json(r.rotated.norm->value) : json(nullptr)},
        {"ratio_extremal", optional_number(r.extremal.ratio)},
        {"ratio_rotated", optional_number(r.rotated.ratio)},
        {"violation_flag", r.violation_flag},
    };
}

json to_json(const FinitenessReport& r)
{
    return {
        {"params", to_json(r.params)},
        {"function", r.function},
        {"schwarz_scale", r.schwarz_scale ? json(*r.schwarz_scale) : json(nullptr)},
        {"angles", r.angles},
        {"membership", to_json(r.membership)},
        {"levels", levels_json(r.levels)},
        {"skipped_critical", r.skipped_critical},
        {"bounded_verdict", r.bounded_verdict},
    };
}

std::string csv_number(double v)
{
    return fmt::format("{:.17g}", v);
}

std::string level_trace_csv(const std::vector<LevelMax>& levels)
{
    std::string out = "radius,max_hyperbolic_quantity\n";
    for (const auto& l : levels) {
        out += csv_number(l.radius) + "," + csv_number(l.max_value) + "\n";
    }
    return out;
}

std::string bound_csv(const BoundReport& r)
{
    return "alpha,beta,phi,theorem1,theoremA_re,theoremA_im,theoremB_re,theoremB_im,"
           "theoremA_im_abs,theoremB_im_abs\n" +
           fmt::format("{},{},{},{},{},{},{},{},{},{}\n", csv_number(r.params.alpha()),
                       csv_number(r.params.beta()), csv_number(r.params.phi()),
                       csv_number(r.theorem1), csv_number(r.theoremA.real()),
                       csv_number(r.theoremA.imag()), csv_number(r.theoremB.real()),
                       csv_number(r.theoremB.imag()), csv_number(r.theoremA_im_abs),
                       csv_number(r.theoremB_im_abs));
}

std::string membership_csv(const MembershipReport& r)
{
    return "class_name,alpha,beta,verdict,worst_margin,worst_point_re,worst_point_im\n" +
           fmt::format("{},{},{},{},{},{},{}\n", to_string(r.function_class),
                       csv_number(r.params.alpha()), csv_number(r.params.beta()),
                       r.verdict ? "true" : "false", csv_number(r.worst_margin),
                       csv_number(r.worst_point.real()), csv_number(r.worst_point.imag()));
}

std::string sharpness_csv(const SharpnessReport& r)
{
    auto cell = [](const std::optional<double>& v) { return v ? csv_number(*v) : std::string(); };
    auto norm = [](const SharpnessEntry& e) {
        return e.norm ? std::optional<double>(e.norm->value) : std::nullopt;
    };
    return "alpha,beta,phi,bound,norm_extremal,ratio_extremal,norm_rotated,ratio_rotated,"
           "violation_flag\n" +
           fmt::format("{},{},{},{},{},{},{},{},{}\n", csv_number(r.params.alpha()),
                       csv_number(r.params.beta()), csv_number(r.params.phi()),
                       csv_number(r.bound), cell(norm(r.extremal)), cell(r.extremal.ratio),
                       cell(norm(r.rotated)), cell(r.rotated.ratio),
                       r.violation_flag ? "true" : "false");
}

} // namespace preschwarz
