#include "preschwarz/cli.hpp"

#include "preschwarz/errors.hpp"
#include "preschwarz/model_io.hpp"
#include "preschwarz/reports.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>

namespace preschwarz::cli {

using nlohmann::json;

namespace {

StripParams require_params(const RunConfig& cfg)
{
    if (!cfg.alpha || !cfg.beta) {
        throw ParameterError("command '" + cfg.command +
                             "' needs --alpha and --beta (class condition 0 <= alpha < 1 < beta)");
    }
    return StripParams::make(*cfg.alpha, *cfg.beta);
}

std::optional<StripParams> optional_params(const RunConfig& cfg)
{
    if (!cfg.alpha && !cfg.beta) {
        return std::nullopt;
    }
    return require_params(cfg);
}

json config_json(const RunConfig& cfg)
{
    json j{
        {"command", cfg.command},
        {"alpha", cfg.alpha ? json(*cfg.alpha) : json(nullptr)},
        {"beta", cfg.beta ? json(*cfg.beta) : json(nullptr)},
        {"output_format", cfg.output_format == OutputFormat::Json ? "json" : "csv"},
    };
    if (cfg.command == "norm" || cfg.command == "sharpness" || cfg.command == "sweep") {
        j["grid"] = to_json(cfg.grid);
        j["n_terms"] = cfg.n_terms;
    }
    if (cfg.command == "norm" || cfg.command == "membership" || cfg.command == "finiteness") {
        j["function"] = cfg.function;
        j["n_terms"] = cfg.n_terms;
    }
    if (cfg.command == "membership") {
        j["class_name"] = to_string(cfg.function_class);
        j["membership_grid"] = to_json(cfg.membership_grid);
    }
    if (cfg.command == "finiteness") {
        j["levels"] = cfg.levels;
        j["angles"] = cfg.circle_angles;
    }
    if (cfg.command == "sweep") {
        j["alphas"] = cfg.alphas;
        j["betas"] = cfg.betas;
    }
    return j;
}

std::string payload(const RunConfig& cfg, json result)
{
    json doc{{"command", cfg.command}, {"config", config_json(cfg)}, {"result", std::move(result)}};
    return doc.dump(2) + "\n";
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out)
{
    if (cfg.output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.output_path, std::ios::binary);
    if (!file || !(file << text)) {
        throw std::runtime_error("cannot write " + cfg.output_path);
    }
}

std::string run_bound(const RunConfig& cfg)
{
    const BoundReport r = bound_report(require_params(cfg));
    return cfg.output_format == OutputFormat::Csv ? bound_csv(r) : payload(cfg, to_json(r));
}

std::string run_norm(const RunConfig& cfg)
{
    const AnalyticModel model = resolve_function(cfg.function, optional_params(cfg), cfg.n_terms);
    if (!cfg.save_model_path.empty()) {
        save_model(model, cfg.save_model_path);
    }
    const NormEstimate e = estimate_norm(model, cfg.grid);
    return cfg.output_format == OutputFormat::Csv ? level_trace_csv(e.per_level_max)
                                                  : payload(cfg, to_json(e));
}

std::string run_sharpness(const RunConfig& cfg)
{
    const SharpnessReport r = sharpness_report(require_params(cfg), cfg.grid, cfg.n_terms);
    return cfg.output_format == OutputFormat::Csv ? sharpness_csv(r) : payload(cfg, to_json(r));
}

std::string run_membership(const RunConfig& cfg)
{
    const StripParams p = require_params(cfg);
    const AnalyticModel model = resolve_function(cfg.function, p, cfg.n_terms);
    const MembershipReport r = cfg.function_class == FunctionClass::S
                                   ? check_membership_S(model, p, cfg.membership_grid)
                                   : check_membership_V(model, p, cfg.membership_grid);
    return cfg.output_format == OutputFormat::Csv ? membership_csv(r) : payload(cfg, to_json(r));
}

std::string run_finiteness(const RunConfig& cfg)
{
    const StripParams p = require_params(cfg);
    const AnalyticModel model = resolve_function(cfg.function, p, cfg.n_terms);
    const FinitenessReport r = finiteness_experiment(p, model, cfg.levels, cfg.circle_angles);
    return cfg.output_format == OutputFormat::Csv ? level_trace_csv(r.levels)
                                                  : payload(cfg, to_json(r));
}

std::string run_sweep(const RunConfig& cfg)
{
    if (cfg.alphas.empty() || cfg.betas.empty()) {
        throw ParameterError("sweep needs --alphas and --betas");
    }
    const auto rows = sweep(cfg.alphas, cfg.betas, cfg.grid, cfg.n_terms);
    if (cfg.output_format == OutputFormat::Csv) {
        return sweep_csv(rows);
    }
    json arr = json::array();
    for (const auto& r : rows) {
        arr.push_back({{"alpha", r.alpha}, {"beta", r.beta}, {"phi", r.phi},
                       {"theorem1", r.theorem1}, {"norm_extremal", r.norm_extremal},
                       {"ratio", r.ratio}});
    }
    return payload(cfg, std::move(arr));
}

void add_output_options(CLI::App* sub, RunConfig& cfg)
{
    static const std::map<std::string, OutputFormat> formats{{"json", OutputFormat::Json},
                                                             {"csv", OutputFormat::Csv}};
    sub->add_option("--format", cfg.output_format, "output format: json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--output,-o", cfg.output_path, "output file (default: standard output)");
}

void add_params_options(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--alpha", cfg.alpha, "lower strip edge, 0 <= alpha < 1");
    sub->add_option("--beta", cfg.beta, "upper strip edge, beta > 1");
}

void add_grid_options(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--radius-levels,-K", cfg.grid.radius_levels,
                    "circles r_k = 1 - 2^-k, k = 1..K")
        ->capture_default_str();
    sub->add_option("--angles,-M", cfg.grid.angles, "points per circle")->capture_default_str();
    sub->add_option("--refine-rounds", cfg.grid.refine_rounds, "local refinement rounds")
        ->capture_default_str();
    sub->add_option("--refine-shrink", cfg.grid.refine_shrink, "patch shrink factor in (0,1)")
        ->capture_default_str();
}

void add_function_options(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--function,-f", cfg.function,
                    "identity | koebe | cayley_like | exp_like | extremal | extremal-rotated | "
                    "v-sample | <coefficient file>")
        ->capture_default_str();
    sub->add_option("--n-terms", cfg.n_terms, "series terms for constructed models")
        ->capture_default_str();
}

} // namespace

AnalyticModel resolve_function(const std::string& name, const std::optional<StripParams>& params,
                               std::size_t n_terms)
{
    const auto& names = catalog_names();
    if (std::find(names.begin(), names.end(), name) != names.end()) {
        return catalog(name, n_terms);
    }
    const bool parameterized = name == "extremal" || name == "extremal-rotated" || name == "v-sample";
    if (parameterized) {
        if (!params) {
            throw ParameterError("function '" + name +
                                 "' needs --alpha and --beta (0 <= alpha < 1 < beta)");
        }
        const SeriesOptions opts{n_terms, 0.0};
        if (name == "extremal") {
            return extremal_S(*params, opts);
        }
        if (name == "extremal-rotated") {
            return extremal_S_rotated(*params, opts);
        }
        return sample_V_member(*params, opts);
    }
    std::error_code ec;
    if (std::filesystem::is_regular_file(name, ec)) {
        return load_model(name);
    }
    throw UnknownFunctionError("unknown function '" + name +
                               "' (not a catalog name, constructed model or coefficient file)");
}

std::vector<SweepRow> sweep(const std::vector<double>& alphas, const std::vector<double>& betas,
                            const GridSpec& grid, std::size_t n_terms)
{
    std::vector<SweepRow> rows;
    rows.reserve(alphas.size() * betas.size());
    for (double a : alphas) {
        for (double b : betas) {
            const StripParams p = StripParams::make(a, b);
            const double bound = bound_theorem1(p);
            const double norm = estimate_norm(extremal_S(p, {n_terms, 0.0}), grid).value;
            rows.push_back({a, b, p.phi(), bound, norm, norm / bound});
        }
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows)
{
    std::string out = "alpha,beta,phi,theorem1,norm_extremal,ratio\n";
    for (const auto& r : rows) {
        out += fmt::format("{},{},{},{},{},{}\n", csv_number(r.alpha), csv_number(r.beta),
                           csv_number(r.phi), csv_number(r.theorem1),
                           csv_number(r.norm_extremal), csv_number(r.ratio));
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Pre-Schwarzian norms for strip-starlike function classes"};
    app.require_subcommand(1);

    auto* bound = app.add_subcommand("bound", "closed-form norm bound and the complex-valued A/B formulas");
    add_params_options(bound, cfg);
    add_output_options(bound, cfg);

    auto* norm = app.add_subcommand("norm", "grid estimate of sup (1-|z|^2)|f''/f'|");
    add_params_options(norm, cfg);
    add_function_options(norm, cfg);
    add_grid_options(norm, cfg);
    add_output_options(norm, cfg);
    norm->add_option("--save-model", cfg.save_model_path, "write the model's coefficient document");

    auto* sharp = app.add_subcommand("sharpness", "compare extremal norms with the bound");
    add_params_options(sharp, cfg);
    add_grid_options(sharp, cfg);
    add_output_options(sharp, cfg);
    sharp->add_option("--n-terms", cfg.n_terms, "series terms")->capture_default_str();

    auto* member = app.add_subcommand("membership", "grid check of S or V class membership");
    add_params_options(member, cfg);
    add_function_options(member, cfg);
    add_output_options(member, cfg);
    static const std::map<std::string, FunctionClass> classes{{"S", FunctionClass::S},
                                                              {"V", FunctionClass::V}};
    member->add_option("--class", cfg.function_class, "S or V")
        ->transform(CLI::CheckedTransformer(classes, CLI::ignore_case));
    member->add_option("--rings", cfg.membership_grid.rings, "circles")->capture_default_str();
    member->add_option("--angles", cfg.membership_grid.angles, "points per circle")
        ->capture_default_str();
    member->add_option("--max-radius", cfg.membership_grid.max_radius, "outermost circle")
        ->capture_default_str();

    auto* finite = app.add_subcommand("finiteness", "level maxima on |z| = 1 - 2^-k for a V member");
    add_params_options(finite, cfg);
    add_function_options(finite, cfg);
    add_output_options(finite, cfg);
    finite->add_option("--levels", cfg.levels, "circles")->capture_default_str();
    finite->add_option("--angles", cfg.circle_angles, "points per circle")->capture_default_str();

    auto* sw = app.add_subcommand("sweep", "extremal norm versus bound over an (alpha, beta) grid");
    sw->add_option("--alphas", cfg.alphas, "comma-separated alpha values")->delimiter(',');
    sw->add_option("--betas", cfg.betas, "comma-separated beta values")->delimiter(',');
    add_grid_options(sw, cfg);
    add_output_options(sw, cfg);
    sw->add_option("--n-terms", cfg.n_terms, "series terms")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParameterError;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        std::string text;
        if (cfg.command == "bound") {
            text = run_bound(cfg);
        } else if (cfg.command == "norm") {
            text = run_norm(cfg);
        } else if (cfg.command == "sharpness") {
            text = run_sharpness(cfg);
        } else if (cfg.command == "membership") {
            text = run_membership(cfg);
        } else if (cfg.command == "finiteness") {
            text = run_finiteness(cfg);
        } else {
            text = run_sweep(cfg);
        }
        emit(cfg, text, out);
        return kOk;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kParameterError;
    } catch (const UnknownFunctionError& e) {
        err << "error: " << e.what() << '\n';
        return kUnknownFunction;
    } catch (const EvaluationError& e) {
        err << "error: " << e.what() << '\n';
        return kEvaluationError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kEvaluationError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

} // namespace preschwarz::cli
