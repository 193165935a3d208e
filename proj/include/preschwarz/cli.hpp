#pragma once

#include "preschwarz/functions.hpp"
#include "preschwarz/norm.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace preschwarz::cli {

/// Process exit statuses.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,         ///< I/O and other unexpected failures
    kParameterError = 2,  ///< invalid (alpha, beta), grid or flag values
    kUnknownFunction = 3, ///< function name / coefficient file not resolvable
    kEvaluationError = 4, ///< truncation, construction or precondition failures
};

enum class OutputFormat { Json, Csv };

struct RunConfig {
    std::string command;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::string function = "identity";
    GridSpec grid;
    std::size_t n_terms = kDefaultTerms;
    OutputFormat output_format = OutputFormat::Json;
    std::string output_path; ///< empty: standard output
    // membership
    FunctionClass function_class = FunctionClass::S;
    DiscSampling membership_grid;
    // finiteness
    int levels = 12;
    int circle_angles = 256;
    // sweep
    std::vector<double> alphas;
    std::vector<double> betas;
    // norm
    std::string save_model_path;
};

/// Resolves a catalog name, "extremal", "extremal-rotated", "v-sample" or a
/// coefficient-file path. Parameterized functions need `params`.
[[nodiscard]] AnalyticModel resolve_function(const std::string& name,
                                             const std::optional<StripParams>& params,
                                             std::size_t n_terms);

struct SweepRow {
    double alpha;
    double beta;
    double phi;
    double theorem1;
    double norm_extremal;
    double ratio;
};

/// Alpha-major cartesian sweep of the extremal norm against the closed-form bound.
[[nodiscard]] std::vector<SweepRow> sweep(const std::vector<double>& alphas,
                                          const std::vector<double>& betas, const GridSpec& grid,
                                          std::size_t n_terms);

/// "alpha,beta,phi,theorem1,norm_extremal,ratio" plus one row per entry.
[[nodiscard]] std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Parses args (without the program name) and runs one command.
[[nodiscard]] int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace preschwarz::cli
