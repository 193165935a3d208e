#include "support.hpp"

#include <preschwarz/cli.hpp>
#include <preschwarz/reports.hpp>

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace preschwarz;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("preschwarz_cli_" + name);
}

std::vector<std::string> split_lines(const std::string& s)
{
    std::vector<std::string> lines;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) {
        lines.push_back(l);
    }
    return lines;
}

} // namespace

TEST(Cli, BoundJson)
{
    const auto r = run({"bound", "--alpha", "0", "--beta", "2"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    const auto doc = json::parse(r.out);
    EXPECT_EQ(doc["command"], "bound");
    EXPECT_NEAR(doc["result"]["theorem1"].get<double>(), 5.3826, 1e-4);
    EXPECT_NEAR(doc["result"]["theoremA"][0].get<double>(), 8.0 / kPi, 1e-15);
    EXPECT_EQ(doc["result"]["theoremA"][1].get<double>(), 0.0);

    const auto half = json::parse(run({"bound", "--alpha", "0.5", "--beta", "2"}).out);
    EXPECT_NEAR(half["result"]["theoremA_im_abs"].get<double>(), 0.8270, 1e-4);
}

TEST(Cli, ParameterErrors)
{
    const auto r = run({"bound", "--alpha", "1", "--beta", "2"});
    EXPECT_EQ(r.code, cli::kParameterError);
    EXPECT_NE(r.err.find("0 <= alpha < 1 < beta"), std::string::npos) << r.err;
    EXPECT_TRUE(r.out.empty());

    EXPECT_EQ(run({"bound", "--alpha", "0"}).code, cli::kParameterError);
    EXPECT_EQ(run({"bound", "--alpha", "zero", "--beta", "2"}).code, cli::kParameterError);
    EXPECT_EQ(run({"norm", "--angles", "4"}).code, cli::kParameterError);
    EXPECT_EQ(run({"norm", "--format", "xml"}).code, cli::kParameterError);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kParameterError);
    EXPECT_EQ(run({}).code, cli::kParameterError);
    EXPECT_EQ(run({"norm", "--function", "extremal"}).code, cli::kParameterError);
}

TEST(Cli, HelpExitsZero)
{
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_NE(r.out.find("sweep"), std::string::npos);
}

TEST(Cli, UnknownFunction)
{
    const auto r = run({"norm", "--function", "no-such-function"});
    EXPECT_EQ(r.code, cli::kUnknownFunction);
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, EvaluationFailure)
{
    const auto path = temp_file("koebe_series.json");
    ASSERT_EQ(run({"norm", "--function", "koebe", "--n-terms", "64", "--save-model", path.string(),
                   "--radius-levels", "2"})
                  .code,
              cli::kOk);
    const auto r = run({"norm", "--function", path.string(), "--radius-levels", "12"});
    EXPECT_EQ(r.code, cli::kEvaluationError) << r.err;
    const auto fin = run({"finiteness", "--alpha", "0.5", "--beta", "2", "--function", "koebe",
                          "--levels", "4"});
    EXPECT_EQ(fin.code, cli::kEvaluationError);
    std::filesystem::remove(path);
}

TEST(Cli, NormCatalog)
{
    const auto identity = json::parse(run({"norm", "--function", "identity"}).out);
    EXPECT_EQ(identity["result"]["value"].get<double>(), 0.0);

    const auto koebe =
        json::parse(run({"norm", "--function", "koebe", "--radius-levels", "12", "--angles", "256"}).out);
    EXPECT_GE(koebe["result"]["value"].get<double>(), 5.99);
    EXPECT_LE(koebe["result"]["value"].get<double>(), 6.0);
}

TEST(Cli, NormOutputFileRoundTrip)
{
    const auto path = temp_file("norm.json");
    const auto r = run({"norm", "--function", "extremal", "--alpha", "0", "--beta", "2", "--output",
                        path.string()});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    const auto doc = json::parse(in);
    const auto stdout_doc = json::parse(
        run({"norm", "--function", "extremal", "--alpha", "0", "--beta", "2"}).out);
    EXPECT_EQ(doc, stdout_doc);
    const NormEstimate e = norm_estimate_from_json(doc["result"]);
    EXPECT_EQ(to_json(e), doc["result"]);
    EXPECT_FALSE(doc["config"].contains("output_path"));
    std::filesystem::remove(path);
}

TEST(Cli, SavedModelReproducesNorm)
{
    const auto path = temp_file("model.json");
    const auto first = run({"norm", "--function", "v-sample", "--alpha", "0.25", "--beta", "2",
                            "--save-model", path.string(), "--radius-levels", "6"});
    ASSERT_EQ(first.code, cli::kOk) << first.err;
    const auto second = run({"norm", "--function", path.string(), "--radius-levels", "6"});
    ASSERT_EQ(second.code, cli::kOk) << second.err;
    const double a = json::parse(first.out)["result"]["value"].get<double>();
    const double b = json::parse(second.out)["result"]["value"].get<double>();
    EXPECT_NEAR(a, b, 1e-8 * std::max(1.0, a));
    std::filesystem::remove(path);
}

TEST(Cli, CsvTrace)
{
    const auto r = run({"norm", "--function", "koebe", "--format", "csv"});
    ASSERT_EQ(r.code, cli::kOk);
    const auto lines = split_lines(r.out);
    ASSERT_EQ(lines.size(), 12U);
    EXPECT_EQ(lines[0], "radius,max_hyperbolic_quantity");
    EXPECT_EQ(lines[1], "0,4");
    EXPECT_EQ(lines[2], "0.5,5");
}

TEST(Cli, Sweep)
{
    const auto r = run({"sweep", "--alphas", "0,0.25,0.5", "--betas", "1.5,2,4", "--format", "csv",
                        "--radius-levels", "6", "--angles", "32"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    const auto lines = split_lines(r.out);
    ASSERT_EQ(lines.size(), 10U);
    EXPECT_EQ(lines[0], "alpha,beta,phi,theorem1,norm_extremal,ratio");
    const double alphas[] = {0, 0.25, 0.5};
    const double betas[] = {1.5, 2, 4};
    for (std::size_t i = 0; i < 9; ++i) {
        std::istringstream row(lines[i + 1]);
        std::vector<double> v;
        for (std::string cell; std::getline(row, cell, ',');) {
            v.push_back(std::stod(cell));
        }
        ASSERT_EQ(v.size(), 6U);
        EXPECT_EQ(v[0], alphas[i / 3]);
        EXPECT_EQ(v[1], betas[i % 3]);
        EXPECT_NEAR(v[2], 2.0 * kPi * (1.0 - v[0]) / (v[1] - v[0]), 1e-15);
        EXPECT_EQ(v[5], v[4] / v[3]);
    }
    EXPECT_EQ(run({"sweep", "--alphas", "0"}).code, cli::kParameterError);
}

TEST(Cli, MembershipAndSharpness)
{
    const auto m = run({"membership", "--alpha", "0", "--beta", "2", "--function", "koebe"});
    ASSERT_EQ(m.code, cli::kOk);
    EXPECT_FALSE(json::parse(m.out)["result"]["verdict"].get<bool>());

    const auto v = run({"membership", "--alpha", "0", "--beta", "2", "--function", "v-sample",
                        "--class", "V"});
    ASSERT_EQ(v.code, cli::kOk);
    EXPECT_TRUE(json::parse(v.out)["result"]["verdict"].get<bool>());

    const auto s = run({"sharpness", "--alpha", "0", "--beta", "2", "--format", "csv"});
    ASSERT_EQ(s.code, cli::kOk);
    EXPECT_EQ(split_lines(s.out).size(), 2U);
}

TEST(Cli, FinitenessCsv)
{
    const auto r = run({"finiteness", "--alpha", "0", "--beta", "2", "--function", "cayley_like",
                        "--format", "csv"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    const auto lines = split_lines(r.out);
    ASSERT_EQ(lines.size(), 13U);
    EXPECT_EQ(lines[0], "radius,max_hyperbolic_quantity");
}

TEST(Cli, PayloadsAreReproducible)
{
    const std::vector<std::string> args{"sharpness", "--alpha", "0.5", "--beta", "2"};
    EXPECT_EQ(run(args).out, run(args).out);
}
