#include "preschwarz/model_io.hpp"

#include "preschwarz/errors.hpp"

#include <fstream>

namespace preschwarz {

using nlohmann::json;

namespace {

json optional_number(const std::optional<double>& v)
{
    return v ? json(*v) : json(nullptr);
}

std::optional<double> read_optional(const json& doc, const char* key)
{
    if (!doc.contains(key) || doc.at(key).is_null()) {
        return std::nullopt;
    }
    return doc.at(key).get<double>();
}

} // namespace

json model_to_json(const AnalyticModel& model)
{
    json coeffs = json::array();
    for (const Complex& a : model.coefficients()) {
        coeffs.push_back({a.real(), a.imag()});
    }
    json doc{
        {"kind", model.name()},
        {"alpha", optional_number(model.origin().alpha)},
        {"beta", optional_number(model.origin().beta)},
        {"n_terms", model.n_terms()},
        {"certified_radius", model.certified_radius()},
        {"coefficients", std::move(coeffs)},
    };
    if (model.origin().schwarz_scale) {
        doc["schwarz_scale"] = *model.origin().schwarz_scale;
    }
    return doc;
}

AnalyticModel model_from_json(const json& doc)
{
    try {
        ModelOrigin origin{doc.value("kind", std::string("series")), read_optional(doc, "alpha"),
                           read_optional(doc, "beta"), read_optional(doc, "schwarz_scale")};
        std::vector<Complex> coeffs;
        for (const auto& pair : doc.at("coefficients")) {
            if (!pair.is_array() || pair.size() != 2) {
                throw UnknownFunctionError("coefficients must be [re, im] pairs");
            }
            coeffs.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
        }
        if (doc.contains("n_terms") && doc.at("n_terms").get<std::size_t>() != coeffs.size()) {
            throw UnknownFunctionError("n_terms does not match the number of coefficients");
        }
        return AnalyticModel(AnalyticModel::Kind::Series, std::move(origin), std::move(coeffs), {},
                             read_optional(doc, "certified_radius"));
    } catch (const json::exception& e) {
        throw UnknownFunctionError(std::string("malformed coefficient document: ") + e.what());
    } catch (const ParameterError& e) {
        throw UnknownFunctionError(std::string("invalid coefficient document: ") + e.what());
    }
}

void save_model(const AnalyticModel& model, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << model_to_json(model).dump(2) << '\n';
}

AnalyticModel load_model(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw UnknownFunctionError("cannot open coefficient file " + path.string());
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw UnknownFunctionError("cannot parse " + path.string() + ": " + e.what());
    }
    return model_from_json(doc);
}

} // namespace preschwarz
