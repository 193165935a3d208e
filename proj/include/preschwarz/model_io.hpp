#pragma once

#include "preschwarz/model.hpp"

#include <json.hpp>

#include <filesystem>

namespace preschwarz {

/// {kind, alpha, beta, n_terms, coefficients: [[re, im], ...], certified_radius,
///  schwarz_scale?}. alpha/beta are null for catalog models.
[[nodiscard]] nlohmann::json model_to_json(const AnalyticModel& model);

/// Series model from a coefficient document. An explicit certified_radius is
/// honoured; otherwise it is estimated from the coefficients. Throws
/// UnknownFunctionError on malformed documents.
[[nodiscard]] AnalyticModel model_from_json(const nlohmann::json& doc);

void save_model(const AnalyticModel& model, const std::filesystem::path& path);
[[nodiscard]] AnalyticModel load_model(const std::filesystem::path& path);

} // namespace preschwarz
