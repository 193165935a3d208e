#pragma once

#include "preschwarz/functions.hpp"
#include "preschwarz/norm.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace preschwarz {

// JSON: complex numbers are [re, im]; absent optional values are null.

[[nodiscard]] nlohmann::json to_json(Complex z);
[[nodiscard]] nlohmann::json to_json(const StripParams& p);
[[nodiscard]] nlohmann::json to_json(const GridSpec& g);
[[nodiscard]] nlohmann::json to_json(const DiscSampling& g);
[[nodiscard]] nlohmann::json to_json(const NormEstimate& e);
[[nodiscard]] nlohmann::json to_json(const BoundReport& r);
[[nodiscard]] nlohmann::json to_json(const MembershipReport& r);
[[nodiscard]] nlohmann::json to_json(const SharpnessReport& r);
[[nodiscard]] nlohmann::json to_json(const FinitenessReport& r);

/// Inverse of to_json(NormEstimate); throws nlohmann::json::exception on bad input.
[[nodiscard]] NormEstimate norm_estimate_from_json(const nlohmann::json& doc);

/// 17 significant digits, '.' decimal separator: round-trip exact for doubles.
[[nodiscard]] std::string csv_number(double v);

/// "radius,max_hyperbolic_quantity" followed by one row per level.
[[nodiscard]] std::string level_trace_csv(const std::vector<LevelMax>& levels);

[[nodiscard]] std::string bound_csv(const BoundReport& r);
[[nodiscard]] std::string membership_csv(const MembershipReport& r);
[[nodiscard]] std::string sharpness_csv(const SharpnessReport& r);

} // namespace preschwarz
