#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "permdes/bounds.hpp"
#include "permdes/charlier.hpp"
#include "permdes/design.hpp"
#include "permdes/radius.hpp"

namespace permdes {

/// Rounds to 12 significant digits so printed reports are reproducible.
double round12(double value);
std::string decimal12(double value);

nlohmann::json to_json(const StrengthReport& report);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const RadiusResult& result, std::optional<double> seconds = std::nullopt);
nlohmann::json to_json(const AnnihilationReport& report);
nlohmann::json to_json(const OrthogonalityReport& report);

}  // namespace permdes
