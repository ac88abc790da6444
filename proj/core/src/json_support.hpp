#pragma once

// Internal: nlohmann/json helpers shared by the serializers.

#include <json.hpp>

#include "casimir/model.hpp"

namespace casimir::detail {

nlohmann::json config_json(const ExperimentConfig& config);

}  // namespace casimir::detail
