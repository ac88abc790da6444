#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "casimir/model.hpp"

namespace casimir {

// Configuration files are JSON objects with the keys
//   amplitude_nm, period_nm, plate_roughness_nm, sphere_roughness_nm,
//   radius_nm, delta0_nm, ideal_metal, a0_nm, contact_offset_nm,
//   coefficients (array of 5 numbers)
// Missing keys keep the value of the base configuration; unknown keys are
// rejected.

[[nodiscard]] std::string config_to_json(const ExperimentConfig& config, int indent = 2);

[[nodiscard]] ExperimentConfig config_from_json(std::string_view text,
                                                const ExperimentConfig& base = default_experiment());

[[nodiscard]] ExperimentConfig load_config(const std::filesystem::path& path,
                                           const ExperimentConfig& base = default_experiment());

/// Stable 64-bit FNV-1a digest of the compact JSON form, as 16 hex digits.
[[nodiscard]] std::string config_hash(const ExperimentConfig& config);

}  // namespace casimir
