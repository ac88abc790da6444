#pragma once

// Comparing theory curves with measured force-distance data through the
// unweighted root-mean-square deviation.

#include <array>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "casimir/model.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/vertical_force.hpp"

namespace casimir {

struct Measurement {
  double a_nm;
  double F_pN;
};

struct MeasurementSet {
  std::vector<Measurement> points;
  double sigma_F = 5.0;  ///< pN, metadata only
  double sigma_a = 5.0;  ///< nm, metadata only
};

/// Inclusive separation window, nm.
struct SeparationRange {
  double a_min = kValidityMin;
  double a_max = kValidityMax;

  [[nodiscard]] bool contains(double a) const { return a >= a_min && a <= a_max; }
};

using TheoryCurve = std::function<double(double)>;

/// Parse "a,F" rows (optional "a_nm,F_pN" header; blank lines and lines
/// starting with '#' are skipped). Errors name the 1-based line number.
[[nodiscard]] MeasurementSet parse_measurements(std::istream& in);
[[nodiscard]] MeasurementSet load_measurements(const std::filesystem::path& path);

/// sqrt(mean((theory(a_i) - F_i)^2)) over the points inside `range`.
/// Throws DomainError when no point is inside.
[[nodiscard]] double rms_deviation(const TheoryCurve& theory, const MeasurementSet& data,
                                   const SeparationRange& range = {});

/// Relative sigma difference below which two distributions count as tied.
inline constexpr double kSigmaTieTolerance = 1e-9;

struct FitReport {
  std::array<double, 4> sigma_pN{};  ///< indexed like kAllDistributions
  int points_used = 0;
  int points_total = 0;
  SeparationRange range;
  PositionDistribution best = PositionDistribution::kUniform;

  [[nodiscard]] double sigma(PositionDistribution d) const {
    return sigma_pN[static_cast<std::size_t>(d)];
  }
};

/// sigma for every distribution; the smallest wins, ties (within
/// kSigmaTieTolerance) going to the earlier entry of kAllDistributions.
[[nodiscard]] FitReport compare_distributions(const MeasurementSet& data,
                                              const ExperimentConfig& config,
                                              const SeparationRange& range = {},
                                              const QuadratureSpec& spec = {});

[[nodiscard]] std::string fit_report_to_json(const FitReport& report, const ExperimentConfig& config);
[[nodiscard]] std::string fit_report_to_table(const FitReport& report);

}  // namespace casimir
