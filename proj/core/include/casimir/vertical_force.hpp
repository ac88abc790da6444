#pragma once

// Plate-sphere Casimir force in the proximity-force form with a
// fourth-order finite-conductivity correction, and its average over the
// lateral position of the sphere within one corrugation period.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "casimir/model.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

/// Probability law for the lateral position of the sphere bottom within
/// one period [0, L).
enum class PositionDistribution {
  kUniform,         ///< 1/L everywhere
  kHalfUniform,     ///< 2/L on the convex half [0, L/2), zero elsewhere
  kTriangular,      ///< linear rise to 4/L at the crest x = L/4, zero on [L/2, L)
  kDeltaAtMaximum,  ///< point mass at the crest x = L/4
};

inline constexpr PositionDistribution kAllDistributions[] = {
    PositionDistribution::kUniform, PositionDistribution::kHalfUniform,
    PositionDistribution::kTriangular, PositionDistribution::kDeltaAtMaximum};

/// Short CLI names: uniform, half, triangular, peak.
[[nodiscard]] std::string_view to_string(PositionDistribution d);
[[nodiscard]] std::optional<PositionDistribution> parse_distribution(std::string_view name);

/// Separation window where the perturbative force is trusted, in nm.
inline constexpr double kValidityMin = 169.5;
inline constexpr double kValidityMax = 400.0;

/// Local surface separation d(a, x) = a - A_p - A_s - A sin(2 pi x / L).
/// Throws ContactError if it is not positive.
[[nodiscard]] double gap(double a, double x, const CorrugatedPlate& plate,
                         const SphereGeometry& sphere);

/// Perfect-metal force -pi^3 R hbar c / (360 d^3), in pN.
[[nodiscard]] double force_ideal_plate_sphere(double d, double R);

/// sum_i c_i (delta0/d)^i; exactly 1 for an ideal metal. Warns (once) when
/// d is below the plasma wavelength 2 pi delta0.
[[nodiscard]] double conductivity_factor(double d, const MaterialModel& material);

[[nodiscard]] double force_plate_sphere(double d, const SphereGeometry& sphere,
                                        const MaterialModel& material);

/// Density rho(x) in 1/nm, with x reduced modulo L. Piecewise branches are
/// right-continuous. Throws DomainError for kDeltaAtMaximum.
[[nodiscard]] double density(PositionDistribution dist, double x, double L);

/// m-th moment of sin(2 pi x / L) under the distribution (m >= 0).
[[nodiscard]] double distribution_moment(PositionDistribution dist, int m);

/// Distribution-weighted average of force_plate_sphere over one period, by
/// adaptive quadrature split at the density breakpoints.
[[nodiscard]] double averaged_force(double a, const ExperimentConfig& config,
                                    PositionDistribution dist, const QuadratureSpec& spec = {});

/// Same average from the Taylor expansion in A / (a - A_p - A_s), truncated
/// after the given power (0..6) and integrated against the moments.
[[nodiscard]] double averaged_force_series(double a, const ExperimentConfig& config,
                                           PositionDistribution dist, int order);

struct CurvePoint {
  double a_nm;
  double F_pN;
};

struct ForceCurve {
  std::vector<CurvePoint> points;
  PositionDistribution distribution = PositionDistribution::kUniform;
  ExperimentConfig config;
  std::string config_hash;
};

/// `steps` equispaced separations from a_min to a_max inclusive.
[[nodiscard]] ForceCurve make_force_curve(const ExperimentConfig& config, PositionDistribution dist,
                                          double a_min, double a_max, int steps,
                                          const QuadratureSpec& spec = {});

/// "a_nm,F_pN" header then one row per point.
void write_curve_csv(std::ostream& out, const ForceCurve& curve);
[[nodiscard]] std::string curve_to_json(const ForceCurve& curve);

}  // namespace casimir
