#pragma once

// Shared physical types for the sphere / corrugated-plate geometry.
//
// Unit conventions: every length is in nanometres, every force in
// piconewtons. hbar*c is therefore carried in pN nm^2.

#include <array>
#include <numbers>

namespace casimir {

namespace constants {

/// hbar*c in SI units (J m).
inline constexpr double kHbarCSI = 3.16153e-26;

/// hbar*c in pN nm^2 (1 J m = 1e12 pN * 1e18 nm^2).
inline constexpr double kHbarC = kHbarCSI * 1e30;

inline constexpr double kPi = std::numbers::pi;

}  // namespace constants

/// Sinusoidal corrugation z_s(x) = A sin(2 pi x / L) plus a constant
/// stochastic-roughness offset on the plate.
struct CorrugatedPlate {
  double amplitude_A = 0.0;
  double period_L = 1.0;
  double roughness_Ap = 0.0;

  /// Height of the corrugated surface above its mean plane at lateral
  /// position x.
  [[nodiscard]] double surface_height(double x) const;

  void validate() const;
  friend bool operator==(const CorrugatedPlate&, const CorrugatedPlate&) = default;
};

struct SphereGeometry {
  double radius_R = 1.0;
  double roughness_As = 0.0;

  void validate() const;
  friend bool operator==(const SphereGeometry&, const SphereGeometry&) = default;
};

/// Conductivity correction sum_i c_i (delta0/d)^i. With `ideal` set the
/// factor is identically one.
struct MaterialModel {
  double delta0 = 0.0;
  std::array<double, 5> coefficients = default_coefficients();
  bool ideal = false;

  /// c0..c4 of the fourth-order finite-conductivity expansion.
  [[nodiscard]] static std::array<double, 5> default_coefficients();
  [[nodiscard]] static MaterialModel ideal_metal();

  void validate() const;
  friend bool operator==(const MaterialModel&, const MaterialModel&) = default;
};

/// Sphere-bottom coordinates. y0 has no effect for a uniaxial corrugation
/// and is not stored.
struct SpherePose {
  double x0 = 0.0;
  double z0 = 1.0;

  friend bool operator==(const SpherePose&, const SpherePose&) = default;
};

struct ExperimentConfig {
  CorrugatedPlate plate;
  SphereGeometry sphere;
  MaterialModel material;
  double a0 = 1.0;
  double contact_offset_h = 0.0;

  /// Combined roughness offset A_p + A_s subtracted from every separation.
  [[nodiscard]] double roughness_offset() const {
    return plate.roughness_Ap + sphere.roughness_As;
  }

  void validate() const;
  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Aluminium-coated sphere above a 59.4 nm / 1.1 um corrugation.
[[nodiscard]] ExperimentConfig default_experiment();

/// Throws ContactError unless z0 clears the crest plus both roughness layers.
void check_pose(const SpherePose& pose, const ExperimentConfig& config);

}  // namespace casimir
