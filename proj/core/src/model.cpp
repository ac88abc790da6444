#include "casimir/model.hpp"

#include <cmath>
#include <string>

#include "casimir/error.hpp"

namespace casimir {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

bool finite(double v) { return std::isfinite(v); }

}  // namespace

double CorrugatedPlate::surface_height(double x) const {
  return amplitude_A * std::sin(2.0 * constants::kPi * x / period_L);
}

void CorrugatedPlate::validate() const {
  require(finite(amplitude_A) && finite(period_L) && finite(roughness_Ap),
          "plate parameters must be finite");
  require(period_L > 0.0, "corrugation period L must be positive");
  require(amplitude_A >= 0.0, "corrugation amplitude A must be non-negative");
  require(roughness_Ap >= 0.0, "plate roughness A_p must be non-negative");
  require(amplitude_A < period_L, "corrugation amplitude must be smaller than the period");
}

void SphereGeometry::validate() const {
  require(finite(radius_R) && finite(roughness_As), "sphere parameters must be finite");
  require(radius_R > 0.0, "sphere radius R must be positive");
  require(roughness_As >= 0.0, "sphere roughness A_s must be non-negative");
}

std::array<double, 5> MaterialModel::default_coefficients() {
  constexpr double pi2 = constants::kPi * constants::kPi;
  return {1.0, -4.0, 72.0 / 5.0, -(320.0 / 7.0) * (1.0 - pi2 / 210.0),
          -(400.0 / 3.0) * (1.0 - 163.0 * pi2 / 7350.0)};
}

MaterialModel MaterialModel::ideal_metal() {
  MaterialModel m;
  m.ideal = true;
  return m;
}

void MaterialModel::validate() const {
  require(finite(delta0), "penetration depth must be finite");
  require(delta0 >= 0.0, "penetration depth delta0 must be non-negative");
  for (double c : coefficients) require(finite(c), "conductivity coefficients must be finite");
}

void ExperimentConfig::validate() const {
  plate.validate();
  sphere.validate();
  material.validate();
  require(finite(a0) && a0 > 0.0, "minimal separation a0 must be positive");
  require(finite(contact_offset_h) && contact_offset_h >= 0.0,
          "contact offset h must be non-negative");
}

ExperimentConfig default_experiment() {
  ExperimentConfig c;
  c.plate = {.amplitude_A = 59.4, .period_L = 1100.0, .roughness_Ap = 4.7};
  c.sphere = {.radius_R = 97300.0, .roughness_As = 5.0};
  c.material.delta0 = 100.0 / (2.0 * constants::kPi);  // lambda_p = 100 nm for Al
  c.a0 = 148.0;
  c.contact_offset_h = 30.0;
  return c;
}

void check_pose(const SpherePose& pose, const ExperimentConfig& config) {
  const double clearance = config.plate.amplitude_A + config.roughness_offset();
  if (!(pose.z0 > clearance)) {
    throw ContactError("sphere at z0=" + std::to_string(pose.z0) +
                       " nm intersects the plate (needs z0 > " + std::to_string(clearance) +
                       " nm)");
  }
}

}  // namespace casimir
