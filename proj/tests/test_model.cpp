#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "casimir/config_io.hpp"
#include "casimir/error.hpp"
#include "casimir/model.hpp"
#include "reference_values.hpp"

namespace casimir {
namespace {

TEST(DefaultExperiment, PublishedGeometry) {
  const auto c = default_experiment();
  EXPECT_EQ(c.plate.amplitude_A, 59.4);
  EXPECT_EQ(c.plate.period_L, 1100.0);
  EXPECT_EQ(c.plate.roughness_Ap, 4.7);
  EXPECT_EQ(c.sphere.roughness_As, 5.0);
  EXPECT_EQ(c.sphere.radius_R, 97300.0);
  EXPECT_EQ(c.a0, 148.0);
  EXPECT_EQ(c.contact_offset_h, 30.0);
  EXPECT_FALSE(c.material.ideal);
  EXPECT_NEAR(c.material.delta0, reference::kDelta0, 1e-13);
  EXPECT_NO_THROW(c.validate());
}

TEST(DefaultExperiment, ConductivityCoefficients) {
  const auto c = MaterialModel::default_coefficients();
  EXPECT_EQ(c[0], 1.0);
  EXPECT_EQ(c[1], -4.0);
  EXPECT_EQ(c[2], 14.4);
  EXPECT_NEAR(c[3], reference::kC3, 1e-12);
  EXPECT_NEAR(c[4], reference::kC4, 1e-12);
  EXPECT_NEAR(c[3], -43.565800, 1e-6);
  // -(400/3)(1 - 163 pi^2 / 7350); the often-quoted -104.149750 is 8.8e-6 off
  EXPECT_NEAR(c[4], -104.149741, 1e-6);
}

TEST(HbarC, Units) {
  EXPECT_GT(constants::kHbarC, 0.0);
  EXPECT_DOUBLE_EQ(constants::kHbarC, 31615.3);
}

TEST(Validation, RejectsBadGeometry) {
  auto c = default_experiment();
  c.plate.period_L = 0.0;
  EXPECT_THROW(c.validate(), DomainError);

  c = default_experiment();
  c.plate.amplitude_A = -1.0;
  EXPECT_THROW(c.validate(), DomainError);

  c = default_experiment();
  c.plate.amplitude_A = 2000.0;  // larger than the period
  EXPECT_THROW(c.validate(), DomainError);

  c = default_experiment();
  c.sphere.radius_R = 0.0;
  EXPECT_THROW(c.validate(), DomainError);

  c = default_experiment();
  c.material.delta0 = -1.0;
  EXPECT_THROW(c.validate(), DomainError);

  c = default_experiment();
  c.a0 = 0.0;
  EXPECT_THROW(c.validate(), DomainError);
}

TEST(CheckPose, ContactIsAnError) {
  const auto c = default_experiment();
  EXPECT_NO_THROW(check_pose({0.0, 70.0}, c));
  EXPECT_THROW(check_pose({0.0, 69.1}, c), ContactError);
}

TEST(SurfaceHeight, Profile) {
  const auto c = default_experiment();
  EXPECT_NEAR(c.plate.surface_height(275.0), 59.4, 1e-12);
  EXPECT_NEAR(c.plate.surface_height(0.0), 0.0, 1e-12);
  EXPECT_NEAR(c.plate.surface_height(825.0), -59.4, 1e-12);
}

TEST(ConfigJson, RoundTripIsBitExact) {
  std::mt19937_64 rng(20261016);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    ExperimentConfig c;
    c.plate.period_L = 100.0 + 5000.0 * u(rng);
    c.plate.amplitude_A = c.plate.period_L * 0.5 * u(rng);
    c.plate.roughness_Ap = 10.0 * u(rng);
    c.sphere.radius_R = 1e3 + 1e6 * u(rng);
    c.sphere.roughness_As = 10.0 * u(rng);
    c.material.delta0 = 50.0 * u(rng);
    c.material.ideal = u(rng) < 0.5;
    for (auto& coef : c.material.coefficients) coef = 200.0 * (u(rng) - 0.5);
    c.a0 = 1.0 + 300.0 * u(rng);
    c.contact_offset_h = 50.0 * u(rng);

    const auto back = config_from_json(config_to_json(c));
    EXPECT_EQ(back, c);
    EXPECT_EQ(config_hash(back), config_hash(c));
  }
}

TEST(ConfigJson, PartialOverridesKeepBase) {
  const auto c = config_from_json(R"({"amplitude_nm": 0, "ideal_metal": true})");
  EXPECT_EQ(c.plate.amplitude_A, 0.0);
  EXPECT_TRUE(c.material.ideal);
  EXPECT_EQ(c.sphere.radius_R, 97300.0);
}

TEST(ConfigJson, Errors) {
  EXPECT_THROW((void)config_from_json("{"), Error);
  EXPECT_THROW((void)config_from_json("[]"), Error);
  EXPECT_THROW((void)config_from_json(R"({"radius": 5})"), Error);
  EXPECT_THROW((void)config_from_json(R"({"radius_nm": "big"})"), Error);
  EXPECT_THROW((void)config_from_json(R"({"coefficients": [1, 2, 3]})"), Error);
  EXPECT_THROW((void)config_from_json(R"({"period_nm": -3})"), DomainError);
  EXPECT_THROW((void)load_config("/nonexistent/casimir.json"), Error);
}

TEST(ConfigHash, SensitiveToEveryField) {
  const auto base = default_experiment();
  auto c = base;
  c.material.coefficients[4] = -c.material.coefficients[4];
  EXPECT_NE(config_hash(c), config_hash(base));
  EXPECT_EQ(config_hash(base).size(), 16u);
}

}  // namespace
}  // namespace casimir
