#include "casimir/vertical_force.hpp"

#include <array>
#include <cmath>
#include <ostream>
#include <sstream>

#include "casimir/config_io.hpp"
#include "casimir/detail/format.hpp"
#include "casimir/detail/turns.hpp"
#include "casimir/diagnostics.hpp"
#include "casimir/error.hpp"
#include "json_support.hpp"

namespace casimir {

namespace {

using constants::kPi;

constexpr int kMaxSeriesOrder = 6;

void check_validity_window(double a) {
  if (a < kValidityMin || a > kValidityMax) {
    warn("separation outside the perturbative validity range [169.5, 400] nm");
  }
}

// (p)_m = p (p+1) ... (p+m-1)
double rising(double p, int m) {
  double r = 1.0;
  for (int j = 0; j < m; ++j) r *= p + j;
  return r;
}

// (m-1)!! / m!!
double wallis_ratio(int m) {
  double r = 1.0;
  for (int j = m % 2 ? 3 : 2; j <= m; j += 2) r *= static_cast<double>(j - 1) / j;
  return r;
}

// integral of theta sin^m(theta) over [0, pi/2]
double theta_sine_moment(int m) {
  if (m == 0) return kPi * kPi / 8.0;
  if (m == 1) return 1.0;
  return (m - 1.0) / m * theta_sine_moment(m - 2) + 1.0 / (static_cast<double>(m) * m);
}

}  // namespace

std::string_view to_string(PositionDistribution d) {
  switch (d) {
    case PositionDistribution::kUniform: return "uniform";
    case PositionDistribution::kHalfUniform: return "half";
    case PositionDistribution::kTriangular: return "triangular";
    case PositionDistribution::kDeltaAtMaximum: return "peak";
  }
  return "unknown";
}

std::optional<PositionDistribution> parse_distribution(std::string_view name) {
  for (auto d : kAllDistributions) {
    if (to_string(d) == name) return d;
  }
  return std::nullopt;
}

double gap(double a, double x, const CorrugatedPlate& plate, const SphereGeometry& sphere) {
  const double s = detail::sin_turns(detail::turns(x, plate.period_L));
  const double d = a - plate.roughness_Ap - sphere.roughness_As - plate.amplitude_A * s;
  if (!(d > 0.0)) {
    throw ContactError("sphere touches the plate: gap " + std::to_string(d) + " nm at a=" +
                       std::to_string(a) + " nm, x=" + std::to_string(x) + " nm");
  }
  return d;
}

double force_ideal_plate_sphere(double d, double R) {
  if (!(d > 0.0)) throw DomainError("plate-sphere separation must be positive");
  if (!(R > 0.0)) throw DomainError("sphere radius must be positive");
  return -kPi * kPi * kPi * R * constants::kHbarC / (360.0 * d * d * d);
}

double conductivity_factor(double d, const MaterialModel& material) {
  if (!(d > 0.0)) throw DomainError("plate-sphere separation must be positive");
  if (material.ideal) return 1.0;
  if (material.delta0 > 0.0 && d < 2.0 * kPi * material.delta0) {
    warn("separation below the plasma wavelength; conductivity series is outside its validated range");
  }
  const double r = material.delta0 / d;
  const auto& c = material.coefficients;
  return c[0] + r * (c[1] + r * (c[2] + r * (c[3] + r * c[4])));
}

double force_plate_sphere(double d, const SphereGeometry& sphere, const MaterialModel& material) {
  return force_ideal_plate_sphere(d, sphere.radius_R) * conductivity_factor(d, material);
}

double density(PositionDistribution dist, double x, double L) {
  if (!(L > 0.0)) throw DomainError("period must be positive");
  const double t = detail::turns(x, L);
  switch (dist) {
    case PositionDistribution::kUniform:
      return 1.0 / L;
    case PositionDistribution::kHalfUniform:
      return t < 0.5 ? 2.0 / L : 0.0;
    case PositionDistribution::kTriangular:
      if (t < 0.25) return 16.0 * t / L;
      if (t < 0.5) return 16.0 * (0.5 - t) / L;
      return 0.0;
    case PositionDistribution::kDeltaAtMaximum:
      break;
  }
  throw DomainError("the peak distribution is a point mass at x = L/4 and has no density; "
                    "use averaged_force");
}

double distribution_moment(PositionDistribution dist, int m) {
  if (m < 0) throw DomainError("moment order must be non-negative");
  switch (dist) {
    case PositionDistribution::kUniform:
      return m % 2 ? 0.0 : wallis_ratio(m);
    case PositionDistribution::kHalfUniform:
      if (m % 2 == 0) return wallis_ratio(m);
      return 2.0 / kPi * wallis_ratio(m);
    case PositionDistribution::kTriangular:
      return 8.0 / (kPi * kPi) * theta_sine_moment(m);
    case PositionDistribution::kDeltaAtMaximum:
      return 1.0;
  }
  return 0.0;
}

double averaged_force(double a, const ExperimentConfig& config, PositionDistribution dist,
                      const QuadratureSpec& spec) {
  check_validity_window(a);
  const auto& plate = config.plate;
  const double L = plate.period_L;

  // Every distribution has the crest x = L/4 in its support.
  const double closest = gap(a, L / 4.0, plate, config.sphere);
  if (dist == PositionDistribution::kDeltaAtMaximum) {
    return force_plate_sphere(closest, config.sphere, config.material);
  }

  auto integrand = [&](double x) {
    const double w = density(dist, x, L);
    if (w == 0.0) return 0.0;
    return w * force_plate_sphere(gap(a, x, plate, config.sphere), config.sphere, config.material);
  };

  if (dist == PositionDistribution::kUniform) {
    const std::array<double, 5> breaks = {0.0, L / 4.0, L / 2.0, 3.0 * L / 4.0, L};
    return integrate_panels(integrand, breaks, spec).value;
  }
  const std::array<double, 3> breaks = {0.0, L / 4.0, L / 2.0};
  return integrate_panels(integrand, breaks, spec).value;
}

double averaged_force_series(double a, const ExperimentConfig& config, PositionDistribution dist,
                             int order) {
  if (order < 0 || order > kMaxSeriesOrder) throw DomainError("series order must be in [0, 6]");
  const double d0 = a - config.roughness_offset();
  if (!(d0 > 0.0)) throw ContactError("mean separation a - A_p - A_s must be positive");
  const double A = config.plate.amplitude_A;
  if (!(A / d0 < 1.0)) throw DomainError("expansion parameter A/(a - A_p - A_s) must be below 1");
  check_validity_window(a);

  const double pref = -kPi * kPi * kPi * config.sphere.radius_R * constants::kHbarC / 360.0;
  const auto& mat = config.material;
  const int powers = mat.ideal ? 1 : 5;

  double total = 0.0;
  double a_pow = 1.0;  // A^m / m!
  for (int m = 0; m <= order; ++m) {
    if (m > 0) a_pow *= A / m;
    const double moment = distribution_moment(dist, m);
    if (moment == 0.0) continue;
    double derivative_sum = 0.0;
    for (int i = 0; i < powers; ++i) {
      const double b = mat.ideal ? 1.0 : mat.coefficients[i] * std::pow(mat.delta0, i);
      const int p = 3 + i;
      derivative_sum += b * rising(p, m) * std::pow(d0, -(p + m));
    }
    total += a_pow * moment * derivative_sum;
  }
  return pref * total;
}

ForceCurve make_force_curve(const ExperimentConfig& config, PositionDistribution dist,
                            double a_min, double a_max, int steps, const QuadratureSpec& spec) {
  config.validate();
  if (steps < 1) throw DomainError("curve needs at least one step");
  if (steps > 1 && !(a_max > a_min)) throw DomainError("curve range needs a_max > a_min");

  ForceCurve curve;
  curve.distribution = dist;
  curve.config = config;
  curve.config_hash = config_hash(config);
  curve.points.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double a = steps == 1 ? a_min : a_min + (a_max - a_min) * i / (steps - 1);
    curve.points.push_back({a, averaged_force(a, config, dist, spec)});
  }
  return curve;
}

void write_curve_csv(std::ostream& out, const ForceCurve& curve) {
  out << "a_nm,F_pN\n";
  for (const auto& p : curve.points) {
    out << detail::fmt_num(p.a_nm) << ',' << detail::fmt_num(p.F_pN) << '\n';
  }
}

std::string curve_to_json(const ForceCurve& curve) {
  nlohmann::json j;
  j["metadata"] = {{"distribution", std::string(to_string(curve.distribution))},
                   {"config_hash", curve.config_hash},
                   {"config", detail::config_json(curve.config)}};
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : curve.points) pts.push_back({{"a_nm", p.a_nm}, {"F_pN", p.F_pN}});
  j["points"] = std::move(pts);
  return j.dump(2);
}

}  // namespace casimir
