#include "casimir/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "casimir/detail/turns.hpp"
#include "casimir/error.hpp"
#include "json_support.hpp"

namespace casimir {

namespace {

using constants::kHbarC;
using constants::kPi;

constexpr double kTwoPi = 2.0 * kPi;

// int_0^{2 pi} cos(arg cos phi) dphi, panels sized so the phase moves by
// at most ~3 rad across each.
double azimuthal(double arg, const QuadratureSpec& spec) {
  const int panels = 4 + 4 * static_cast<int>(std::ceil(std::fabs(arg) / 3.0));
  std::vector<double> breaks(static_cast<std::size_t>(panels) + 1);
  for (int i = 0; i <= panels; ++i) breaks[i] = kTwoPi * i / panels;
  auto f = [arg](double phi) { return std::cos(arg * std::cos(phi)); };
  return integrate_panels(f, breaks, spec).value;
}

// Height of the lower sphere surface above its bottom at cylindrical radius rho.
double cap_height(double rho, double R) {
  const double s = std::sqrt(std::max(0.0, R * R - rho * rho));
  return rho * rho / (R + s);
}

QuadratureResult harmonic_integral(double z0, double R, double q, int power, double panel_width,
                                   const QuadratureSpec& spec) {
  QuadratureSpec z_spec = spec.tightened(10.0);
  QuadratureSpec phi_spec = spec.tightened(100.0);
  // Absolute floors keep near-zero inner values from demanding
  // unreachable relative accuracy.
  z_spec.abs_tol = std::max(z_spec.abs_tol, z_spec.rel_tol * 1e-3 / ((power - 1) * std::pow(z0, power - 1)));
  phi_spec.abs_tol = std::max(phi_spec.abs_tol, phi_spec.rel_tol * 1e-3 * kTwoPi);

  auto radial = [&](double rho) {
    if (rho == 0.0) return 0.0;
    const double h = cap_height(rho, R);
    auto vertical = [z0, power](double z) { return std::pow(z0 + z, -power); };
    const double zint = integrate_1d(vertical, 0.0, h, z_spec).value;
    if (zint == 0.0) return 0.0;
    return rho * zint * azimuthal(q * rho, phi_spec);
  };

  const int panels = std::max(1, static_cast<int>(std::ceil(R / panel_width)));
  std::vector<double> breaks(static_cast<std::size_t>(panels) + 1);
  for (int i = 0; i <= panels; ++i) breaks[i] = std::min(R, panel_width * i);
  breaks.back() = R;
  return integrate_panels(radial, breaks, spec);
}

}  // namespace

AdditiveConstants::AdditiveConstants(double C, double n_p, double n_s)
    : C_(C), n_p_(n_p), n_s_(n_s) {
  if (!(C > 0.0) || !(n_p > 0.0) || !(n_s > 0.0) || !std::isfinite(C) || !std::isfinite(n_p) ||
      !std::isfinite(n_s)) {
    throw DomainError("additive constants must be finite and positive");
  }
  K_ = 24.0 * C * n_p * n_s / (kPi * kHbarC);
}

double atom_lateral_force(double xA, double zA, const CorrugatedPlate& plate,
                          const AdditiveConstants& consts) {
  const double A = plate.amplitude_A;
  if (!(zA > A)) throw DomainError("atom must lie above the corrugation crests (zA > A)");
  const double t = detail::turns(xA, plate.period_L);
  const double pref = 4.0 * kPi * kPi * consts.n_p() * consts.C() / (5.0 * std::pow(zA, 5));
  return pref * (A / zA) * (zA / plate.period_L) *
         (detail::cos_turns(t) + 2.5 * (A / zA) * detail::sin_turns(2.0 * t));
}

double prefactor_cancellation_check(const AdditiveConstants& consts) {
  const double summed = (consts.n_s() / consts.K()) * (4.0 * kPi * kPi * consts.n_p() * consts.C() / 5.0);
  return summed / (kPi * kPi * kPi * kHbarC / 30.0);
}

ZIntegral z_integral_closed_form(double z0, double h, int power) {
  if (!(z0 > 0.0)) throw DomainError("z-integral needs z0 > 0");
  if (!(h >= 0.0)) throw DomainError("z-integral needs h >= 0");
  if (power != 5 && power != 6) throw DomainError("z-integral power must be 5 or 6");
  const double m = power - 1.0;
  const double truncated = std::pow(z0, -m) / m;
  double exact = truncated;
  if (std::isfinite(h)) {
    // 1 - (1 + h/z0)^(-m), without cancellation for small h
    exact = -truncated * std::expm1(-m * std::log1p(h / z0));
  }
  const double rel = exact == 0.0 ? std::numeric_limits<double>::infinity()
                                  : (truncated - exact) / exact;
  return {exact, truncated, rel};
}

HarmonicIntegrals lateral_harmonic_integrals(double z0, const ExperimentConfig& config,
                                             const QuadratureSpec& spec) {
  if (!(z0 > 0.0)) throw DomainError("lateral force needs z0 > 0");
  spec.validate();
  const double L = config.plate.period_L;
  const double R = config.sphere.radius_R;
  const double k = kTwoPi / L;
  return {harmonic_integral(z0, R, k, 5, L / 2.0, spec),
          harmonic_integral(z0, R, 2.0 * k, 6, L / 4.0, spec)};
}

QuadratureResult lateral_force_from_integrals(const HarmonicIntegrals& integrals, double x0,
                                              const ExperimentConfig& config, Harmonics harmonics) {
  const double A = config.plate.amplitude_A;
  const double L = config.plate.period_L;
  const double pref = kPi * kPi * kPi * kHbarC / 30.0 * (A / L);
  const double t = detail::turns(x0, L);
  const double w1 = harmonics == Harmonics::kSecondOnly ? 0.0 : pref * detail::cos_turns(t);
  const double w2 = harmonics == Harmonics::kFirstOnly ? 0.0 : pref * 2.5 * A * detail::sin_turns(2.0 * t);

  QuadratureResult r;
  r.value = w1 * integrals.first.value + w2 * integrals.second.value;
  r.error_estimate = std::fabs(w1) * integrals.first.error_estimate +
                     std::fabs(w2) * integrals.second.error_estimate;
  r.subdivisions = integrals.first.subdivisions + integrals.second.subdivisions;
  r.evaluations = integrals.first.evaluations + integrals.second.evaluations;
  return r;
}

QuadratureResult lateral_force_numeric(const SpherePose& pose, const ExperimentConfig& config,
                                       const QuadratureSpec& spec, Harmonics harmonics) {
  const auto integrals = lateral_harmonic_integrals(pose.z0, config, spec);
  return lateral_force_from_integrals(integrals, pose.x0, config, harmonics);
}

OracleReport make_report(double closed_form, const QuadratureResult& numeric) {
  OracleReport r;
  r.closed_form = closed_form;
  r.numeric = numeric.value;
  r.quadrature_error_estimate = numeric.error_estimate;
  const double aligned = kSummationToClosedFormSign * numeric.value;
  const double denom = std::max({std::fabs(closed_form), std::fabs(numeric.value), kRelDiffFloor});
  r.rel_diff = std::fabs(closed_form - aligned) / denom;
  r.sign_flipped = closed_form * numeric.value < 0.0;
  return r;
}

OracleReport compare_lateral(const SpherePose& pose, const ExperimentConfig& config,
                             const QuadratureSpec& spec, Harmonics closed_terms) {
  const double closed = lateral_force(pose, config, closed_terms);
  return make_report(closed, lateral_force_numeric(pose, config, spec));
}

std::vector<OracleRow> validate_lateral_grid(const ExperimentConfig& config,
                                             const std::vector<double>& x0s,
                                             const std::vector<double>& z0s,
                                             const std::vector<double>& amplitude_scales,
                                             const QuadratureSpec& spec) {
  std::vector<OracleRow> rows;
  rows.reserve(x0s.size() * z0s.size() * amplitude_scales.size());
  for (double z0 : z0s) {
    const auto integrals = lateral_harmonic_integrals(z0, config, spec);
    for (double scale : amplitude_scales) {
      ExperimentConfig scaled = config;
      scaled.plate.amplitude_A = config.plate.amplitude_A * scale;
      for (double x0 : x0s) {
        const SpherePose pose{x0, z0};
        const auto numeric = lateral_force_from_integrals(integrals, x0, scaled);
        rows.push_back({x0, z0, scale, scaled.plate.amplitude_A,
                        make_report(lateral_force(pose, scaled), numeric),
                        make_report(lateral_force(pose, scaled, Harmonics::kFirstOnly), numeric)});
      }
    }
  }
  return rows;
}

std::string oracle_rows_to_json(const std::vector<OracleRow>& rows, const ExperimentConfig& config) {
  auto report_json = [](const OracleReport& r) {
    return nlohmann::json{{"closed_form_pN", r.closed_form},
                          {"numeric_pN", r.numeric},
                          {"rel_diff", r.rel_diff},
                          {"quadrature_error_estimate_pN", r.quadrature_error_estimate},
                          {"sign_flipped", r.sign_flipped}};
  };
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : rows) {
    arr.push_back({{"x0_nm", row.x0_nm},
                   {"z0_nm", row.z0_nm},
                   {"amplitude_scale", row.amplitude_scale},
                   {"amplitude_nm", row.amplitude_nm},
                   {"same_order", report_json(row.same_order)},
                   {"first_order", report_json(row.first_order)}});
  }
  nlohmann::json j;
  j["metadata"] = {{"config", detail::config_json(config)},
                   {"sign_convention", kSummationToClosedFormSign}};
  j["reports"] = std::move(arr);
  return j.dump(2);
}

std::string oracle_rows_to_table(const std::vector<OracleRow>& rows) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%10s %8s %10s %14s %14s %12s %12s %5s\n", "x0_nm", "z0_nm",
                "A_nm", "closed_pN", "numeric_pN", "rel_same", "rel_first", "flip");
  out << line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%10.3f %8.2f %10.5f %14.6e %14.6e %12.3e %12.3e %5s\n",
                  r.x0_nm, r.z0_nm, r.amplitude_nm, r.same_order.closed_form, r.same_order.numeric,
                  r.same_order.rel_diff, r.first_order.rel_diff,
                  r.same_order.sign_flipped ? "yes" : "no");
    out << line;
  }
  return out.str();
}

}  // namespace casimir
