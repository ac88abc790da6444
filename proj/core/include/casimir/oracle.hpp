#pragma once

// Brute-force checks of the closed-form lateral force.
//
// The additive (pairwise-summation) route integrates the atom-level
// lateral force over the lower half of the sphere, in cylindrical
// coordinates about the vertical axis through the sphere bottom:
//
//   F_x = (pi^3 hbar c / 30) (A/L) [ cos(2 pi x0/L) I_5(2 pi/L)
//                                  + (5/2) A sin(4 pi x0/L) I_6(4 pi/L) ]
//   I_p(q) = int_0^R rho drho int_0^{R - sqrt(R^2 - rho^2)} dz (z0+z)^-p
//              int_0^{2 pi} dphi cos(q rho cos phi)
//
// Evaluating the phi- and z-integrals exactly and keeping the leading term
// in z0/R gives the closed form in lateral_force.hpp, up to an overall sign:
// the summation route is positive at x0 = 0 for J1(2 pi R/L) > 0 while the
// closed form, written with the attractive F0 < 0, is negative there.
// OracleReport aligns the two with kSummationToClosedFormSign and records
// the flip explicitly.

#include <string>
#include <vector>

#include "casimir/lateral_force.hpp"
#include "casimir/model.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

inline constexpr double kSummationToClosedFormSign = -1.0;

/// Denominator floor for OracleReport::rel_diff, in pN.
inline constexpr double kRelDiffFloor = 1e-15;

/// Interaction constant and atomic densities of the pairwise-summation
/// model. Units are arbitrary but must be used consistently; the constants
/// cancel from the macroscopic force.
class AdditiveConstants {
 public:
  AdditiveConstants(double C, double n_p, double n_s);

  [[nodiscard]] double C() const { return C_; }
  [[nodiscard]] double n_p() const { return n_p_; }
  [[nodiscard]] double n_s() const { return n_s_; }
  /// K = 24 C n_p n_s / (pi hbar c), from matching the plate-plate result.
  [[nodiscard]] double K() const { return K_; }

 private:
  double C_;
  double n_p_;
  double n_s_;
  double K_;
};

/// Lateral force on one sphere atom at (xA, zA) from the corrugated plate,
/// second order in A/zA. Throws DomainError unless zA > A.
[[nodiscard]] double atom_lateral_force(double xA, double zA, const CorrugatedPlate& plate,
                                        const AdditiveConstants& consts);

/// (n_s/K) (4 pi^2 n_p C / 5) / (pi^3 hbar c / 30); identically 1.
[[nodiscard]] double prefactor_cancellation_check(const AdditiveConstants& consts);

struct ZIntegral {
  double exact;      ///< int_0^h dz / (z0 + z)^p
  double truncated;  ///< z0^(1-p) / (p-1), the h -> infinity value
  double truncation_rel_error;  ///< (truncated - exact) / exact; +inf for h = 0
};

/// Closed form of the vertical integral for p in {5, 6}. h may be +inf.
[[nodiscard]] ZIntegral z_integral_closed_form(double z0, double h, int power);

/// I_5(2 pi/L) and I_6(4 pi/L) with their quadrature error estimates. They
/// do not depend on A or x0.
struct HarmonicIntegrals {
  QuadratureResult first;
  QuadratureResult second;
};

/// Nested adaptive quadrature of both harmonic integrals at height z0. The
/// z-level uses tolerances 10x tighter than `spec`, the phi-level 100x.
[[nodiscard]] HarmonicIntegrals lateral_harmonic_integrals(double z0, const ExperimentConfig& config,
                                                           const QuadratureSpec& spec);

/// Assemble the summation-route force from precomputed integrals.
[[nodiscard]] QuadratureResult lateral_force_from_integrals(const HarmonicIntegrals& integrals,
                                                            double x0,
                                                            const ExperimentConfig& config,
                                                            Harmonics harmonics = Harmonics::kBoth);

/// The summation-route lateral force in pN (sign as produced by the pairwise
/// sum; see kSummationToClosedFormSign). Throws DomainError for z0 <= 0 and
/// QuadratureError on non-convergence.
[[nodiscard]] QuadratureResult lateral_force_numeric(const SpherePose& pose,
                                                     const ExperimentConfig& config,
                                                     const QuadratureSpec& spec,
                                                     Harmonics harmonics = Harmonics::kBoth);

struct OracleReport {
  double closed_form = 0.0;  ///< pN
  double numeric = 0.0;      ///< pN, summation route, raw sign
  /// |closed_form - s*numeric| / max(|closed_form|, |numeric|, kRelDiffFloor),
  /// s = kSummationToClosedFormSign.
  double rel_diff = 0.0;
  double quadrature_error_estimate = 0.0;  ///< pN
  bool sign_flipped = false;  ///< closed_form and numeric have opposite signs
};

[[nodiscard]] OracleReport make_report(double closed_form, const QuadratureResult& numeric);

/// Compare lateral_force (restricted to `closed_terms`) with the full
/// summation-route integral.
[[nodiscard]] OracleReport compare_lateral(const SpherePose& pose, const ExperimentConfig& config,
                                           const QuadratureSpec& spec,
                                           Harmonics closed_terms = Harmonics::kBoth);

/// One point of the validation grid. `same_order` compares like with like
/// (both routes to second order in A); `first_order` compares the full
/// numeric integral with the first-harmonic closed form, whose difference is
/// the second-order term and so shrinks linearly with A.
struct OracleRow {
  double x0_nm;
  double z0_nm;
  double amplitude_scale;
  double amplitude_nm;
  OracleReport same_order;
  OracleReport first_order;
};

[[nodiscard]] std::vector<OracleRow> validate_lateral_grid(const ExperimentConfig& config,
                                                           const std::vector<double>& x0s,
                                                           const std::vector<double>& z0s,
                                                           const std::vector<double>& amplitude_scales,
                                                           const QuadratureSpec& spec);

[[nodiscard]] std::string oracle_rows_to_json(const std::vector<OracleRow>& rows,
                                              const ExperimentConfig& config);
[[nodiscard]] std::string oracle_rows_to_table(const std::vector<OracleRow>& rows);

}  // namespace casimir
