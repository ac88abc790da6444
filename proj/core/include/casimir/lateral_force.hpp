#pragma once

// Closed-form lateral force on a large sphere above a sinusoidal
// corrugation (perfect metal), to second order in A / z0, and the
// equilibrium positions it implies.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "casimir/model.hpp"

namespace casimir {

/// Selects which harmonic of the lateral force to evaluate. The split
/// exists for scaling studies and for comparing orders of the expansion.
enum class Harmonics {
  kBoth,
  kFirstOnly,   ///< cos(2 pi x0 / L) term, first order in A
  kSecondOnly,  ///< sin(4 pi x0 / L) term, second order in A
};

/// F_x(x0, z0) = 3 F0(z0) (A/z0) [cos(2 pi x0/L) J1(2 pi R/L)
///                               + (A/z0) sin(4 pi x0/L) J1(4 pi R/L)]
/// with F0 the perfect-metal plate-sphere force. Periodic in x0.
/// Throws DomainError for z0 <= 0.
[[nodiscard]] double lateral_force(const SpherePose& pose, const ExperimentConfig& config,
                                   Harmonics harmonics = Harmonics::kBoth);

/// Lateral-channel height for a vertical-channel separation a:
/// z0 = a - A_p - A_s.
[[nodiscard]] double lateral_z0_from_separation(double a, const ExperimentConfig& config);

/// Ratio of the second to the first harmonic amplitude,
/// (A/z0) |J1(4 pi R/L) / J1(2 pi R/L)|. Not assumed small.
[[nodiscard]] double second_to_first_harmonic_ratio(double z0, const ExperimentConfig& config);

enum class Stability { kStable, kUnstable };

[[nodiscard]] std::string_view to_string(Stability s);

struct Equilibrium {
  double x0;                   ///< nm, in [0, L)
  Stability stability;
  double restoring_stiffness;  ///< -dF_x/dx0 at the root, pN/nm
};

struct EquilibriumSearch {
  int samples = 4096;             ///< sign-change scan points per period
  double tolerance_fraction = 1e-6;  ///< bisection stops at this fraction of L
};

/// All zeros of lateral_force in [0, L) at height z0, sorted by x0, each
/// classified by the sign of a central-difference derivative.
/// Throws DomainError when A = 0 (the force vanishes identically).
[[nodiscard]] std::vector<Equilibrium> find_equilibria(double z0, const ExperimentConfig& config,
                                                       const EquilibriumSearch& search = {});

struct LateralSample {
  double x0_nm;
  double z0_nm;
  double Fx_pN;
};

/// lateral_force on `steps` equispaced x0 in [0, L).
[[nodiscard]] std::vector<LateralSample> lateral_map(double z0, const ExperimentConfig& config,
                                                     int steps);

/// "x0_nm,z0_nm,Fx_pN" header then one row per sample.
void write_lateral_csv(std::ostream& out, const std::vector<LateralSample>& samples);

/// JSON array of {x0_nm, stability, stiffness_pN_per_nm}.
[[nodiscard]] std::string equilibria_to_json(const std::vector<Equilibrium>& roots);

}  // namespace casimir
