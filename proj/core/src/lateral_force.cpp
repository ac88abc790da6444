#include "casimir/lateral_force.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <json.hpp>

#include "casimir/detail/format.hpp"
#include "casimir/detail/turns.hpp"
#include "casimir/error.hpp"
#include "casimir/specfun.hpp"
#include "casimir/vertical_force.hpp"

namespace casimir {

namespace {

using constants::kPi;

struct BesselPair {
  double first;   // J1(2 pi R / L)
  double second;  // J1(4 pi R / L)
};

BesselPair bessel_pair(const ExperimentConfig& config) {
  const double kR = 2.0 * kPi * config.sphere.radius_R / config.plate.period_L;
  return {bessel_j1(kR), bessel_j1(2.0 * kR)};
}

double evaluate(double x0, double z0, const ExperimentConfig& config, const BesselPair& j,
                Harmonics harmonics) {
  const double eps = config.plate.amplitude_A / z0;
  const double t = detail::turns(x0, config.plate.period_L);
  double bracket = 0.0;
  if (harmonics != Harmonics::kSecondOnly) bracket += detail::cos_turns(t) * j.first;
  if (harmonics != Harmonics::kFirstOnly) bracket += eps * detail::sin_turns(2.0 * t) * j.second;
  return 3.0 * force_ideal_plate_sphere(z0, config.sphere.radius_R) * eps * bracket;
}

}  // namespace

double lateral_force(const SpherePose& pose, const ExperimentConfig& config, Harmonics harmonics) {
  if (!(pose.z0 > 0.0)) throw DomainError("lateral force needs z0 > 0");
  return evaluate(pose.x0, pose.z0, config, bessel_pair(config), harmonics);
}

double lateral_z0_from_separation(double a, const ExperimentConfig& config) {
  return a - config.roughness_offset();
}

double second_to_first_harmonic_ratio(double z0, const ExperimentConfig& config) {
  if (!(z0 > 0.0)) throw DomainError("lateral force needs z0 > 0");
  const auto j = bessel_pair(config);
  return config.plate.amplitude_A / z0 * std::fabs(j.second / j.first);
}

std::string_view to_string(Stability s) {
  return s == Stability::kStable ? "stable" : "unstable";
}

std::vector<Equilibrium> find_equilibria(double z0, const ExperimentConfig& config,
                                         const EquilibriumSearch& search) {
  if (!(z0 > 0.0)) throw DomainError("lateral force needs z0 > 0");
  if (!(config.plate.amplitude_A > 0.0)) {
    throw DomainError("lateral force identically zero; no isolated equilibria");
  }
  if (search.samples < 4) throw DomainError("equilibrium scan needs at least 4 samples");
  if (!(search.tolerance_fraction > 0.0)) throw DomainError("bisection tolerance must be positive");

  const double L = config.plate.period_L;
  const auto j = bessel_pair(config);
  auto force = [&](double x) { return evaluate(x, z0, config, j, Harmonics::kBoth); };

  const int n = search.samples;
  std::vector<double> xs(n + 1), fs(n + 1);
  for (int i = 0; i <= n; ++i) {
    xs[i] = L * i / n;
    fs[i] = i < n ? force(xs[i]) : fs[0];
  }

  std::vector<double> roots;
  const double tol = search.tolerance_fraction * L;
  for (int i = 0; i < n; ++i) {
    if (fs[i] == 0.0) {
      roots.push_back(xs[i]);
      continue;
    }
    if (!(fs[i] * fs[i + 1] < 0.0)) continue;
    double lo = xs[i], hi = xs[i + 1], flo = fs[i];
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      const double fm = force(mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((fm < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    double root = 0.5 * (lo + hi);
    if (root >= L) root -= L;
    roots.push_back(root);
  }
  std::sort(roots.begin(), roots.end());

  const double h = 1e-5 * L;
  std::vector<Equilibrium> out;
  out.reserve(roots.size());
  for (double x : roots) {
    const double stiffness = -(force(x + h) - force(x - h)) / (2.0 * h);
    out.push_back({x, stiffness > 0.0 ? Stability::kStable : Stability::kUnstable, stiffness});
  }
  return out;
}

std::vector<LateralSample> lateral_map(double z0, const ExperimentConfig& config, int steps) {
  if (steps < 1) throw DomainError("lateral map needs at least one step");
  if (!(z0 > 0.0)) throw DomainError("lateral force needs z0 > 0");
  const auto j = bessel_pair(config);
  std::vector<LateralSample> out;
  out.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double x = config.plate.period_L * i / steps;
    out.push_back({x, z0, evaluate(x, z0, config, j, Harmonics::kBoth)});
  }
  return out;
}

void write_lateral_csv(std::ostream& out, const std::vector<LateralSample>& samples) {
  out << "x0_nm,z0_nm,Fx_pN\n";
  for (const auto& s : samples) {
    out << detail::fmt_num(s.x0_nm) << ',' << detail::fmt_num(s.z0_nm) << ','
        << detail::fmt_num(s.Fx_pN) << '\n';
  }
}

std::string equilibria_to_json(const std::vector<Equilibrium>& roots) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : roots) {
    arr.push_back({{"x0_nm", e.x0},
                   {"stability", std::string(to_string(e.stability))},
                   {"stiffness_pN_per_nm", e.restoring_stiffness}});
  }
  return arr.dump(2);
}

}  // namespace casimir
