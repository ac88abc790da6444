#include "casimir/specfun.hpp"

#include <cmath>
#include <numbers>

#include "casimir/error.hpp"

namespace casimir {

namespace {

// Below this the power series is summed in long double; above it the
// Hankel expansion has its smallest term under 1e-17.
constexpr double kSeriesLimit = 20.0;

long double series(int order, long double z) {
  const long double half = z / 2;
  const long double q = -half * half;
  long double term = order == 0 ? 1.0L : half;
  long double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<long double>(k) * (k + order));
    sum += term;
    if (std::fabs(term) < 1e-22L * std::fabs(sum) && std::fabs(term) < 1e-24L) break;
  }
  return sum;
}

// J_n(z) ~ sqrt(2/(pi z)) [P cos(chi) - Q sin(chi)], chi = z - (n/2 + 1/4) pi.
long double hankel(int order, long double z) {
  const long double mu = 4.0L * order * order;
  const long double eight_z = 8.0L * z;

  long double p = 1.0L;
  long double q = 0.0L;
  long double term = 1.0L;
  long double last = INFINITY;
  for (int k = 1; k < 60; ++k) {
    const long double odd = 2.0L * k - 1.0L;
    term *= (mu - odd * odd) / (k * eight_z);
    const long double mag = std::fabs(term);
    if (mag > last) break;  // asymptotic series started to diverge
    last = mag;
    // a_k contributes to Q for odd k and to P for even k, with alternating signs
    switch (k % 4) {
      case 1: q += term; break;
      case 2: p -= term; break;
      case 3: q -= term; break;
      case 0: p += term; break;
    }
    if (mag < 1e-21L) break;
  }

  // Expand cos/sin(z - phase) exactly so the large argument is reduced once,
  // by libm, instead of after subtracting an inexact multiple of pi.
  const long double c = std::cos(z);
  const long double s = std::sin(z);
  constexpr long double r = 0.707106781186547524400844362104849039L;
  long double cos_chi, sin_chi;
  if (order == 0) {
    cos_chi = (c + s) * r;
    sin_chi = (s - c) * r;
  } else {
    cos_chi = (s - c) * r;
    sin_chi = -(s + c) * r;
  }
  const long double amp = std::sqrt(2.0L / (std::numbers::pi_v<long double> * z));
  return amp * (p * cos_chi - q * sin_chi);
}

}  // namespace

double bessel_j(int order, double z) {
  if (order != 0 && order != 1) throw DomainError("bessel_j supports orders 0 and 1 only");
  if (std::isnan(z)) throw DomainError("bessel_j argument is NaN");
  if (std::isinf(z)) return 0.0;

  const double az = std::fabs(z);
  const long double v = az <= kSeriesLimit ? series(order, az) : hankel(order, az);
  const double out = static_cast<double>(v);
  return (order == 1 && z < 0.0) ? -out : out;
}

double bessel_j0(double z) { return bessel_j(0, z); }
double bessel_j1(double z) { return bessel_j(1, z); }

double radial_bessel_integral(double k, double R) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("radial_bessel_integral needs k > 0");
  if (!(R > 0.0) || !std::isfinite(R)) throw DomainError("radial_bessel_integral needs R > 0");
  const double x = k * R;
  if (x < 1e-3) {
    // R^2 * J1(x)/x, series to O(x^6)
    const double x2 = x * x;
    return R * R * (0.5 - x2 / 16.0 + x2 * x2 / 384.0);
  }
  return R * bessel_j1(x) / k;
}

}  // namespace casimir
