#pragma once

// Bessel functions of the first kind, orders 0 and 1, for real arguments.
//
// Accuracy: absolute error below 1e-10 for |z| <= 10; above that the error
// is below 1e-8 relative to the envelope sqrt(2/(pi z)) (relative error
// proper is meaningless near the zeros).

namespace casimir {

/// J_order(z) for order in {0, 1}. Negative z is handled by parity.
/// Throws DomainError for other orders or NaN.
[[nodiscard]] double bessel_j(int order, double z);

[[nodiscard]] double bessel_j0(double z);
[[nodiscard]] double bessel_j1(double z);

/// Closed form of the integral of rho * J0(k rho) over [0, R], i.e.
/// R J1(kR) / k, with the small-kR limit R^2/2 taken without cancellation.
[[nodiscard]] double radial_bessel_integral(double k, double R);

}  // namespace casimir
