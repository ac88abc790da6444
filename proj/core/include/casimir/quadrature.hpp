#pragma once

#include <functional>
#include <span>
#include <string>

#include "casimir/error.hpp"

namespace casimir {

using Integrand = std::function<double(double)>;

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  int max_subdivisions = 2000;

  void validate() const;
  /// Same spec with both tolerances divided by `factor`.
  [[nodiscard]] QuadratureSpec tightened(double factor) const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
  int evaluations = 0;
};

/// Raised when the subdivision budget runs out; carries the best estimate.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, QuadratureResult best)
      : Error(what), best_(best) {}
  [[nodiscard]] const QuadratureResult& best_estimate() const noexcept { return best_; }

 private:
  QuadratureResult best_;
};

/// Globally adaptive 21-point Gauss-Kronrod integration over [lo, hi].
/// Converged when the summed error estimate, less its roundoff floor of
/// 50 eps times the integral of |f|, is at most max(abs_tol, rel_tol * |value|).
[[nodiscard]] QuadratureResult integrate_1d(const Integrand& f, double lo, double hi,
                                            const QuadratureSpec& spec = {});

/// As integrate_1d, but starting from the panels delimited by `breakpoints`
/// (sorted, at least two entries). Use this for piecewise integrands and for
/// oscillatory ones, with one panel per half-oscillation or so.
[[nodiscard]] QuadratureResult integrate_panels(const Integrand& f,
                                                std::span<const double> breakpoints,
                                                const QuadratureSpec& spec = {});

/// Trapezoid rule on n equispaced nodes, exact up to aliasing for a smooth
/// function periodic on [lo, hi]; converges geometrically for analytic ones.
[[nodiscard]] double integrate_periodic(const Integrand& f, double lo, double hi, int n);

}  // namespace casimir
