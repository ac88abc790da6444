#include "casimir/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace casimir {

namespace {

// Kronrod 21-point abscissae on [-1, 1] (non-negative half); odd indices
// are the 10-point Gauss nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208932299525, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
  double lo;
  double hi;
  double value;
  double error;
  double floor;  // roundoff limit of `error`
};

struct ByError {
  bool operator()(const Segment& a, const Segment& b) const {
    if (a.error != b.error) return a.error < b.error;
    return a.lo > b.lo;  // deterministic order on ties
  }
};

Segment gauss_kronrod(const Integrand& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  const double fc = f(center);
  double kronrod = fc * kWgk[10];
  double gauss = 0.0;
  double abs_sum = std::fabs(kronrod);
  std::array<double, 10> f1{}, f2{};
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = f(center - dx);
    f2[j] = f(center + dx);
    const double pair = f1[j] + f2[j];
    kronrod += kWgk[j] * pair;
    abs_sum += kWgk[j] * (std::fabs(f1[j]) + std::fabs(f2[j]));
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }

  // QUADPACK error heuristic
  const double mean = 0.5 * kronrod;
  double asc = kWgk[10] * std::fabs(fc - mean);
  for (int j = 0; j < 10; ++j) asc += kWgk[j] * (std::fabs(f1[j] - mean) + std::fabs(f2[j] - mean));

  const double value = kronrod * half;
  asc *= std::fabs(half);
  abs_sum *= std::fabs(half);
  double err = std::fabs((kronrod - gauss) * half);
  if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double floor = 0.0;
  if (abs_sum > std::numeric_limits<double>::min() / (50.0 * eps)) floor = 50.0 * eps * abs_sum;
  return {lo, hi, value, std::max(err, floor), floor};
}

QuadratureResult run_adaptive(const Integrand& f, std::span<const double> breaks,
                              const QuadratureSpec& spec) {
  spec.validate();
  if (breaks.size() < 2) throw DomainError("integration needs at least two breakpoints");
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    if (!(breaks[i] >= breaks[i - 1]) || !std::isfinite(breaks[i]) || !std::isfinite(breaks[i - 1]))
      throw DomainError("integration limits must be finite and non-decreasing");
  }

  std::vector<Segment> heap_storage;
  heap_storage.reserve(breaks.size() + static_cast<std::size_t>(spec.max_subdivisions) + 1);
  std::priority_queue<Segment, std::vector<Segment>, ByError> heap(ByError{}, std::move(heap_storage));

  QuadratureResult r;
  double floor_sum = 0.0;
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    if (breaks[i] == breaks[i - 1]) continue;
    Segment s = gauss_kronrod(f, breaks[i - 1], breaks[i]);
    r.value += s.value;
    r.error_estimate += s.error;
    floor_sum += s.floor;
    r.evaluations += 21;
    heap.push(s);
  }
  if (heap.empty()) return r;

  auto target = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::fabs(r.value)); };
  auto resum = [&] {
    // Recompute from scratch to drop drift in the running sums.
    auto copy = heap;
    double v = 0.0, e = 0.0, fl = 0.0;
    while (!copy.empty()) {
      v += copy.top().value;
      e += copy.top().error;
      fl += copy.top().floor;
      copy.pop();
    }
    r.value = v;
    r.error_estimate = e;
    floor_sum = fl;
  };
  // Only the part of the estimate above the roundoff floor can be reduced
  // by splitting, so that part is what must meet the tolerance.
  auto converged = [&] { return r.error_estimate - floor_sum <= target(); };

  while (true) {
    if (converged()) {
      resum();
      if (converged()) return r;
    }
    if (r.subdivisions >= spec.max_subdivisions) {
      resum();
      throw QuadratureError("quadrature did not converge within " +
                                std::to_string(spec.max_subdivisions) + " subdivisions",
                            r);
    }
    const Segment worst = heap.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      resum();
      throw QuadratureError("quadrature interval can no longer be subdivided", r);
    }
    heap.pop();
    const Segment left = gauss_kronrod(f, worst.lo, mid);
    const Segment right = gauss_kronrod(f, mid, worst.hi);
    r.value += left.value + right.value - worst.value;
    r.error_estimate += left.error + right.error - worst.error;
    floor_sum += left.floor + right.floor - worst.floor;
    r.evaluations += 42;
    ++r.subdivisions;
    heap.push(left);
    heap.push(right);
  }
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0)) throw DomainError("quadrature rel_tol must be positive");
  if (!(abs_tol >= 0.0)) throw DomainError("quadrature abs_tol must be non-negative");
  if (max_subdivisions < 1) throw DomainError("quadrature max_subdivisions must be at least 1");
}

QuadratureSpec QuadratureSpec::tightened(double factor) const {
  QuadratureSpec s = *this;
  s.rel_tol /= factor;
  s.abs_tol /= factor;
  return s;
}

QuadratureResult integrate_1d(const Integrand& f, double lo, double hi, const QuadratureSpec& spec) {
  if (hi < lo) throw DomainError("integrate_1d needs lo <= hi");
  const std::array<double, 2> breaks = {lo, hi};
  return run_adaptive(f, breaks, spec);
}

QuadratureResult integrate_panels(const Integrand& f, std::span<const double> breakpoints,
                                  const QuadratureSpec& spec) {
  return run_adaptive(f, breakpoints, spec);
}

double integrate_periodic(const Integrand& f, double lo, double hi, int n) {
  if (n < 1) throw DomainError("integrate_periodic needs at least one node");
  if (!(hi >= lo)) throw DomainError("integrate_periodic needs lo <= hi");
  const double h = (hi - lo) / n;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += f(lo + i * h);
  return sum * h;
}

}  // namespace casimir
