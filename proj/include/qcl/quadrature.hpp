#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace qcl {

// Double-exponential (tanh-sinh) quadrature on a finite interval.
//
// The substitution x = tanh((pi/2) sinh u) pushes endpoint singularities
// like (b - x)^(-1/2) into a super-exponentially decaying transformed
// integrand, so one scheme covers every power-law density here.
//
// Integrands are called as f(x, d) where d > 0 is the distance from x to
// the nearest endpoint. Using d instead of recomputing b - x avoids the
// cancellation that would otherwise zero out the singular factor once
// x rounds to the endpoint.

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = std::numeric_limits<double>::infinity();
  int levels = 0;
  bool converged = false;
};

namespace detail {

// Weight underflows (and cosh^2 overflows) past this; the skipped tail is
// far below any tolerance used in the library.
inline constexpr double kMaxHalfAngle = 340.0;
inline constexpr double kUMax = 6.0;

template <class F>
double de_level_sum(F&& f, double mid, double scale, double h, bool odd_only) {
  double sum = 0.0;
  const int step = odd_only ? 2 : 1;
  const int start = odd_only ? 1 : 0;
  for (int k = start;; k += step) {
    const double u = k * h;
    if (u > kUMax) break;
    const double v = 1.5707963267948966 * std::sinh(u);
    if (v > kMaxHalfAngle) break;
    const double ch = std::cosh(v);
    const double w = 1.5707963267948966 * std::cosh(u) / (ch * ch);
    // 1 - tanh(v) without cancellation: distance of the abscissa from +-1
    const double one_minus_t = 2.0 / (1.0 + std::exp(2.0 * v));
    const double t = 1.0 - one_minus_t;
    const double d = scale * one_minus_t;
    if (d <= 0.0 || w <= 0.0) break;

    double term;
    if (k == 0) {
      term = f(mid, scale) * w;
    } else {
      const double xp = mid + scale * t;
      const double xm = mid - scale * t;
      term = (f(xp, d) + f(xm, d)) * w;
    }
    if (!std::isfinite(term)) {
      throw std::runtime_error("quadrature: non-finite integrand value");
    }
    sum += term;
  }
  return sum;
}

}  // namespace detail

// Integrates f(x, dist_to_nearest_endpoint) over (a, b).
// abs_tol is an absolute tolerance on the result; max_halvings caps the
// step refinement (the step starts at 1 and halves each level).
template <class F>
QuadratureResult integrate_singular(F&& f, double a, double b, double abs_tol,
                                    int max_halvings = 12) {
  if (!(b > a)) throw std::invalid_argument("quadrature: empty interval");
  const double mid = 0.5 * (a + b);
  const double scale = 0.5 * (b - a);

  double h = 1.0;
  double sum = detail::de_level_sum(f, mid, scale, h, /*odd_only=*/false);
  QuadratureResult res;
  res.value = scale * h * sum;

  for (int level = 1; level <= max_halvings; ++level) {
    h *= 0.5;
    sum += detail::de_level_sum(f, mid, scale, h, /*odd_only=*/true);
    const double value = scale * h * sum;
    res.error_estimate = std::abs(value - res.value);
    res.value = value;
    res.levels = level;
    if (level >= 3 && res.error_estimate <= abs_tol) {
      res.converged = true;
      break;
    }
  }
  return res;
}

// Same, for integrands that never look at the endpoint distance.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, double abs_tol,
                           int max_halvings = 12) {
  return integrate_singular([&f](double x, double) { return f(x); }, a, b,
                            abs_tol, max_halvings);
}

// Throwing wrapper used where the caller has no fallback.
template <class F>
double integrate_singular_or_throw(F&& f, double a, double b, double abs_tol,
                                   int max_halvings = 12) {
  QuadratureResult r =
      integrate_singular(std::forward<F>(f), a, b, abs_tol, max_halvings);
  if (!r.converged) {
    char msg[128];
    std::snprintf(msg, sizeof(msg),
                  "quadrature failed to converge: error estimate %.3g after "
                  "%d refinements",
                  r.error_estimate, r.levels);
    throw std::runtime_error(msg);
  }
  return r.value;
}

}  // namespace qcl
