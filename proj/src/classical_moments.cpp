#include "qcl/classical_moments.hpp"

#include <cmath>
#include <stdexcept>

#include "qcl/quadrature.hpp"
#include "qcl/special_functions.hpp"

namespace qcl {
namespace {

constexpr double kQuadTol = 1e-10;

// E - U(x) for a power potential, stable against cancellation at the
// turning point: with |x| = x_max - d,
//   E - U = -E expm1(b log1p(-d / x_max)).
// For |x| > x_max/2 the nearest support endpoint is the turning point on
// that side, so the integrator's endpoint distance is exactly d.
double energy_gap_power(int b, double energy, double x_max, double abs_x,
                        double dist) {
  if (abs_x > 0.5 * x_max) {
    return -energy * std::expm1(b * std::log1p(-dist / x_max));
  }
  return energy - std::pow(abs_x, b);
}

struct PowerSupport {
  double lo, hi, x_max;
};

PowerSupport power_support(const PotentialSpec& spec, double energy) {
  const double xm = turning_point(spec, energy);
  if (spec.is_symmetric()) return {-xm, xm, xm};
  return {0.0, xm, xm};
}

// Integral over the classical support, split at x = 0 for symmetric
// potentials: |x| has a corner there that would spoil the
// double-exponential convergence if it sat mid-interval.
template <class G>
double support_integral(const PowerSupport& s, G&& g, double tol) {
  if (s.lo < 0.0) {
    return integrate_singular_or_throw(g, s.lo, 0.0, tol) +
           integrate_singular_or_throw(g, 0.0, s.hi, tol);
  }
  return integrate_singular_or_throw(g, s.lo, s.hi, tol);
}

}  // namespace

ClassicalDensity classical_density(const PotentialSpec& spec, double energy) {
  if (energy <= 0.0) {
    throw std::invalid_argument("classical density requires E > 0");
  }
  ClassicalDensity d{spec, energy, 0.0, 0.0, 0.0};
  if (spec.is_power()) {
    const PowerSupport s = power_support(spec, energy);
    d.x_lo = s.lo;
    d.x_hi = s.hi;
    const int b = spec.exponent();
    d.normalization = support_integral(
        s,
        [&](double x, double dist) {
          return 1.0 / std::sqrt(energy_gap_power(b, energy, s.x_max,
                                                  std::abs(x), dist));
        },
        kQuadTol);
  } else {
    const double a = spec.box_half_width();
    d.x_lo = spec.is_symmetric() ? -a : 0.0;
    d.x_hi = a;
    // Uniform speed inside the box.
    d.normalization = (d.x_hi - d.x_lo) / std::sqrt(energy);
  }
  return d;
}

double classical_average(const PotentialSpec& spec, double energy,
                         const std::function<double(double, double)>& f) {
  if (energy <= 0.0) {
    throw std::invalid_argument("classical average requires E > 0");
  }
  if (!spec.is_power()) {
    // Box: uniform density, |P| = 1 everywhere.
    const double a = spec.box_half_width();
    const double lo = spec.is_symmetric() ? -a : 0.0;
    const PowerSupport s{lo, a, a};
    const double integral = support_integral(
        s,
        [&](double x, double) {
          const double big_x = x / a;
          return 0.5 * (f(big_x, -1.0) + f(big_x, 1.0));
        },
        kQuadTol);
    return integral / (a - lo);
  }

  const PowerSupport s = power_support(spec, energy);
  const int b = spec.exponent();
  const double avg = support_integral(
      s,
      [&](double x, double dist) -> double {
        const double gap =
            energy_gap_power(b, energy, s.x_max, std::abs(x), dist);
        const double w = 1.0 / std::sqrt(gap);
        const double big_x = x / s.x_max;
        const double big_p = std::sqrt(gap / energy);
        return 0.5 * w * (f(big_x, -big_p) + f(big_x, big_p));
      },
      kQuadTol);
  const double z = support_integral(
      s,
      [&](double x, double dist) {
        return 1.0 / std::sqrt(energy_gap_power(b, energy, s.x_max,
                                                std::abs(x), dist));
      },
      kQuadTol);
  return avg / z;
}

double classical_moment_closed_form(int b, Family family, int k) {
  if (!family_is_power(family)) {
    throw std::invalid_argument(
        "closed-form classical moments exist only for power families");
  }
  if (b < 1) throw std::invalid_argument("b must be >= 1");
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  if (k == 0) return 1.0;
  if (family_is_symmetric(family) && k % 2 == 1) return 0.0;
  return std::exp(log_beta((k + 1.0) / b, 0.5) - log_beta(1.0 / b, 0.5));
}

UncertaintyRecord classical_dispersion_product(const PotentialSpec& spec,
                                               double energy) {
  if (energy <= 0.0) {
    throw std::invalid_argument("classical dispersion requires E > 0");
  }
  UncertaintyRecord rec{spec};
  MomentSet& m = rec.classical;
  m.frame = dimensionless_frame(spec, energy);
  if (spec.is_power()) {
    m.x_mean =
        classical_average(spec, energy, [](double x, double) { return x; });
    m.x2 = classical_average(spec, energy,
                             [](double x, double) { return x * x; });
    m.x4 = classical_moment_closed_form(spec.exponent(), spec.family(), 4);
    m.p_mean =
        classical_average(spec, energy, [](double, double p) { return p; });
    m.p2 = classical_average(spec, energy,
                             [](double, double p) { return p * p; });
  } else {
    const bool symmetric = spec.is_symmetric();
    m.x_mean = symmetric ? 0.0 : 0.5;
    m.x2 = 1.0 / 3.0;
    m.x4 = 1.0 / 5.0;
    m.p_mean = 0.0;
    m.p2 = 1.0;
  }
  rec.product_cl = m.product();
  rec.has_classical = true;
  return rec;
}

ClassicalMomentumDensity::ClassicalMomentumDensity(const PotentialSpec& spec,
                                                   double energy)
    : b_(0), normalization_(0.0) {
  if (!spec.is_power()) {
    throw std::invalid_argument(
        "momentum-space density undefined for boxes: the wall force is an "
        "impulse");
  }
  if (energy <= 0.0) {
    throw std::invalid_argument("momentum density requires E > 0");
  }
  b_ = spec.exponent();
  // p(P) ~ 1/|F(x(P))| with x(P) = (1 - P^2)^(1/b), so
  // p(P) ~ (1 - P^2)^(-(b-1)/b) on [-1, 1]; constant for b = 1.
  const double expo = (b_ - 1.0) / b_;
  normalization_ = integrate_singular_or_throw(
      [expo](double, double dist) {
        const double one_minus_p2 = dist * (2.0 - dist);  // 1 - p^2
        return std::pow(one_minus_p2, -expo);
      },
      -1.0, 1.0, kQuadTol);
}

double ClassicalMomentumDensity::pdf(double p) const {
  if (std::abs(p) >= 1.0) return 0.0;
  const double expo = (b_ - 1.0) / b_;
  return std::pow(1.0 - p * p, -expo) / normalization_;
}

double ClassicalMomentumDensity::moment(int k) const {
  if (k < 0) throw std::invalid_argument("moment order must be >= 0");
  if (k == 0) return 1.0;
  if (k % 2 == 1) return 0.0;
  const double expo = (b_ - 1.0) / b_;
  const double raw = integrate_singular_or_throw(
      [&](double p, double dist) {
        const double one_minus_p2 = dist * (2.0 - dist);
        return std::pow(p, k) * std::pow(one_minus_p2, -expo);
      },
      -1.0, 1.0, kQuadTol);
  return raw / normalization_;
}

ClassicalMomentumDensity classical_momentum_density(const PotentialSpec& spec,
                                                    double energy) {
  return ClassicalMomentumDensity(spec, energy);
}

}  // namespace qcl
