#include "qcl/analytic_oracles.hpp"

#include <cmath>
#include <stdexcept>

#include "qcl/quadrature.hpp"
#include "qcl/special_functions.hpp"

namespace qcl {
namespace {

constexpr double kPi = 3.14159265358979323846;

// <X^k>_n by direct integration of the half wave function:
//   (2n+1)^(-k/2) * 2 * int_0^inf y^k phi_n(y)^2 dy.
double half_moment_quadrature(int n, int k) {
  const double y_hi = std::sqrt(2.0 * n + 1.0) + 12.0;
  const double integral = integrate_singular_or_throw(
      [&](double y, double) {
        const double phi = hermite_phi(n, y);
        return std::pow(y, k) * phi * phi;
      },
      0.0, y_hi, 1e-12);
  return 2.0 * integral * std::pow(2.0 * n + 1.0, -0.5 * k);
}

}  // namespace

double half_oscillator_odd_first_moment_closed(int m) {
  if (m < 0) throw std::invalid_argument("need m >= 0");
  return 2.0 / std::sqrt(kPi) * (2.0 * m + 1.0) / std::sqrt(4.0 * m + 3.0) *
         central_binomial_ratio(m);
}

double half_oscillator_even_first_moment_closed(int m) {
  if (m < 0) throw std::invalid_argument("need m >= 0");
  return std::sqrt(4.0 * m + 1.0) / std::sqrt(kPi) *
         central_binomial_ratio(m);
}

HalfMomentResult half_oscillator_moment(int n, int k, MomentMethod method) {
  if (n < 0 || n > 20) {
    throw std::invalid_argument("half_oscillator_moment: need 0 <= n <= 20");
  }
  if (k != 1 && k != 2 && k != 4) {
    throw std::invalid_argument(
        "half_oscillator_moment: supported moments are k in {1, 2, 4}");
  }
  HalfMomentResult r{n, k, 0.0, method};
  if (method == MomentMethod::Quadrature) {
    r.value = half_moment_quadrature(n, k);
    return r;
  }
  switch (k) {
    case 1:
      r.value = (n % 2 == 1)
                    ? half_oscillator_odd_first_moment_closed((n - 1) / 2)
                    : half_oscillator_even_first_moment_closed(n / 2);
      break;
    case 2:
      r.value = 0.5;
      break;
    case 4:
      r.value = 1.5 * (n * n + n + 0.5) / ((2.0 * n + 1.0) * (2.0 * n + 1.0));
      break;
  }
  return r;
}

double half_oscillator_even_first_moment_published(int n) {
  if (n < 0 || n % 2 == 1) {
    throw std::invalid_argument("published form applies to even states");
  }
  const int m = n / 2;
  return 2.0 / std::sqrt(kPi) * (2.0 * m + 1.0) / std::sqrt(4.0 * m + 1.0) *
         central_binomial_ratio(m);
}

double half_oscillator_first_moment_limit() { return 2.0 / kPi; }

double central_binomial_limit_probe(int n) {
  if (n < 1) throw std::invalid_argument("probe needs n >= 1");
  return std::sqrt(static_cast<double>(n)) * central_binomial_ratio(n);
}

std::vector<double> bouncing_energies(int k) {
  if (k < 1 || k > 20) {
    throw std::invalid_argument("bouncing_energies: need 1 <= k <= 20");
  }
  std::vector<double> e(k);
  const double scale = 1.0 / std::cbrt(2.0);
  for (int j = 0; j < k; ++j) e[j] = airy_zero(j + 1) * scale;
  return e;
}

MomentSet box_moments(int n, Family family) {
  if (family_is_power(family)) {
    throw std::invalid_argument("box_moments applies to box families");
  }
  if (n < 1) {
    throw std::invalid_argument("box states are 1-indexed; need n >= 1");
  }
  MomentSet m;
  m.n = n;
  const double n2p2 = n * n * kPi * kPi;
  if (family == Family::SymmetricBox) {
    m.x_mean = 0.0;
    m.x2 = 1.0 / 3.0 - 2.0 / n2p2;
  } else {
    m.x_mean = 0.5;
    m.x2 = 1.0 / 3.0 - 0.5 / n2p2;
  }
  m.p_mean = 0.0;
  m.p2 = 1.0;
  return m;
}

double harmonic_product_original(int n) {
  if (n < 0) throw std::invalid_argument("state index must be >= 0");
  const double h = n + 0.5;
  return h * h;
}

}  // namespace qcl
