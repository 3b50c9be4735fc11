#include "qcl/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace qcl {
namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

double log_beta(double x, double y) {
  if (x <= 0.0 || y <= 0.0) {
    throw std::invalid_argument("log_beta requires positive arguments");
  }
  return std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y);
}

double beta_function(double x, double y) { return std::exp(log_beta(x, y)); }

double hermite_h(int n, double x) {
  if (n < 0) throw std::invalid_argument("hermite_h: negative order");
  double hm = 1.0;  // H_0
  if (n == 0) return hm;
  double h = 2.0 * x;  // H_1
  for (int k = 1; k < n; ++k) {
    const double hp = 2.0 * x * h - 2.0 * k * hm;
    hm = h;
    h = hp;
  }
  return h;
}

double hermite_phi(int n, double y) {
  if (n < 0) throw std::invalid_argument("hermite_phi: negative order");
  const double g = std::exp(-0.5 * y * y);
  double pm = std::pow(kPi, -0.25) * g;  // phi_0
  if (n == 0) return pm;
  double p = std::sqrt(2.0) * y * pm;  // phi_1
  for (int k = 1; k < n; ++k) {
    const double pp =
        std::sqrt(2.0 / (k + 1.0)) * y * p - std::sqrt(k / (k + 1.0)) * pm;
    pm = p;
    p = pp;
  }
  return p;
}

double central_binomial_ratio(int n) {
  if (n < 0) throw std::invalid_argument("central_binomial_ratio: n < 0");
  if (n == 0) return 1.0;
  const double ln = std::lgamma(2.0 * n + 1.0) - 2.0 * std::lgamma(n + 1.0) -
                    2.0 * n * std::log(2.0);
  return std::exp(ln);
}

namespace {

// Power series Ai(x) = c1 f(x) - c2 g(x); accurate for |x| <= ~6.
double airy_ai_series(double x) {
  const double c1 = 0.35502805388781723926;  // Ai(0)
  const double c2 = 0.25881940379280679841;  // -Ai'(0)
  const double x3 = x * x * x;
  double f_term = 1.0, f_sum = 1.0;
  double g_term = x, g_sum = x;
  for (int k = 0; k < 200; ++k) {
    f_term *= x3 / ((3.0 * k + 2.0) * (3.0 * k + 3.0));
    g_term *= x3 / ((3.0 * k + 3.0) * (3.0 * k + 4.0));
    f_sum += f_term;
    g_sum += g_term;
    if (std::abs(f_term) < 1e-18 * std::abs(f_sum) &&
        std::abs(g_term) < 1e-18 * (std::abs(g_sum) + 1e-300)) {
      break;
    }
  }
  return c1 * f_sum - c2 * g_sum;
}

// Oscillatory asymptotic form for Ai(-z), z large:
//   Ai(-z) ~ (cos(zeta - pi/4) P + sin(zeta - pi/4) Q) / (sqrt(pi) z^(1/4))
// with zeta = (2/3) z^(3/2) and the u_k coefficient series.
double airy_ai_neg_asymptotic(double z) {
  const double zeta = (2.0 / 3.0) * std::pow(z, 1.5);
  // u_k = u_{k-1} (6k-5)(6k-3)(6k-1) / ((2k-1) 216 k)
  double u = 1.0;
  double p = 1.0, q = 0.0;
  double pow_zeta = 1.0;
  int sign = 1;
  for (int k = 1; k <= 8; ++k) {
    u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) /
         ((2.0 * k - 1.0) * 216.0 * k);
    pow_zeta *= zeta;
    const double term = u / pow_zeta;
    if (k % 2 == 1) {
      q += sign * term;  // u1/zeta - u3/zeta^3 + ...
    } else {
      p += -sign * term;  // 1 - u2/zeta^2 + ...
      sign = -sign;
    }
  }
  const double phase = zeta - 0.25 * kPi;
  return (std::cos(phase) * p + std::sin(phase) * q) /
         (std::sqrt(kPi) * std::pow(z, 0.25));
}

}  // namespace

double airy_ai_neg(double z) {
  if (z < 0.0) throw std::invalid_argument("airy_ai_neg: z must be >= 0");
  if (z <= 6.0) return airy_ai_series(-z);
  return airy_ai_neg_asymptotic(z);
}

double airy_zero(int j) {
  if (j < 1) throw std::invalid_argument("airy_zero: j must be >= 1");
  // McMahon-style expansion of the j-th zero.
  const double t = 3.0 * kPi * (4.0 * j - 1.0) / 8.0;
  const double t2 = t * t;
  double z = std::pow(t, 2.0 / 3.0) *
             (1.0 + (5.0 / 48.0) / t2 - (5.0 / 36.0) / (t2 * t2) +
              (77125.0 / 82944.0) / (t2 * t2 * t2));

  // Secant polish on Ai(-z).
  double z0 = z * (1.0 - 1e-5);
  double z1 = z;
  double f0 = airy_ai_neg(z0);
  double f1 = airy_ai_neg(z1);
  for (int it = 0; it < 60; ++it) {
    const double denom = f1 - f0;
    if (denom == 0.0) break;
    const double z2 = z1 - f1 * (z1 - z0) / denom;
    z0 = z1;
    f0 = f1;
    z1 = z2;
    f1 = airy_ai_neg(z1);
    if (std::abs(z1 - z0) < 1e-14 * z1) break;
  }
  return z1;
}

}  // namespace qcl
