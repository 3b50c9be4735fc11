#include "qcl/grid.hpp"

#include <cmath>
#include <stdexcept>

#include "qcl/special_functions.hpp"

namespace qcl {

Grid::Grid(Boundary boundary, double lambda, int points)
    : boundary_(boundary), lambda_(lambda) {
  if (points < 101) {
    throw std::invalid_argument("grid needs at least 101 points");
  }
  if (boundary == Boundary::SymmetricDirichlet && points % 2 == 0) {
    throw std::invalid_argument(
        "symmetric grids need an odd point count so x = 0 is a grid point");
  }
  if (!(lambda > 0.0)) throw std::invalid_argument("grid extent must be > 0");

  const double lo = boundary == Boundary::SymmetricDirichlet ? -lambda : 0.0;
  dx_ = (lambda - lo) / (points - 1);
  x_.resize(points);
  for (int i = 0; i < points; ++i) x_[i] = lo + i * dx_;
  if (boundary == Boundary::SymmetricDirichlet) x_[(points - 1) / 2] = 0.0;
  x_.back() = lambda;
}

namespace {

constexpr double kPi = 3.14159265358979323846;

// First-order WKB level for U = |x|^b on the full line:
//   integral_{-xm}^{xm} sqrt(2(E - U)) dx = (n + 1/2) pi
// which inverts to E = ((n + 1/2) pi / (2 sqrt(2) I_b))^(2b/(b+2)),
// I_b = B(1/b, 3/2) / b.
double wkb_symmetric_power(int b, int n) {
  const double ib = beta_function(1.0 / b, 1.5) / b;
  const double rhs = (n + 0.5) * kPi / (2.0 * std::sqrt(2.0) * ib);
  return std::pow(rhs, 2.0 * b / (b + 2.0));
}

}  // namespace

double energy_estimate(const PotentialSpec& spec, int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  switch (spec.family()) {
    case Family::SymmetricBox: {
      const double a = spec.box_half_width();
      const double n = n_max + 1.0;
      return n * n * kPi * kPi / (8.0 * a * a);
    }
    case Family::HalfLineBox: {
      const double a = spec.box_half_width();
      const double n = n_max + 1.0;
      return n * n * kPi * kPi / (2.0 * a * a);
    }
    case Family::SymmetricPower:
      if (spec.exponent() == 2) return (n_max + 0.5) * std::sqrt(2.0);
      if (spec.exponent() == 1) {
        // Odd levels sit at Airy zeros; even levels just below them.
        return airy_zero(n_max / 2 + 1) / std::cbrt(2.0);
      }
      return wkb_symmetric_power(spec.exponent(), n_max);
    case Family::HalfLinePower:
      // Half-line levels are the odd levels of the symmetric potential.
      if (spec.exponent() == 2) return (2.0 * n_max + 1.5) * std::sqrt(2.0);
      if (spec.exponent() == 1) return airy_zero(n_max + 1) / std::cbrt(2.0);
      return wkb_symmetric_power(spec.exponent(), 2 * n_max + 1);
  }
  throw std::logic_error("unknown family");
}

Grid build_grid(const PotentialSpec& spec, int n_max, int points,
                double c_lambda) {
  if (c_lambda < 2.0) throw std::invalid_argument("c_lambda must be >= 2");
  const Boundary boundary = spec.is_symmetric()
                                ? Boundary::SymmetricDirichlet
                                : Boundary::HalfLineDirichlet;
  if (!spec.is_power()) {
    return Grid(boundary, spec.box_half_width(), points);
  }
  const double e_hat = energy_estimate(spec, n_max);
  return Grid(boundary, c_lambda * turning_point(spec, e_hat), points);
}

}  // namespace qcl
