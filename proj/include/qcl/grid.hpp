#pragma once

#include <vector>

#include "qcl/potential.hpp"

namespace qcl {

enum class Boundary {
  SymmetricDirichlet,  // x in [-lambda, lambda], psi = 0 at both ends
  HalfLineDirichlet,   // x in [0, lambda], psi = 0 at both ends
};

// Uniform mesh with Dirichlet endpoints. The endpoints carry psi = 0 and
// are excluded from the Hamiltonian; interior points are x[1..points-2].
class Grid {
 public:
  Grid(Boundary boundary, double lambda, int points);

  Boundary boundary() const { return boundary_; }
  double lambda() const { return lambda_; }
  double dx() const { return dx_; }
  int total_points() const { return static_cast<int>(x_.size()); }
  int interior_count() const { return total_points() - 2; }

  // Interior abscissa, i = 0 .. interior_count()-1.
  double interior_x(int i) const { return x_[i + 1]; }
  double x_lo() const { return x_.front(); }
  double x_hi() const { return x_.back(); }
  const std::vector<double>& all_points() const { return x_; }

 private:
  Boundary boundary_;
  double lambda_;
  double dx_;
  std::vector<double> x_;
};

// A-priori estimate of E_{n_max} used to size the grid: exact closed forms
// for b in {1, 2} (Airy zeros / harmonic ladder), first-order WKB otherwise.
double energy_estimate(const PotentialSpec& spec, int n_max);

// lambda = c_lambda * turning_point(spec, E-estimate) for power families;
// boxes always span exactly to their walls.
Grid build_grid(const PotentialSpec& spec, int n_max, int points,
                double c_lambda);

}  // namespace qcl
