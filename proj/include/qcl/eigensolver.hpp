#pragma once

#include <vector>

#include "qcl/grid.hpp"
#include "qcl/potential.hpp"
#include "qcl/tridiagonal.hpp"

namespace qcl {

// Lowest eigenpairs of -(1/2) d2/dx2 + U on a grid. Eigenvectors live on
// the interior points, are normalized to sum(psi^2) dx = 1 and sign-fixed
// so the first component above 1e-6 * max|psi| is positive.
class Spectrum {
 public:
  Spectrum(Grid grid, std::vector<double> energies,
           std::vector<std::vector<double>> states);

  const Grid& grid() const { return grid_; }
  int count() const { return static_cast<int>(energies_.size()); }
  double energy(int n) const { return energies_.at(n); }
  const std::vector<double>& state(int n) const { return states_.at(n); }
  const std::vector<double>& energies() const { return energies_; }

 private:
  Grid grid_;
  std::vector<double> energies_;
  std::vector<std::vector<double>> states_;
};

// Centered-stencil Hamiltonian over interior points:
// diagonal 1/dx^2 + U(x_i), off-diagonal -1/(2 dx^2).
SymmetricTridiagonal assemble_hamiltonian(const PotentialSpec& spec,
                                          const Grid& grid);

// Same, for a potential tabulated on the interior points.
SymmetricTridiagonal assemble_hamiltonian(const std::vector<double>& potential,
                                          const Grid& grid);

// k lowest states; requires k <= 0.05 * interior count so the top of the
// band stays resolved.
Spectrum solve_spectrum(const SymmetricTridiagonal& h, int k, const Grid& grid);

// build_grid + assemble + solve for states 0..n_max.
Spectrum solve_potential(const PotentialSpec& spec, int n_max,
                         int points = 4001, double c_lambda = 3.0);

}  // namespace qcl
