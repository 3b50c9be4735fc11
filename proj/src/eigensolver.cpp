#include "qcl/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace qcl {

Spectrum::Spectrum(Grid grid, std::vector<double> energies,
                   std::vector<std::vector<double>> states)
    : grid_(std::move(grid)),
      energies_(std::move(energies)),
      states_(std::move(states)) {
  if (energies_.size() != states_.size()) {
    throw std::invalid_argument("spectrum: energies/states size mismatch");
  }
}

SymmetricTridiagonal assemble_hamiltonian(const PotentialSpec& spec,
                                          const Grid& grid) {
  const int m = grid.interior_count();
  std::vector<double> u(m);
  for (int i = 0; i < m; ++i) u[i] = spec.evaluate(grid.interior_x(i));
  return assemble_hamiltonian(u, grid);
}

SymmetricTridiagonal assemble_hamiltonian(const std::vector<double>& potential,
                                          const Grid& grid) {
  const int m = grid.interior_count();
  if (static_cast<int>(potential.size()) != m) {
    throw std::invalid_argument(
        "assemble_hamiltonian: potential table does not match the grid");
  }
  const double inv_dx2 = 1.0 / (grid.dx() * grid.dx());
  SymmetricTridiagonal h;
  h.diag.resize(m);
  h.off.assign(m - 1, -0.5 * inv_dx2);
  for (int i = 0; i < m; ++i) h.diag[i] = inv_dx2 + potential[i];
  return h;
}

Spectrum solve_spectrum(const SymmetricTridiagonal& h, int k,
                        const Grid& grid) {
  const int m = grid.interior_count();
  if (h.size() != m) {
    throw std::invalid_argument("solve_spectrum: matrix does not match grid");
  }
  if (k < 1) throw std::invalid_argument("solve_spectrum: k must be >= 1");
  if (k > 0.05 * m) {
    throw std::invalid_argument(
        "solve_spectrum: k exceeds 5% of the interior point count; "
        "the top of the requested band would be under-resolved");
  }

  EigenPairs pairs = lowest_eigenpairs(h, k);

  const double dx = grid.dx();
  for (auto& v : pairs.vectors) {
    double s = 0.0;
    for (double x : v) s += x * x;
    const double scale = 1.0 / std::sqrt(s * dx);
    for (double& x : v) x *= scale;
    double peak = 0.0;
    for (double x : v) peak = std::max(peak, std::abs(x));
    for (double x : v) {
      if (std::abs(x) > 1e-6 * peak) {
        if (x < 0.0) {
          for (double& y : v) y = -y;
        }
        break;
      }
    }
  }
  return Spectrum(grid, std::move(pairs.values), std::move(pairs.vectors));
}

Spectrum solve_potential(const PotentialSpec& spec, int n_max, int points,
                         double c_lambda) {
  const Grid grid = build_grid(spec, n_max, points, c_lambda);
  const SymmetricTridiagonal h = assemble_hamiltonian(spec, grid);
  return solve_spectrum(h, n_max + 1, grid);
}

}  // namespace qcl
