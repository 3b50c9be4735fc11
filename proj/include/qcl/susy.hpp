#pragma once

#include <vector>

#include "qcl/eigensolver.hpp"
#include "qcl/moments.hpp"

namespace qcl {

// Superpotential W = -psi0' / (sqrt(2) psi0) tabulated on the interior
// grid. Points where psi0 underflows (|psi0| < 1e-8 max) are masked and
// W is continued linearly from the outermost healthy samples.
struct SuperpotentialTable {
  std::vector<double> w;
  int healthy_lo = 0;  // inclusive index range where psi0 was usable
  int healthy_hi = 0;
};

// Partner potential V2 = W^2 + W'/sqrt(2) + E0 tabulated on the interior
// grid. The +E0 keeps partner energies aligned with the base spectrum
// (E2_n = E1_{n+1}); the factorization itself satisfies
// V1 - E0 = W^2 - W'/sqrt(2) on the healthy region.
struct PartnerPotential {
  PotentialSpec base;
  std::vector<double> w;
  std::vector<double> v2;
  double ground_energy = 0.0;
  int healthy_lo = 0;
  int healthy_hi = 0;
};

SuperpotentialTable superpotential_from_ground_state(const Spectrum& spectrum,
                                                     const Grid& grid);

PartnerPotential partner_potential(const PotentialSpec& spec,
                                   const Spectrum& spectrum);

// Lowest k eigenpairs of the partner Hamiltonian on the same grid.
Spectrum partner_spectrum(const PartnerPotential& partner, const Grid& grid,
                          int k);

// Positive turning point of the tabulated V2 at energy e: the outermost
// crossing V2(x) = e on the right half of the grid, linearly interpolated.
// Throws if the tabulated V2 never reaches e or crosses it non-monotonically.
double partner_turning_point(const PartnerPotential& partner, const Grid& grid,
                             double e);

// Quantum and classical dimensionless products for partner states, frames
// taken from the partner potential itself: x_max from inverting V2 at the
// state energy and p_max^2 = 2 (E - min V2).
std::vector<UncertaintyRecord> partner_uncertainty_sweep(
    const std::vector<int>& b_list, int levels, int points = 4001,
    double c_lambda = 3.0);

}  // namespace qcl
