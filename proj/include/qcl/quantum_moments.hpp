#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qcl/eigensolver.hpp"
#include "qcl/moments.hpp"

namespace qcl {

enum class PSquaredRoute {
  Kinetic,     // <P^2> = (E - <U>) / E, no differentiation involved
  Derivative,  // <P^2> = sum (psi_{i+1} - psi_i)^2 / dx / p_max^2
};

// --- low-level pieces, shared with the partner-potential code ---

// sum f_i psi_i^2 dx over interior points.
double state_expectation(std::span<const double> values,
                         std::span<const double> psi, double dx);

// sum over all grid gaps of (psi_{i+1} - psi_i)^2 / dx with the Dirichlet
// zeros at both ends included; equals <p^2> for a normalized state.
double derivative_p2(std::span<const double> psi, double dx);

// Central-difference <p> for a complex state (real part of the Hermitian
// form); identically ~0 for real states.
double first_derivative_expectation(std::span<const std::complex<double>> psi,
                                    double dx);
double first_derivative_expectation(std::span<const double> psi, double dx);

void require_normalized(std::span<const double> psi, double dx);

// --- per-state operations ---

// <X^k> = sum (x_i/x_max)^k psi^2 dx over the whole grid, tails included.
double position_moment(const Spectrum& spectrum, int n, const Frame& frame,
                       int k);

double momentum_second_moment(const Spectrum& spectrum, int n,
                              const PotentialSpec& spec, const Frame& frame,
                              PSquaredRoute route);

double momentum_first_moment(const Spectrum& spectrum, int n,
                             const Frame& frame);

// Dimensionless moment set for state n (Kinetic route for p2,
// cross-checked against the Derivative route to 1e-4 relative).
MomentSet quantum_moment_set(const PotentialSpec& spec,
                             const Spectrum& spectrum, int n);

// UncertaintyRecord with the quantum side filled.
UncertaintyRecord uncertainty_product(const PotentialSpec& spec,
                                      const Spectrum& spectrum, int n);

// (Delta x)^2 (Delta p)^2 in hbar = 1 units, no frame scaling.
double original_variable_product(const PotentialSpec& spec,
                                 const Spectrum& spectrum, int n);

}  // namespace qcl
