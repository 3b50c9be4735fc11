#pragma once

#include <functional>

#include "qcl/moments.hpp"
#include "qcl/potential.hpp"

namespace qcl {

// Normalized classical position density p(x) ~ 1/sqrt(E - U(x)) on the
// classically allowed interval, with the turning-point singularity
// handled by double-exponential quadrature.
struct ClassicalDensity {
  PotentialSpec spec;
  double energy;
  double x_lo;
  double x_hi;
  double normalization;  // integral of the raw 1/sqrt(E-U) weight
};

ClassicalDensity classical_density(const PotentialSpec& spec, double energy);

// Phase-space average of f(X, P) at energy E, reduced to a position
// integral: (1/2) int dX p(X) [f(X, -P(X)) + f(X, +P(X))] with
// P(X) = sqrt(1 - U/E). Accurate to ~1e-9 absolute.
double classical_average(const PotentialSpec& spec, double energy,
                         const std::function<double(double, double)>& f);

// Closed form for power families: <X^k> = B((k+1)/b, 1/2) / B(1/b, 1/2)
// on the half line; symmetric families keep even k and zero odd k.
double classical_moment_closed_form(int b, Family family, int k);

// UncertaintyRecord with the classical side filled.
// <P^2> = 1 - <X^b> for power families (= b/(b+2)), exactly 1 for boxes.
UncertaintyRecord classical_dispersion_product(const PotentialSpec& spec,
                                               double energy);

// Momentum-space classical density p(P) ~ 1/|F(x(P))| for power families;
// boxes are rejected (the wall force is an impulse).
class ClassicalMomentumDensity {
 public:
  ClassicalMomentumDensity(const PotentialSpec& spec, double energy);

  // Normalized density at P in (-1, 1); constant 1/2 for b = 1.
  double pdf(double p) const;
  // <P^k> under the momentum-space density.
  double moment(int k) const;
  double normalization() const { return normalization_; }

 private:
  int b_;
  double normalization_;
};

ClassicalMomentumDensity classical_momentum_density(const PotentialSpec& spec,
                                                    double energy);

}  // namespace qcl
