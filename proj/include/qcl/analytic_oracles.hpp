#pragma once

#include <vector>

#include "qcl/moments.hpp"

namespace qcl {

enum class MomentMethod { ClosedForm, Quadrature };

// Moment <X^k> of a harmonic-oscillator eigenfunction restricted to
// [0, inf) with doubled normalization ("half wave function"); n is the
// full-line state index, X = x / x_max with x_max the classical turning
// point of state n.
struct HalfMomentResult {
  int n = 0;
  int k = 0;
  double value = 0.0;
  MomentMethod method = MomentMethod::ClosedForm;
};

// Supported k: 1, 2, 4. n <= 20 for the quadrature route.
// ClosedForm k=1 uses the recurrence-consistent expressions; the
// literature variant for even n (which disagrees with direct integration)
// is exposed separately below so reports can flag the discrepancy.
HalfMomentResult half_oscillator_moment(int n, int k, MomentMethod method);

// Even-state first moment in its published form,
//   (2/sqrt(pi)) (2m+1) (4m+1)^(-1/2) (2m)! / (2^(2m) (m!)^2),  n = 2m.
// Evaluates to 2/sqrt(pi) at n = 0, outside the support of X; the direct
// integral gives 1/sqrt(pi). The ratio is 2(2m+1)/(4m+1).
double half_oscillator_even_first_moment_published(int n);

// Closed first moments for arbitrary indices (log-gamma evaluation, safe
// well past n = 85): odd state n = 2m+1 and recurrence-consistent even
// state n = 2m. Both tend to 2/pi.
double half_oscillator_odd_first_moment_closed(int m);
double half_oscillator_even_first_moment_closed(int m);

// n -> inf limit of the first moments: 2/pi.
double half_oscillator_first_moment_limit();

// sqrt(n) (2n)! / (2^(2n) (n!)^2) evaluated at finite n; tends to
// 1/sqrt(pi).
double central_binomial_limit_probe(int n);

// Half-line linear potential ("bouncing ball") energies in
// hbar = m = a = 1 units: E_n = |a_{n+1}| / 2^(1/3) with a_j the Airy
// zeros. k <= 20.
std::vector<double> bouncing_energies(int k);

// Infinite-well moments, states 1-indexed. Symmetric well [-A, A]:
// <X> = 0, <X^2> = 1/3 - 2/(n^2 pi^2); half-line well [0, A]:
// <X> = 1/2, <X^2> = 1/3 - 1/(2 n^2 pi^2). <P> = 0, <P^2> = 1.
MomentSet box_moments(int n, Family family);

// (n + 1/2)^2, the original-variable oscillator product in hbar^2 units.
double harmonic_product_original(int n);

}  // namespace qcl
