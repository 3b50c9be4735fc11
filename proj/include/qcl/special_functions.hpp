#pragma once

#include <vector>

namespace qcl {

// log Gamma / Beta in log space; arguments must be positive.
double log_beta(double x, double y);
double beta_function(double x, double y);

// Physicists' Hermite polynomial H_n(x) by the three-term recurrence
// H_{n+1} = 2 x H_n - 2 n H_{n-1}.
double hermite_h(int n, double x);

// Harmonic-oscillator eigenfunction in natural units,
// phi_n(y) = H_n(y) exp(-y^2/2) / sqrt(sqrt(pi) 2^n n!),
// evaluated through the normalized recurrence (no overflow for any n).
double hermite_phi(int n, double y);

// (2n)! / (2^(2n) (n!)^2), the central binomial coefficient over 4^n,
// computed in log space.
double central_binomial_ratio(int n);

// Airy function Ai(-z) for z >= 0 (series for small z, oscillatory
// asymptotics for large z). Enough accuracy to polish zeros.
double airy_ai_neg(double z);

// j-th negative zero of Ai (j = 1, 2, ...), returned as |a_j| > 0.
// Asymptotic expansion of the zero, polished by root finding.
double airy_zero(int j);

}  // namespace qcl
