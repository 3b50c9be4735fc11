#pragma once

#include <vector>

namespace qcl {

// Real symmetric tridiagonal matrix: diag[i] on the diagonal, off[i]
// coupling rows i and i+1.
struct SymmetricTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;

  int size() const { return static_cast<int>(diag.size()); }
};

struct EigenPairs {
  std::vector<double> values;               // ascending
  std::vector<std::vector<double>> vectors;  // unit 2-norm
};

// Number of eigenvalues strictly below sigma (Sturm count).
int eigenvalue_count_below(const SymmetricTridiagonal& t, double sigma);

// The k lowest eigenpairs by bisection plus inverse iteration.
// Deterministic; throws on k out of range or iteration failure.
EigenPairs lowest_eigenpairs(const SymmetricTridiagonal& t, int k);

}  // namespace qcl
