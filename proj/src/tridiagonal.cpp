#include "qcl/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace qcl {
namespace {

double pivmin_for(const SymmetricTridiagonal& t) {
  double max_e2 = 1.0;
  for (double e : t.off) max_e2 = std::max(max_e2, e * e);
  return std::numeric_limits<double>::min() * max_e2;
}

int sturm_count(const SymmetricTridiagonal& t, double sigma, double pivmin) {
  const int n = t.size();
  int count = 0;
  double q = t.diag[0] - sigma;
  if (std::abs(q) <= pivmin) q = -pivmin;
  if (q <= 0.0) ++count;
  for (int i = 1; i < n; ++i) {
    q = t.diag[i] - sigma - t.off[i - 1] * t.off[i - 1] / q;
    if (std::abs(q) <= pivmin) q = -pivmin;
    if (q <= 0.0) ++count;
  }
  return count;
}

// Gershgorin bounds on the whole spectrum.
void spectrum_bounds(const SymmetricTridiagonal& t, double* lo, double* hi) {
  const int n = t.size();
  *lo = std::numeric_limits<double>::infinity();
  *hi = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) +
                     (i + 1 < n ? std::abs(t.off[i]) : 0.0);
    *lo = std::min(*lo, t.diag[i] - r);
    *hi = std::max(*hi, t.diag[i] + r);
  }
}

// Deterministic start vector for inverse iteration.
void seed_vector(std::vector<double>* v, int which) {
  std::uint64_t state = 0x9E3779B97F4A7C15ull + 0x100000001B3ull * (which + 1);
  for (double& x : *v) {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    x = (static_cast<double>(state >> 11) / 9007199254740992.0) - 0.5;
  }
}

// LU of (T - lambda I) with partial pivoting, band layout as in dgttrf:
// dl holds multipliers, d/du/du2 the upper factor, pivot flags per step.
class ShiftedSolver {
 public:
  ShiftedSolver(const SymmetricTridiagonal& t, double lambda)
      : n_(t.size()), dl_(n_, 0.0), d_(n_), du_(n_, 0.0), du2_(n_, 0.0),
        swap_(n_, 0) {
    double tnorm = 0.0;
    for (int i = 0; i < n_; ++i) {
      d_[i] = t.diag[i] - lambda;
      if (i + 1 < n_) {
        dl_[i] = t.off[i];
        du_[i] = t.off[i];
      }
      tnorm = std::max(tnorm, std::abs(d_[i]) +
                                  (i > 0 ? std::abs(t.off[i - 1]) : 0.0) +
                                  (i + 1 < n_ ? std::abs(t.off[i]) : 0.0));
    }
    // Pivot floor scaled to the matrix keeps the singular-shift growth
    // finite (~1/eps) instead of overflowing.
    const double tiny =
        std::max(std::numeric_limits<double>::epsilon() * tnorm,
                 std::numeric_limits<double>::min());
    for (int i = 0; i + 1 < n_; ++i) {
      if (std::abs(d_[i]) >= std::abs(dl_[i])) {
        if (std::abs(d_[i]) < tiny) d_[i] = (d_[i] < 0.0) ? -tiny : tiny;
        const double fact = dl_[i] / d_[i];
        dl_[i] = fact;
        d_[i + 1] -= fact * du_[i];
      } else {
        const double fact = d_[i] / dl_[i];
        d_[i] = dl_[i];
        dl_[i] = fact;
        const double tmp = du_[i];
        du_[i] = d_[i + 1];
        d_[i + 1] = tmp - fact * d_[i + 1];
        if (i + 2 < n_) {
          du2_[i] = du_[i + 1];
          du_[i + 1] = -fact * du_[i + 1];
        }
        swap_[i] = 1;
      }
    }
    if (std::abs(d_[n_ - 1]) < tiny) {
      d_[n_ - 1] = (d_[n_ - 1] < 0.0) ? -tiny : tiny;
    }
  }

  void solve(std::vector<double>* b) const {
    std::vector<double>& x = *b;
    for (int i = 0; i + 1 < n_; ++i) {
      if (swap_[i]) std::swap(x[i], x[i + 1]);
      x[i + 1] -= dl_[i] * x[i];
    }
    x[n_ - 1] /= d_[n_ - 1];
    if (n_ >= 2) {
      x[n_ - 2] = (x[n_ - 2] - du_[n_ - 2] * x[n_ - 1]) / d_[n_ - 2];
    }
    for (int i = n_ - 3; i >= 0; --i) {
      x[i] = (x[i] - du_[i] * x[i + 1] - du2_[i] * x[i + 2]) / d_[i];
    }
  }

 private:
  int n_;
  std::vector<double> dl_, d_, du_, du2_;
  std::vector<int> swap_;
};

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

int eigenvalue_count_below(const SymmetricTridiagonal& t, double sigma) {
  return sturm_count(t, sigma, pivmin_for(t));
}

EigenPairs lowest_eigenpairs(const SymmetricTridiagonal& t, int k) {
  const int n = t.size();
  if (k < 1 || k > n) {
    throw std::invalid_argument("lowest_eigenpairs: k out of range");
  }
  const double pivmin = pivmin_for(t);
  double lo, hi;
  spectrum_bounds(t, &lo, &hi);
  const double span = std::max(hi - lo, 1e-300);

  EigenPairs out;
  out.values.resize(k);
  for (int j = 0; j < k; ++j) {
    double a = lo, b = hi;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (a + b);
      if (mid == a || mid == b) break;
      if (sturm_count(t, mid, pivmin) > j) {
        b = mid;
      } else {
        a = mid;
      }
      if (b - a <= 1e-16 * std::max(std::abs(a), std::abs(b))) break;
    }
    out.values[j] = 0.5 * (a + b);
  }

  out.vectors.assign(k, std::vector<double>(n));
  const int max_iter = 64;
  const double growth_goal =
      1.0 / (1e4 * std::numeric_limits<double>::epsilon());
  for (int j = 0; j < k; ++j) {
    ShiftedSolver solver(t, out.values[j]);
    std::vector<double>& v = out.vectors[j];
    seed_vector(&v, j);
    double nrm = norm2(v);
    for (double& x : v) x /= nrm;

    bool converged = false;
    for (int it = 0; it < max_iter && !converged; ++it) {
      solver.solve(&v);
      // Keep the basis clean if a neighbouring value is very close.
      for (int m = 0; m < j; ++m) {
        if (std::abs(out.values[j] - out.values[m]) < 1e-10 * span) {
          double dot = 0.0;
          for (int i = 0; i < n; ++i) dot += v[i] * out.vectors[m][i];
          for (int i = 0; i < n; ++i) v[i] -= dot * out.vectors[m][i];
        }
      }
      nrm = norm2(v);
      if (nrm == 0.0) {
        seed_vector(&v, j + 17);
        nrm = norm2(v);
      }
      // Growth of ~1/eps per pass means the shift sits on an eigenvalue;
      // one extra pass after that locks the direction in.
      if (nrm * span >= growth_goal && it >= 1) converged = true;
      for (double& x : v) x /= nrm;
    }
    if (!converged) {
      throw std::runtime_error(
          "inverse iteration failed to converge for eigenvalue index " +
          std::to_string(j));
    }
  }
  return out;
}

}  // namespace qcl
