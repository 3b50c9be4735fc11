#include "qcl/susy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qcl/quadrature.hpp"
#include "qcl/quantum_moments.hpp"

namespace qcl {
namespace {

constexpr double kMaskLevel = 1e-8;

struct HealthyRange {
  int lo, hi;
};

HealthyRange healthy_range(const std::vector<double>& psi) {
  double peak = 0.0;
  for (double x : psi) peak = std::max(peak, std::abs(x));
  const double cut = kMaskLevel * peak;
  const int m = static_cast<int>(psi.size());
  int lo = 0, hi = m - 1;
  while (lo < m && std::abs(psi[lo]) < cut) ++lo;
  while (hi >= 0 && std::abs(psi[hi]) < cut) --hi;
  if (lo + 2 >= hi) {
    throw std::runtime_error("ground state support too narrow for the grid");
  }
  return {lo, hi};
}

void require_nodeless(const std::vector<double>& psi, const HealthyRange& r) {
  const double first = psi[r.lo];
  for (int i = r.lo; i <= r.hi; ++i) {
    if (psi[i] * first <= 0.0) {
      throw std::invalid_argument(
          "node detected in the input state: not a ground state");
    }
  }
}

// Central differences inside [lo, hi]; the two edge values are filled by
// the neighbouring slope when extrapolating.
std::vector<double> central_derivative(const std::vector<double>& f, int lo,
                                       int hi, double dx) {
  std::vector<double> d(f.size(), 0.0);
  for (int i = lo + 1; i < hi; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2.0 * dx);
  return d;
}

}  // namespace

SuperpotentialTable superpotential_from_ground_state(const Spectrum& spectrum,
                                                     const Grid& grid) {
  const std::vector<double>& psi = spectrum.state(0);
  if (static_cast<int>(psi.size()) != grid.interior_count()) {
    throw std::invalid_argument("spectrum does not match grid");
  }
  const double dx = grid.dx();
  const HealthyRange r = healthy_range(psi);
  require_nodeless(psi, r);

  SuperpotentialTable t;
  t.healthy_lo = r.lo;
  t.healthy_hi = r.hi;
  const int m = static_cast<int>(psi.size());
  t.w.assign(m, 0.0);
  const double inv = 1.0 / (2.0 * dx * std::sqrt(2.0));
  for (int i = r.lo + 1; i < r.hi; ++i) {
    t.w[i] = -(psi[i + 1] - psi[i - 1]) * inv / psi[i];
  }
  // Continue W linearly past the masked tails. The slope comes from a
  // short least-squares fit; W is noisiest right at the mask edge.
  const int a = r.lo + 1, b = r.hi - 1;
  const int span = std::min(16, (b - a) / 2);
  auto fit_slope = [&](int start, int count) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (int i = start; i < start + count; ++i) {
      const double x = i * dx;
      sx += x;
      sy += t.w[i];
      sxx += x * x;
      sxy += x * t.w[i];
    }
    return (count * sxy - sx * sy) / (count * sxx - sx * sx);
  };
  const double slope_lo = fit_slope(a, span + 1);
  const double slope_hi = fit_slope(b - span, span + 1);
  for (int i = a - 1; i >= 0; --i) t.w[i] = t.w[a] - slope_lo * (a - i) * dx;
  for (int i = b + 1; i < m; ++i) t.w[i] = t.w[b] + slope_hi * (i - b) * dx;
  return t;
}

PartnerPotential partner_potential(const PotentialSpec& spec,
                                   const Spectrum& spectrum) {
  const Grid& grid = spectrum.grid();
  const SuperpotentialTable t =
      superpotential_from_ground_state(spectrum, grid);
  const double e0 = spectrum.energy(0);
  const int m = grid.interior_count();
  const double dx = grid.dx();

  PartnerPotential p{spec, t.w, std::vector<double>(m, 0.0), e0,
                     t.healthy_lo, t.healthy_hi};
  std::vector<double> wp = central_derivative(t.w, 0, m - 1, dx);
  wp[0] = wp[1];
  wp[m - 1] = wp[m - 2];
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < m; ++i) {
    p.v2[i] = t.w[i] * t.w[i] + wp[i] * inv_sqrt2 + e0;
  }
  return p;
}

Spectrum partner_spectrum(const PartnerPotential& partner, const Grid& grid,
                          int k) {
  const SymmetricTridiagonal h = assemble_hamiltonian(partner.v2, grid);
  return solve_spectrum(h, k, grid);
}

double partner_turning_point(const PartnerPotential& partner, const Grid& grid,
                             double e) {
  const int m = grid.interior_count();
  // Outermost crossing on the right half.
  int i = m - 1;
  while (i > 0 && partner.v2[i] >= e) --i;
  if (i == m - 1) {
    throw std::runtime_error(
        "partner turning point: V2 below the energy up to the grid edge");
  }
  if (i == 0) {
    throw std::runtime_error(
        "partner turning point: V2 never drops below the energy");
  }
  const double x0 = grid.interior_x(i);
  const double v0 = partner.v2[i];
  const double v1 = partner.v2[i + 1];
  if (v1 <= v0) {
    throw std::runtime_error(
        "partner turning point: tabulated V2 non-monotone at the crossing");
  }
  return x0 + (e - v0) / (v1 - v0) * grid.dx();
}

namespace {

// Linear interpolation of the tabulated V2 at x (clamped to the table).
double interp_v2(const PartnerPotential& p, const Grid& grid, double x) {
  const int m = grid.interior_count();
  const double x0 = grid.interior_x(0);
  double s = (x - x0) / grid.dx();
  if (s <= 0.0) return p.v2.front();
  if (s >= m - 1) return p.v2.back();
  const int i = static_cast<int>(s);
  const double f = s - i;
  return p.v2[i] * (1.0 - f) + p.v2[i + 1] * f;
}

struct PartnerClassical {
  double x_mean, x2, p2;
};

// Classical dimensionless moments for motion in the tabulated V2 at
// energy e. Density 1/sqrt(e - V2), support [-x_r, x_r] (V2 symmetric).
PartnerClassical partner_classical_moments(const PartnerPotential& p,
                                           const Grid& grid, double e,
                                           double x_r, double v2_min) {
  const double p2_scale = e - v2_min;
  auto gap = [&](double x) {
    const double g = e - interp_v2(p, grid, x);
    return g > 0.0 ? g : 0.0;
  };
  // The interpolated V2 is only piecewise smooth, so the refinement
  // estimate plateaus around the table roughness; 1e-6 is far below the
  // documented partner-value tolerances.
  auto weighted = [&](auto&& f) {
    auto integrand = [&](double x, double) {
      const double g = gap(x);
      if (g <= 0.0) return 0.0;
      return f(x) / std::sqrt(g);
    };
    return integrate_singular_or_throw(integrand, -x_r, 0.0, 1e-6) +
           integrate_singular_or_throw(integrand, 0.0, x_r, 1e-6);
  };
  const double z = weighted([](double) { return 1.0; });
  PartnerClassical out;
  out.x_mean = weighted([&](double x) { return x / x_r; }) / z;
  out.x2 = weighted([&](double x) { return (x / x_r) * (x / x_r); }) / z;
  // <P^2> = <e - V2> / (e - min V2).
  out.p2 = weighted([&](double x) { return gap(x) / p2_scale; }) / z;
  return out;
}

}  // namespace

std::vector<UncertaintyRecord> partner_uncertainty_sweep(
    const std::vector<int>& b_list, int levels, int points, double c_lambda) {
  if (levels < 1 || levels > 5) {
    throw std::invalid_argument("partner sweep supports 1 to 5 levels");
  }
  std::vector<UncertaintyRecord> out;
  for (int b : b_list) {
    const PotentialSpec spec = make_potential(Family::SymmetricPower, b);
    // Base band sized one level past the partner band (isospectral shift).
    const Spectrum base = solve_potential(spec, levels + 1, points, c_lambda);
    const Grid& grid = base.grid();
    const PartnerPotential partner = partner_potential(spec, base);
    const Spectrum ps = partner_spectrum(partner, grid, levels);
    const double v2_min =
        *std::min_element(partner.v2.begin(), partner.v2.end());
    const double dx = grid.dx();

    for (int n = 0; n < levels; ++n) {
      const double e = ps.energy(n);
      const double x_r = partner_turning_point(partner, grid, e);
      const double p_max = std::sqrt(2.0 * (e - v2_min));
      const std::vector<double>& psi = ps.state(n);

      UncertaintyRecord rec{spec};
      rec.n = n;
      MomentSet& q = rec.quantum;
      q.n = n;
      q.frame = Frame{x_r, p_max, e};
      double x1 = 0.0, x2 = 0.0, vbar = 0.0;
      for (int i = 0; i < grid.interior_count(); ++i) {
        const double w = psi[i] * psi[i] * dx;
        const double xs = grid.interior_x(i) / x_r;
        x1 += xs * w;
        x2 += xs * xs * w;
        vbar += partner.v2[i] * w;
      }
      q.x_mean = x1;
      q.x2 = x2;
      q.p_mean = first_derivative_expectation(std::span<const double>(psi), dx) /
                 p_max;
      q.p2 = (e - vbar) / (e - v2_min);
      const double p2_alt = derivative_p2(psi, dx) / (p_max * p_max);
      if (std::abs(p2_alt - q.p2) > 1e-3 * std::abs(q.p2)) {
        throw std::runtime_error(
            "partner momentum routes disagree: kinetic " +
            std::to_string(q.p2) + " vs derivative " + std::to_string(p2_alt));
      }
      rec.product_qm = q.product();
      rec.has_quantum = true;

      const PartnerClassical cl =
          partner_classical_moments(partner, grid, e, x_r, v2_min);
      MomentSet& c = rec.classical;
      c.n = n;
      c.frame = q.frame;
      c.x_mean = cl.x_mean;
      c.x2 = cl.x2;
      c.p_mean = 0.0;
      c.p2 = cl.p2;
      rec.product_cl = c.product();
      rec.has_classical = true;
      out.push_back(std::move(rec));
    }
  }
  return out;
}

}  // namespace qcl
