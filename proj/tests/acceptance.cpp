// End-to-end acceptance runs: every closed-form anchor value the library
// is expected to reproduce, each as one pass/fail line. Exit code counts the
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "qcl/analytic_oracles.hpp"
#include "qcl/classical_moments.hpp"
#include "qcl/eigensolver.hpp"
#include "qcl/quantum_moments.hpp"
#include "qcl/report.hpp"
#include "qcl/susy.hpp"

using namespace qcl;

namespace {

int g_failures = 0;

class Criterion {
 public:
  explicit Criterion(std::string label) : label_(std::move(label)) {}

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      if (!first_failure_.empty()) first_failure_ += "; ";
      first_failure_ += what;
    }
  }

  void track_max(const char* name, double value, double tol) {
    if (std::abs(value) > worst_) {
      worst_ = std::abs(value);
      worst_name_ = name;
    }
    require(std::abs(value) <= tol,
            std::string(name) + " off by " + format_number(value) +
                " (tol " + format_number(tol) + ")");
  }

  ~Criterion() {
    if (std::uncaught_exceptions() > 0) {
      std::printf("[FAIL] %s: aborted by exception\n", label_.c_str());
      ++g_failures;
      return;
    }
    if (pass_) {
      std::printf("[PASS] %s (worst %s: %.3g)\n", label_.c_str(),
                  worst_name_.c_str(), worst_);
    } else {
      std::printf("[FAIL] %s: %s\n", label_.c_str(), first_failure_.c_str());
      ++g_failures;
    }
  }

 private:
  std::string label_;
  bool pass_ = true;
  std::string first_failure_;
  double worst_ = 0.0;
  std::string worst_name_ = "-";
};

void harmonic_products() {
  const auto t0 = std::chrono::steady_clock::now();
  Criterion c("1. harmonic oscillator: quantum and classical products = 1/4, "
              "n = 0..10");
  const PotentialSpec quad = make_potential(Family::SymmetricPower, 2);
  const Spectrum s = solve_potential(quad, 10);
  for (int n = 0; n <= 10; ++n) {
    const double q = uncertainty_product(quad, s, n).product_qm;
    const double cl =
        classical_dispersion_product(quad, s.energy(n)).product_cl;
    c.track_max("quantum product - 1/4", q - 0.25, 1e-4);
    c.require(std::abs(cl - 0.25) <= 1e-8,
              "classical product off at n=" + std::to_string(n));
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  c.require(seconds < 5.0,
            "runtime " + format_number(seconds) + " s exceeds 5 s");
}

void bouncing_products() {
  Criterion c("2. bouncing ball: products = 4/135, n = 0..10");
  const PotentialSpec ball = make_potential(Family::HalfLinePower, 1);
  const Spectrum s = solve_potential(ball, 10);
  const double want = 4.0 / 135.0;
  for (int n = 0; n <= 10; ++n) {
    const double q = uncertainty_product(ball, s, n).product_qm;
    const double cl =
        classical_dispersion_product(ball, s.energy(n)).product_cl;
    c.track_max("quantum product - 4/135", q - want, 2e-4);
    c.require(std::abs(cl - want) <= 1e-8,
              "classical product off at n=" + std::to_string(n));
  }
}

void box_limits() {
  Criterion c("3. box wells: products match 1/3 - 2/(n^2 pi^2) and "
              "1/12 - 1/(2 n^2 pi^2), tails to n = 50");
  for (Family family : {Family::SymmetricBox, Family::HalfLineBox}) {
    const PotentialSpec spec = make_potential(family, 1);
    const Spectrum s = solve_potential(spec, 49);
    for (int n = 1; n <= 10; ++n) {
      const double analytic = box_moments(n, family).product();
      const double numeric = uncertainty_product(spec, s, n - 1).product_qm;
      c.track_max("product vs closed form", numeric - analytic, 5e-4);
    }
    const double tail = uncertainty_product(spec, s, 49).product_qm;
    const double limit =
        family == Family::SymmetricBox ? 1.0 / 3.0 : 1.0 / 12.0;
    c.track_max("n=50 product vs limit", tail - limit, 1e-3);
  }
}

void half_oscillator_ground() {
  Criterion c("4. half-line oscillator ground: product 0.037793 and "
              "<X> = 2/sqrt(3 pi)");
  const PotentialSpec spec = make_potential(Family::HalfLinePower, 2);
  const Spectrum s = solve_potential(spec, 0);
  const UncertaintyRecord rec = uncertainty_product(spec, s, 0);
  c.track_max("product - 0.037793", rec.product_qm - 0.037793, 5e-4);
  c.track_max("<X> - 2/sqrt(3 pi)",
              rec.quantum.x_mean - 2.0 / std::sqrt(3.0 * M_PI), 5e-4);
}

void symmetric_linear() {
  Criterion c("5. symmetric linear <X^2>: 0.72 ground, 8/15 odd plateau, "
              "decreasing even chain");
  const PotentialSpec lin = make_potential(Family::SymmetricPower, 1);
  const Spectrum s = solve_potential(lin, 10);
  auto x2 = [&](int n) {
    return position_moment(s, n, dimensionless_frame(lin, s.energy(n)), 2);
  };
  c.track_max("<X^2>_0 - 0.72", x2(0) - 0.72, 0.01);
  for (int n = 1; n <= 9; n += 2) {
    c.track_max("odd <X^2> - 8/15", x2(n) - 8.0 / 15.0, 1e-3);
  }
  double prev = x2(0);
  for (int n = 2; n <= 8; n += 2) {
    const double cur = x2(n);
    c.require(cur < prev, "even chain not decreasing at n=" +
                              std::to_string(n));
    prev = cur;
  }
  c.track_max("even <X^2>_10 - 8/15", x2(10) - 8.0 / 15.0, 0.01);
}

void virial_ratio() {
  Criterion c("6. virial ratio <P^2> = b/(b+2) for b = 1..10, n = 0..10, "
              "plus the n = 10 quantum-classical gap");
  for (Family family : {Family::SymmetricPower, Family::HalfLinePower}) {
    for (int b = 1; b <= 10; ++b) {
      const PotentialSpec spec = make_potential(family, b);
      const Spectrum s = solve_potential(spec, 10);
      const double want = b / (b + 2.0);
      for (int n = 0; n <= 10; ++n) {
        const MomentSet m = quantum_moment_set(spec, s, n);
        c.track_max("quantum <P^2> - b/(b+2)", m.p2 - want, 2e-3);
      }
      const double cl = classical_average(
          spec, 1.0, [](double, double p) { return p * p; });
      c.require(std::abs(cl - want) <= 1e-8,
                "classical <P^2> off at b=" + std::to_string(b));
      // correspondence at the top of the band
      const double gap =
          std::abs(uncertainty_product(spec, s, 10).product_qm -
                   classical_dispersion_product(spec, s.energy(10))
                       .product_cl);
      c.track_max("|q - c| at n=10", gap, 0.02);
    }
  }
}

void original_products() {
  Criterion c("7. original-variable products: (n+1/2)^2 ladder and the "
              "hbar^2/4 floor");
  const PotentialSpec quad = make_potential(Family::SymmetricPower, 2);
  const Spectrum s = solve_potential(quad, 5);
  for (int n = 0; n <= 5; ++n) {
    c.track_max("product - (n+1/2)^2",
                original_variable_product(quad, s, n) -
                    harmonic_product_original(n),
                1e-3);
  }
  for (Family family : {Family::SymmetricPower, Family::HalfLinePower}) {
    for (int b : {1, 2, 3}) {
      const PotentialSpec spec = make_potential(family, b);
      const Spectrum sp = solve_potential(spec, 6);
      for (int n = 0; n <= 6; ++n) {
        c.require(original_variable_product(spec, sp, n) >= 0.25 - 1e-9,
                  "uncertainty floor violated");
      }
    }
  }
}

void half_oscillator_oracles() {
  Criterion c("8. half-oscillator moment oracles and their limits");
  for (int n = 0; n <= 10; ++n) {
    const double q4 =
        half_oscillator_moment(n, 4, MomentMethod::Quadrature).value;
    const double c4 =
        half_oscillator_moment(n, 4, MomentMethod::ClosedForm).value;
    c.track_max("<X^4> closed vs quadrature", c4 - q4, 1e-10);
  }
  for (int n = 1; n <= 10; n += 2) {
    const double q1 =
        half_oscillator_moment(n, 1, MomentMethod::Quadrature).value;
    const double c1 =
        half_oscillator_moment(n, 1, MomentMethod::ClosedForm).value;
    c.track_max("odd <X> closed vs quadrature", c1 - q1, 1e-10);
  }
  c.track_max("<X^4> at n=50 vs 3/8",
              1.5 * (50.0 * 50.0 + 50.0 + 0.5) / (101.0 * 101.0) - 0.375,
              0.01);
  c.track_max("odd <X> at n=50 vs 2/pi",
              half_oscillator_odd_first_moment_closed(50) - 2.0 / M_PI, 0.01);
  const double ratio =
      half_oscillator_even_first_moment_published(0) /
      half_oscillator_moment(0, 1, MomentMethod::Quadrature).value;
  c.track_max("even <X> discrepancy ratio at n=0 vs 2", ratio - 2.0, 1e-6);
}

void eigensolver_validation() {
  Criterion c("9. eigensolver: airy ladder and second-order convergence");
  const PotentialSpec ball = make_potential(Family::HalfLinePower, 1);
  const Spectrum s = solve_potential(ball, 10);
  const std::vector<double> oracle = bouncing_energies(11);
  for (int n = 0; n <= 10; ++n) {
    c.track_max("relative energy error",
                (s.energy(n) - oracle[n]) / oracle[n], 1e-3);
  }
  const PotentialSpec quad = make_potential(Family::SymmetricPower, 2);
  const double exact = 0.5 * std::sqrt(2.0);
  const Grid coarse(Boundary::SymmetricDirichlet, 6.0, 1001);
  const Grid fine(Boundary::SymmetricDirichlet, 6.0, 2001);
  const double e1 =
      solve_spectrum(assemble_hamiltonian(quad, coarse), 1, coarse).energy(0);
  const double e2 =
      solve_spectrum(assemble_hamiltonian(quad, fine), 1, fine).energy(0);
  const double factor = std::abs(e1 - exact) / std::abs(e2 - exact);
  c.require(factor >= 3.5 && factor <= 4.5,
            "convergence factor " + format_number(factor) +
                " outside [3.5, 4.5]");
}

void susy_properties() {
  Criterion c("10. partner potentials: constant oscillator shift and "
              "isospectrality");
  const PotentialSpec quad = make_potential(Family::SymmetricPower, 2);
  const Spectrum base2 = solve_potential(quad, 5);
  const PartnerPotential partner2 = partner_potential(quad, base2);
  const Grid& g = base2.grid();
  const int m = g.interior_count();
  const int lo = m / 10, hi = m - 1 - m / 10;
  double mean = 0.0;
  for (int i = lo; i <= hi; ++i) {
    mean += partner2.v2[i] - quad.evaluate(g.interior_x(i));
  }
  mean /= (hi - lo + 1);
  double var = 0.0;
  for (int i = lo; i <= hi; ++i) {
    const double d = partner2.v2[i] - quad.evaluate(g.interior_x(i)) - mean;
    var += d * d;
  }
  c.track_max("std dev of V2 - V1 (b=2)", std::sqrt(var / (hi - lo + 1)),
              1e-2);

  for (int b : {1, 2, 3, 4}) {
    const PotentialSpec spec = make_potential(Family::SymmetricPower, b);
    const Spectrum base = solve_potential(spec, 5);
    const PartnerPotential partner = partner_potential(spec, base);
    const Spectrum ps = partner_spectrum(partner, base.grid(), 4);
    for (int n = 0; n <= 3; ++n) {
      c.track_max("relative isospectrality error",
                  (ps.energy(n) - base.energy(n + 1)) / base.energy(n + 1),
                  1e-3);
    }
  }
}

}  // namespace

int main() {
  void (*criteria[])() = {
      harmonic_products,     bouncing_products,
      box_limits,            half_oscillator_ground,
      symmetric_linear,      virial_ratio,
      original_products,     half_oscillator_oracles,
      eigensolver_validation, susy_properties,
  };
  for (auto* criterion : criteria) {
    try {
      criterion();
    } catch (const std::exception& e) {
      std::printf("       exception: %s\n", e.what());
    }
  }
  if (g_failures == 0) {
    std::printf("all 10 acceptance criteria passed\n");
  } else {
    std::printf("%d acceptance criteria FAILED\n", g_failures);
  }
  return g_failures;
}
