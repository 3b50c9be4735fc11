#pragma once

#include <string>

namespace qcl {

// Unit system used throughout: hbar = 1, particle mass m = 1, potential
// coupling a = 1. Every energy, length and momentum in the library is
// expressed in these units.
namespace units {
inline constexpr double hbar = 1.0;
inline constexpr double mass = 1.0;
inline constexpr double coupling = 1.0;
}  // namespace units

enum class Family {
  SymmetricPower,   // U(x) = |x|^b on the full line
  HalfLinePower,    // U(x) = x^b for x >= 0, hard wall at x = 0
  SymmetricBox,     // U = 0 on [-A, A], hard walls at +-A
  HalfLineBox,      // U = 0 on [0, A], hard walls at 0 and A
};

bool family_is_power(Family f);
bool family_is_symmetric(Family f);
std::string family_name(Family f);
Family family_from_name(const std::string& name);

// One-dimensional potential from the power-law / box catalogue.
// Hard walls are reported by evaluate() as the finite sentinel
// kHardWall (stands for +infinity); the eigensolver enforces walls
// exactly through Dirichlet boundaries instead of through this value.
class PotentialSpec {
 public:
  static constexpr double kHardWall = 1e30;

  PotentialSpec(Family family, int exponent, double box_half_width = 1.0);

  Family family() const { return family_; }
  int exponent() const { return exponent_; }          // b; meaningless for boxes
  double box_half_width() const { return half_width_; }  // A; boxes only

  bool is_power() const { return family_is_power(family_); }
  bool is_symmetric() const { return family_is_symmetric(family_); }

  double evaluate(double x) const;

  std::string name() const;

 private:
  Family family_;
  int exponent_;
  double half_width_;
};

// Per-state dimensionless scaling X = x / x_max, P = p / p_max with
// x_max the classical turning point and p_max = sqrt(2 m E).
struct Frame {
  double x_max = 0.0;
  double p_max = 0.0;
  double energy = 0.0;
};

PotentialSpec make_potential(Family family, int b, double box_half_width = 1.0);

// Classical turning point: U(x_max) = E. E^(1/b) for power families,
// the wall position A for boxes.
double turning_point(const PotentialSpec& spec, double energy);

Frame dimensionless_frame(const PotentialSpec& spec, double energy);

}  // namespace qcl
