#include "qcl/potential.hpp"

#include <cmath>
#include <stdexcept>

namespace qcl {

bool family_is_power(Family f) {
  return f == Family::SymmetricPower || f == Family::HalfLinePower;
}

bool family_is_symmetric(Family f) {
  return f == Family::SymmetricPower || f == Family::SymmetricBox;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::SymmetricPower: return "symmetric-power";
    case Family::HalfLinePower: return "half-line-power";
    case Family::SymmetricBox: return "symmetric-box";
    case Family::HalfLineBox: return "half-line-box";
  }
  throw std::logic_error("unknown family");
}

Family family_from_name(const std::string& name) {
  if (name == "symmetric-power") return Family::SymmetricPower;
  if (name == "half-line-power") return Family::HalfLinePower;
  if (name == "symmetric-box") return Family::SymmetricBox;
  if (name == "half-line-box") return Family::HalfLineBox;
  throw std::invalid_argument("unknown potential family: " + name);
}

PotentialSpec::PotentialSpec(Family family, int exponent, double box_half_width)
    : family_(family), exponent_(exponent), half_width_(box_half_width) {
  if (family_is_power(family) && exponent < 1) {
    throw std::invalid_argument(
        "power-law exponent b must be a positive integer, got b = " +
        std::to_string(exponent));
  }
  if (!family_is_power(family) && box_half_width <= 0.0) {
    throw std::invalid_argument("box half-width A must be positive");
  }
}

double PotentialSpec::evaluate(double x) const {
  switch (family_) {
    case Family::SymmetricPower:
      return std::pow(std::abs(x), exponent_);
    case Family::HalfLinePower:
      if (x < 0.0) return kHardWall;
      return std::pow(x, exponent_);
    case Family::SymmetricBox:
      return std::abs(x) <= half_width_ ? 0.0 : kHardWall;
    case Family::HalfLineBox:
      return (x >= 0.0 && x <= half_width_) ? 0.0 : kHardWall;
  }
  throw std::logic_error("unknown family");
}

std::string PotentialSpec::name() const {
  if (is_power()) return family_name(family_) + "-b" + std::to_string(exponent_);
  return family_name(family_);
}

PotentialSpec make_potential(Family family, int b, double box_half_width) {
  return PotentialSpec(family, b, box_half_width);
}

double turning_point(const PotentialSpec& spec, double energy) {
  if (energy <= 0.0) {
    throw std::invalid_argument("turning point requires E > 0");
  }
  if (spec.is_power()) {
    return std::pow(energy, 1.0 / spec.exponent());
  }
  return spec.box_half_width();
}

Frame dimensionless_frame(const PotentialSpec& spec, double energy) {
  if (energy <= 0.0) {
    throw std::invalid_argument("dimensionless frame requires E > 0");
  }
  Frame f;
  f.x_max = turning_point(spec, energy);
  f.p_max = std::sqrt(2.0 * units::mass * energy);
  f.energy = energy;
  return f;
}

}  // namespace qcl
