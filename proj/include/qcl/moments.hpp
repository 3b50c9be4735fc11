#pragma once

#include <cmath>
#include <optional>
#include <utility>

#include "qcl/potential.hpp"

namespace qcl {

// Dimensionless moments of one state (quantum or classical side).
struct MomentSet {
  double x_mean = 0.0;
  double x2 = 0.0;
  std::optional<double> x4;
  double p_mean = 0.0;
  double p2 = 0.0;
  Frame frame;
  int n = 0;

  double product() const {
    return (x2 - x_mean * x_mean) * (p2 - p_mean * p_mean);
  }
};

// Quantum uncertainty product and classical dispersion product for one
// (potential, state) pair.
struct UncertaintyRecord {
  explicit UncertaintyRecord(PotentialSpec s) : spec(std::move(s)) {}

  PotentialSpec spec;
  int n = 0;
  MomentSet quantum;
  MomentSet classical;
  double product_qm = 0.0;
  double product_cl = 0.0;
  bool has_quantum = false;
  bool has_classical = false;

  double abs_gap() const { return std::abs(product_qm - product_cl); }
};

inline UncertaintyRecord merge_records(const UncertaintyRecord& qm,
                                       const UncertaintyRecord& cl) {
  UncertaintyRecord r = qm;
  r.classical = cl.classical;
  r.product_cl = cl.product_cl;
  r.has_classical = cl.has_classical;
  return r;
}

}  // namespace qcl
