#include "qcl/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qcl/analytic_oracles.hpp"
#include "qcl/classical_moments.hpp"
#include "qcl/eigensolver.hpp"
#include "qcl/quantum_moments.hpp"
#include "qcl/susy.hpp"

namespace qcl {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

ReportRow row_from_record(const UncertaintyRecord& rec) {
  ReportRow r;
  r.family = family_name(rec.spec.family());
  r.b = rec.spec.is_power() ? rec.spec.exponent() : 0;
  r.n = rec.n;
  r.e = rec.quantum.frame.energy;
  r.x_max = rec.quantum.frame.x_max;
  r.p_max = rec.quantum.frame.p_max;
  r.q_x_mean = rec.quantum.x_mean;
  r.q_x2 = rec.quantum.x2;
  r.q_p2 = rec.quantum.p2;
  r.q_product = rec.product_qm;
  r.c_x_mean = rec.classical.x_mean;
  r.c_x2 = rec.classical.x2;
  r.c_p2 = rec.classical.p2;
  r.c_product = rec.product_cl;
  r.abs_gap = rec.abs_gap();
  return r;
}

void validate(const SweepConfig& config) {
  if (config.families.empty()) {
    throw std::invalid_argument("sweep needs at least one family");
  }
  if (config.n_values.empty()) {
    throw std::invalid_argument("sweep needs at least one state index");
  }
  bool any_power = false;
  for (Family f : config.families) any_power |= family_is_power(f);
  if (any_power && config.b_values.empty()) {
    throw std::invalid_argument("sweep over power families needs b values");
  }
  for (int b : config.b_values) {
    if (b < 1) throw std::invalid_argument("b must be >= 1");
    if (b > kMaxExponent) {
      throw std::invalid_argument(
          "b > " + std::to_string(kMaxExponent) +
          " is past the documented accuracy ceiling of the default grid");
    }
  }
  for (int n : config.n_values) {
    if (n < 0) throw std::invalid_argument("state indices must be >= 0");
  }
  if (config.points < 101) throw std::invalid_argument("points < 101");
  if (config.c_lambda < 2.0) throw std::invalid_argument("c_lambda < 2");
}

std::vector<ReportRow> run_sweep(const SweepConfig& config) {
  validate(config);
  const int n_max =
      *std::max_element(config.n_values.begin(), config.n_values.end());

  std::vector<ReportRow> rows;
  for (Family family : config.families) {
    std::vector<int> b_list =
        family_is_power(family) ? config.b_values : std::vector<int>{0};
    for (int b : b_list) {
      const PotentialSpec spec = family_is_power(family)
                                     ? make_potential(family, b)
                                     : make_potential(family, 1);
      try {
        const Spectrum spectrum =
            solve_potential(spec, n_max, config.points, config.c_lambda);
        for (int n : config.n_values) {
          UncertaintyRecord rec = uncertainty_product(spec, spectrum, n);
          rec = merge_records(
              rec, classical_dispersion_product(spec, spectrum.energy(n)));
          rows.push_back(row_from_record(rec));
        }
      } catch (const std::runtime_error& e) {
        throw std::runtime_error("sweep row " + spec.name() + ": " + e.what());
      }
    }
  }
  return rows;
}

namespace {

constexpr const char* kCsvHeader =
    "family,b,n,E,x_max,p_max,q_x_mean,q_x2,q_p2,q_product,"
    "c_x_mean,c_x2,c_p2,c_product,abs_gap";

void append_row_fields(const ReportRow& r, std::ostringstream& os) {
  os << r.family << ',' << r.b << ',' << r.n << ',' << format_number(r.e)
     << ',' << format_number(r.x_max) << ',' << format_number(r.p_max) << ','
     << format_number(r.q_x_mean) << ',' << format_number(r.q_x2) << ','
     << format_number(r.q_p2) << ',' << format_number(r.q_product) << ','
     << format_number(r.c_x_mean) << ',' << format_number(r.c_x2) << ','
     << format_number(r.c_p2) << ',' << format_number(r.c_product) << ','
     << format_number(r.abs_gap);
}

nlohmann::ordered_json row_to_json(const ReportRow& r) {
  nlohmann::ordered_json j;
  j["family"] = r.family;
  j["b"] = r.b;
  j["n"] = r.n;
  j["E"] = r.e;
  j["x_max"] = r.x_max;
  j["p_max"] = r.p_max;
  j["q_x_mean"] = r.q_x_mean;
  j["q_x2"] = r.q_x2;
  j["q_p2"] = r.q_p2;
  j["q_product"] = r.q_product;
  j["c_x_mean"] = r.c_x_mean;
  j["c_x2"] = r.c_x2;
  j["c_p2"] = r.c_p2;
  j["c_product"] = r.c_product;
  j["abs_gap"] = r.abs_gap;
  return j;
}

}  // namespace

std::string rows_to_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const ReportRow& r : rows) {
    append_row_fields(r, os);
    os << '\n';
  }
  return os.str();
}

std::string rows_to_json(const std::vector<ReportRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ReportRow& r : rows) arr.push_back(row_to_json(r));
  return arr.dump(2) + "\n";
}

FigureId figure_id_from_name(const std::string& name) {
  static const std::map<std::string, FigureId> ids = {
      {"F1a", FigureId::F1a}, {"F1b", FigureId::F1b}, {"F1c", FigureId::F1c},
      {"F1d", FigureId::F1d}, {"F2a", FigureId::F2a}, {"F2b", FigureId::F2b},
      {"F2c", FigureId::F2c}, {"F2d", FigureId::F2d}, {"F3a", FigureId::F3a},
      {"F3b", FigureId::F3b}, {"SUPP", FigureId::Supp}};
  auto it = ids.find(name);
  if (it == ids.end()) {
    throw std::invalid_argument("unknown figure id: " + name);
  }
  return it->second;
}

std::string figure_name(FigureId id) {
  switch (id) {
    case FigureId::F1a: return "F1a";
    case FigureId::F1b: return "F1b";
    case FigureId::F1c: return "F1c";
    case FigureId::F1d: return "F1d";
    case FigureId::F2a: return "F2a";
    case FigureId::F2b: return "F2b";
    case FigureId::F2c: return "F2c";
    case FigureId::F2d: return "F2d";
    case FigureId::F3a: return "F3a";
    case FigureId::F3b: return "F3b";
    case FigureId::Supp: return "SUPP";
  }
  throw std::logic_error("unknown figure id");
}

namespace {

// Product-vs-b panel at fixed n.
DataTable product_vs_exponent(Family family, int n, int points,
                              double c_lambda) {
  DataTable t;
  t.columns = {"b", "classical", "quantum"};
  for (int b = 1; b <= 10; ++b) {
    const PotentialSpec spec = make_potential(family, b);
    const Spectrum spectrum = solve_potential(spec, n, points, c_lambda);
    const UncertaintyRecord q = uncertainty_product(spec, spectrum, n);
    const UncertaintyRecord c =
        classical_dispersion_product(spec, spectrum.energy(n));
    t.rows.push_back({static_cast<double>(b), c.product_cl, q.product_qm});
  }
  return t;
}

// <X^2> versus n for the symmetric linear potential.
DataTable x2_vs_n(int points, double c_lambda) {
  DataTable t;
  t.columns = {"n", "classical", "quantum"};
  const PotentialSpec spec = make_potential(Family::SymmetricPower, 1);
  const int n_top = 25;
  const Spectrum spectrum = solve_potential(spec, n_top, points, c_lambda);
  const double cl = classical_moment_closed_form(1, Family::SymmetricPower, 2);
  for (int n = 0; n <= n_top; ++n) {
    const Frame frame = dimensionless_frame(spec, spectrum.energy(n));
    const double q = position_moment(spectrum, n, frame, 2);
    t.rows.push_back({static_cast<double>(n), cl, q});
  }
  return t;
}

DataTable partner_products_table(int points, double c_lambda) {
  DataTable t;
  t.columns = {"b", "level", "classical", "quantum"};
  const std::vector<UncertaintyRecord> recs =
      partner_uncertainty_sweep({1, 2, 3, 4}, 3, points, c_lambda);
  for (const UncertaintyRecord& r : recs) {
    t.rows.push_back({static_cast<double>(r.spec.exponent()),
                      static_cast<double>(r.n), r.product_cl, r.product_qm});
  }
  return t;
}

}  // namespace

DataTable figure_data(FigureId id, int points, double c_lambda) {
  switch (id) {
    case FigureId::F1a:
      return product_vs_exponent(Family::SymmetricPower, 0, points, c_lambda);
    case FigureId::F1b:
      return product_vs_exponent(Family::SymmetricPower, 1, points, c_lambda);
    case FigureId::F1c:
      return product_vs_exponent(Family::SymmetricPower, 2, points, c_lambda);
    case FigureId::F1d:
      return product_vs_exponent(Family::SymmetricPower, 10, points, c_lambda);
    case FigureId::F2a:
      return product_vs_exponent(Family::HalfLinePower, 0, points, c_lambda);
    case FigureId::F2b:
      return product_vs_exponent(Family::HalfLinePower, 1, points, c_lambda);
    case FigureId::F2c:
      return product_vs_exponent(Family::HalfLinePower, 2, points, c_lambda);
    case FigureId::F2d:
      return product_vs_exponent(Family::HalfLinePower, 10, points, c_lambda);
    case FigureId::F3a:
    case FigureId::F3b:
      return x2_vs_n(points, c_lambda);
    case FigureId::Supp:
      return partner_products_table(points, c_lambda);
  }
  throw std::logic_error("unknown figure id");
}

std::string table_to_csv(const DataTable& table) {
  std::ostringstream os;
  for (size_t i = 0; i < table.columns.size(); ++i) {
    os << (i ? "," : "") << table.columns[i];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << format_number(row[i]);
    }
    os << '\n';
  }
  return os.str();
}

std::string table_to_json(const DataTable& table) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = row[i];
    arr.push_back(obj);
  }
  return arr.dump(2) + "\n";
}

void emit_figure_data(FigureId id, const std::string& path,
                      OutputFormat format, int points, double c_lambda) {
  const DataTable t = figure_data(id, points, c_lambda);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << (format == OutputFormat::Csv ? table_to_csv(t) : table_to_json(t));
}

namespace {

class CheckSet {
 public:
  void check(const std::string& name, double got, double want, double tol) {
    OracleCheckLine line;
    line.name = name;
    line.pass = std::abs(got - want) <= tol;
    line.detail = "got " + format_number(got) + ", want " +
                  format_number(want) + " +- " + format_number(tol);
    add(line);
  }

  void check_rel(const std::string& name, double got, double want,
                 double rel_tol) {
    check(name, got, want, rel_tol * std::abs(want));
  }

  void add(OracleCheckLine line) {
    if (!line.pass) ++report_.failures;
    report_.lines.push_back(std::move(line));
  }

  OracleReport take() { return std::move(report_); }

 private:
  OracleReport report_;
};

}  // namespace

OracleReport oracle_check(int points, double c_lambda) {
  CheckSet checks;

  // Beta closed forms against endpoint-singular quadrature.
  for (int b = 1; b <= 10; ++b) {
    const PotentialSpec spec = make_potential(Family::HalfLinePower, b);
    for (int k = 1; k <= 4; ++k) {
      const double quad = classical_average(
          spec, 1.0, [k](double x, double) { return std::pow(x, k); });
      const double closed =
          classical_moment_closed_form(b, Family::HalfLinePower, k);
      checks.check("beta vs quadrature <X^" + std::to_string(k) + "> b=" +
                       std::to_string(b),
                   quad, closed, 1e-8);
    }
  }

  // Airy-zero ladder against the eigensolver. Coarse grids support fewer
  // levels (5% band cap); the levels that fit still get checked and show
  // their deltas.
  {
    const PotentialSpec spec = make_potential(Family::HalfLinePower, 1);
    const int band_cap = static_cast<int>(0.05 * (points - 2)) - 1;
    const int n_top = std::min(10, std::max(0, band_cap));
    const Spectrum s = solve_potential(spec, n_top, points, c_lambda);
    const std::vector<double> oracle = bouncing_energies(n_top + 1);
    for (int n = 0; n <= n_top; ++n) {
      checks.check_rel("bouncing energy E_" + std::to_string(n),
                       s.energy(n), oracle[n], 1e-3);
    }
  }

  // Half-oscillator moments: closed forms against quadrature.
  for (int n = 0; n <= 10; ++n) {
    const double q4 =
        half_oscillator_moment(n, 4, MomentMethod::Quadrature).value;
    const double c4 =
        half_oscillator_moment(n, 4, MomentMethod::ClosedForm).value;
    checks.check("half-oscillator <X^4> n=" + std::to_string(n), c4, q4,
                 1e-10);
  }
  for (int n = 1; n <= 10; n += 2) {
    const double q1 =
        half_oscillator_moment(n, 1, MomentMethod::Quadrature).value;
    const double c1 =
        half_oscillator_moment(n, 1, MomentMethod::ClosedForm).value;
    checks.check("half-oscillator odd <X> n=" + std::to_string(n), c1, q1,
                 1e-10);
  }

  // Published even-state first moment disagrees with direct integration by
  // exactly 2(2m+1)/(4m+1); keep the discrepancy on record.
  for (int n = 0; n <= 4; n += 2) {
    const int m = n / 2;
    const double published = half_oscillator_even_first_moment_published(n);
    const double quad =
        half_oscillator_moment(n, 1, MomentMethod::Quadrature).value;
    const double want = 2.0 * (2.0 * m + 1.0) / (4.0 * m + 1.0);
    checks.check("even <X> published/quadrature ratio n=" + std::to_string(n),
                 published / quad, want, 1e-6);
  }

  // Large-n limits.
  checks.check("<X^4> limit at n=50",
               1.5 * (50.0 * 50.0 + 50.0 + 0.5) / (101.0 * 101.0), 3.0 / 8.0,
               0.01);
  checks.check("odd <X> closed form at n=50 vs 2/pi",
               half_oscillator_odd_first_moment_closed(50),
               half_oscillator_first_moment_limit(), 0.01);
  checks.check("central binomial ratio at n=500",
               central_binomial_limit_probe(500),
               1.0 / std::sqrt(3.14159265358979323846), 1e-3);

  return checks.take();
}

void print_oracle_report(const OracleReport& report, std::ostream& os) {
  for (const OracleCheckLine& line : report.lines) {
    os << (line.pass ? "[PASS] " : "[FAIL] ") << line.name << ": "
       << line.detail << "\n";
  }
  os << report.lines.size() - report.failures << "/" << report.lines.size()
     << " checks passed";
  if (report.failures > 0) os << " (" << report.failures << " failed)";
  os << "\n";
}

}  // namespace qcl
