#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qcl/moments.hpp"
#include "qcl/potential.hpp"

namespace qcl {

enum class OutputFormat { Csv, Json };

struct SweepConfig {
  std::vector<Family> families;
  std::vector<int> b_values;  // ignored for box families
  std::vector<int> n_values;  // state indices, 0-based
  int points = 4001;
  double c_lambda = 3.0;
  std::string out_path;  // empty = stdout
  OutputFormat format = OutputFormat::Csv;
};

// Documented accuracy ceiling for the exponent; past this the ground state
// hugs the walls of an effectively-box potential and the default grid
// under-resolves it.
inline constexpr int kMaxExponent = 16;
inline constexpr int kWarnExponent = 10;

struct ReportRow {
  std::string family;
  int b = 0;
  int n = 0;
  double e = 0.0;
  double x_max = 0.0;
  double p_max = 0.0;
  double q_x_mean = 0.0;
  double q_x2 = 0.0;
  double q_p2 = 0.0;
  double q_product = 0.0;
  double c_x_mean = 0.0;
  double c_x2 = 0.0;
  double c_p2 = 0.0;
  double c_product = 0.0;
  double abs_gap = 0.0;
};

ReportRow row_from_record(const UncertaintyRecord& rec);

void validate(const SweepConfig& config);

// One row per (family, b, n) in that order; deterministic.
std::vector<ReportRow> run_sweep(const SweepConfig& config);

std::string rows_to_csv(const std::vector<ReportRow>& rows);
std::string rows_to_json(const std::vector<ReportRow>& rows);

// Numbers with 12 significant digits, the serialization used everywhere.
std::string format_number(double v);

// Two-series (classical, quantum) data for the standard comparison plots.
enum class FigureId { F1a, F1b, F1c, F1d, F2a, F2b, F2c, F2d, F3a, F3b, Supp };

FigureId figure_id_from_name(const std::string& name);
std::string figure_name(FigureId id);

struct DataTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

DataTable figure_data(FigureId id, int points = 4001, double c_lambda = 3.0);

std::string table_to_csv(const DataTable& table);
std::string table_to_json(const DataTable& table);

// Writes table data for the panel to the path (CSV by default).
void emit_figure_data(FigureId id, const std::string& path,
                      OutputFormat format = OutputFormat::Csv,
                      int points = 4001, double c_lambda = 3.0);

// Analytic-vs-numeric self checks.
struct OracleCheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct OracleReport {
  std::vector<OracleCheckLine> lines;
  int failures = 0;
};

OracleReport oracle_check(int points = 4001, double c_lambda = 3.0);

void print_oracle_report(const OracleReport& report, std::ostream& os);

}  // namespace qcl
