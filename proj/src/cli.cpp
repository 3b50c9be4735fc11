#include "qcl/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "qcl/eigensolver.hpp"
#include "qcl/report.hpp"
#include "qcl/susy.hpp"

namespace qcl::cli {
namespace {

// Accepts "3", "0..10" and "1,2,5".
std::vector<int> parse_range(const std::string& text) {
  const auto to_int = [&text](const std::string& s) {
    try {
      size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer range: " + text);
    }
  };
  std::vector<int> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const int lo = to_int(text.substr(0, dots));
    const int hi = to_int(text.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty range: " + text);
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(to_int(item));
  }
  if (out.empty()) throw std::invalid_argument("empty range: " + text);
  return out;
}

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw std::invalid_argument("format must be csv or json");
}

void write_output(const std::string& payload, const std::string& path,
                  std::ostream& out) {
  if (path.empty()) {
    out << payload;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << payload;
}

void warn_large_b(const std::vector<int>& bs, std::ostream& err) {
  for (int b : bs) {
    if (b > kWarnExponent) {
      err << "warning: b = " << b
          << " is beyond the well-tested range (accuracy degrades toward b = "
          << kMaxExponent << ")\n";
    }
  }
}

int run_impl(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{
      "Dimensionless quantum uncertainty products and their classical "
      "counterparts for 1-D power-law and box potentials"};
  app.require_subcommand(1);

  std::string family_text = "symmetric-power";
  std::string b_text = "1";
  std::string n_text = "0";
  int points = 4001;
  double c_lambda = 3.0;
  std::string out_path;
  std::string format_text = "csv";

  auto add_common = [&](CLI::App* cmd, bool with_family) {
    if (with_family) {
      cmd->add_option("--family", family_text,
                      "potential family (symmetric-power, half-line-power, "
                      "symmetric-box, half-line-box)");
    }
    cmd->add_option("--points", points, "grid points (odd, >= 101)");
    cmd->add_option("--c-lambda", c_lambda, "grid extent in turning points");
    cmd->add_option("--out", out_path, "output file (default: stdout)");
    cmd->add_option("--format", format_text, "csv or json");
  };

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "lowest eigenvalues and frames of one potential");
  spectrum->add_option("--b", b_text, "power-law exponent");
  spectrum->add_option("--n", n_text, "highest state index");
  add_common(spectrum, true);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "uncertainty products over families, exponents and states");
  sweep->add_option("--b", b_text, "exponents, e.g. 2 or 1..10 or 1,2,4");
  sweep->add_option("--n", n_text, "state indices, e.g. 0 or 0..10");
  std::vector<std::string> family_list;
  sweep->add_option("--family", family_list,
                    "one or more potential families");
  sweep->add_option("--points", points, "grid points (odd, >= 101)");
  sweep->add_option("--c-lambda", c_lambda, "grid extent in turning points");
  sweep->add_option("--out", out_path, "output file (default: stdout)");
  sweep->add_option("--format", format_text, "csv or json");

  CLI::App* figure = app.add_subcommand(
      "figure", "classical/quantum series for one comparison plot");
  std::string figure_id_text;
  figure->add_option("id", figure_id_text,
                     "F1a..F1d, F2a..F2d, F3a, F3b or SUPP")
      ->required();
  add_common(figure, false);

  CLI::App* oracle = app.add_subcommand(
      "oracle-check", "analytic-vs-numeric self checks; nonzero exit on "
                      "failure");
  oracle->add_option("--points", points, "grid points (odd, >= 101)");
  oracle->add_option("--c-lambda", c_lambda, "grid extent in turning points");

  CLI::App* susy = app.add_subcommand(
      "susy", "uncertainty products on supersymmetric partner potentials");
  susy->add_option("--b", b_text, "base exponents, e.g. 1..4");
  int levels = 3;
  susy->add_option("--levels", levels, "partner levels (1..5)");
  add_common(susy, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends.
      std::ostringstream oss;
      oss << app.help();
      out << oss.str();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (spectrum->parsed()) {
      const Family family = family_from_name(family_text);
      const std::vector<int> bs = parse_range(b_text);
      const std::vector<int> ns = parse_range(n_text);
      if (bs.size() != 1 || ns.size() != 1) {
        err << "error: spectrum takes a single --b and --n\n";
        return 1;
      }
      if (family_is_power(family) && bs[0] > kMaxExponent) {
        err << "error: b exceeds the accuracy ceiling " << kMaxExponent
            << "\n";
        return 1;
      }
      warn_large_b(bs, err);
      const PotentialSpec spec =
          make_potential(family, family_is_power(family) ? bs[0] : 1);
      const Spectrum s = solve_potential(spec, ns[0], points, c_lambda);
      DataTable t;
      t.columns = {"n", "E", "x_max", "p_max"};
      for (int n = 0; n <= ns[0]; ++n) {
        const Frame f = dimensionless_frame(spec, s.energy(n));
        t.rows.push_back({static_cast<double>(n), f.energy, f.x_max, f.p_max});
      }
      write_output(parse_format(format_text) == OutputFormat::Csv
                       ? table_to_csv(t)
                       : table_to_json(t),
                   out_path, out);
      return 0;
    }

    if (sweep->parsed()) {
      SweepConfig config;
      if (family_list.empty()) family_list.push_back(family_text);
      for (const std::string& f : family_list) {
        config.families.push_back(family_from_name(f));
      }
      config.b_values = parse_range(b_text);
      config.n_values = parse_range(n_text);
      config.points = points;
      config.c_lambda = c_lambda;
      config.out_path = out_path;
      config.format = parse_format(format_text);
      validate(config);
      warn_large_b(config.b_values, err);
      const std::vector<ReportRow> rows = run_sweep(config);
      write_output(config.format == OutputFormat::Csv ? rows_to_csv(rows)
                                                      : rows_to_json(rows),
                   out_path, out);
      return 0;
    }

    if (figure->parsed()) {
      const FigureId id = figure_id_from_name(figure_id_text);
      const DataTable t = figure_data(id, points, c_lambda);
      write_output(parse_format(format_text) == OutputFormat::Csv
                       ? table_to_csv(t)
                       : table_to_json(t),
                   out_path, out);
      return 0;
    }

    if (oracle->parsed()) {
      const OracleReport report = oracle_check(points, c_lambda);
      print_oracle_report(report, out);
      return report.failures > 0 ? 3 : 0;
    }

    if (susy->parsed()) {
      const std::vector<int> bs = parse_range(b_text);
      for (int b : bs) {
        if (b < 1 || b > kMaxExponent) {
          err << "error: susy b out of range\n";
          return 1;
        }
      }
      warn_large_b(bs, err);
      const std::vector<UncertaintyRecord> recs =
          partner_uncertainty_sweep(bs, levels, points, c_lambda);
      DataTable t;
      t.columns = {"b", "level", "E", "x_max", "p_max", "q_product",
                   "c_product"};
      for (const UncertaintyRecord& r : recs) {
        t.rows.push_back({static_cast<double>(r.spec.exponent()),
                          static_cast<double>(r.n), r.quantum.frame.energy,
                          r.quantum.frame.x_max, r.quantum.frame.p_max,
                          r.product_qm, r.product_cl});
      }
      write_output(parse_format(format_text) == OutputFormat::Csv
                       ? table_to_csv(t)
                       : table_to_json(t),
                   out_path, out);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "solver failure: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  return run_impl(args, out, err);
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_impl(args, std::cout, std::cerr);
}

}  // namespace qcl::cli
