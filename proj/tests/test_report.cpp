#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qcl/cli.hpp"
#include "qcl/report.hpp"

using namespace qcl;

namespace {

std::string temp_file(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

SweepConfig small_config() {
  SweepConfig c;
  c.families = {Family::SymmetricPower};
  c.b_values = {1, 2};
  c.n_values = {0, 1};
  c.points = 1001;
  return c;
}

}  // namespace

TEST_CASE("sweep rows land on the closed-form anchors") {
  SweepConfig c;
  c.families = {Family::SymmetricPower};
  c.b_values = {2};
  c.n_values = {0};
  const std::vector<ReportRow> rows = run_sweep(c);
  REQUIRE(rows.size() == 1);
  CHECK(std::abs(rows[0].q_product - 0.25) < 1e-4);
  CHECK(std::abs(rows[0].c_product - 0.25) < 1e-8);

  SweepConfig c2;
  c2.families = {Family::HalfLinePower};
  c2.b_values = {1};
  c2.n_values = {0};
  const std::vector<ReportRow> rows2 = run_sweep(c2);
  CHECK(std::abs(rows2[0].q_product - 4.0 / 135.0) < 2e-4);
  CHECK(std::abs(rows2[0].c_product - 4.0 / 135.0) < 2e-4);
}

TEST_CASE("sweep ordering and gap bookkeeping") {
  const std::vector<ReportRow> rows = run_sweep(small_config());
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].b == 1);
  CHECK(rows[0].n == 0);
  CHECK(rows[1].b == 1);
  CHECK(rows[1].n == 1);
  CHECK(rows[2].b == 2);
  for (const ReportRow& r : rows) {
    CHECK(r.abs_gap ==
          doctest::Approx(std::abs(r.q_product - r.c_product)).epsilon(1e-12));
    CHECK(r.family == "symmetric-power");
  }
}

TEST_CASE("sweep output is byte-stable across runs") {
  const std::string a = rows_to_csv(run_sweep(small_config()));
  const std::string b = rows_to_csv(run_sweep(small_config()));
  CHECK(a == b);
  const std::string ja = rows_to_json(run_sweep(small_config()));
  const std::string jb = rows_to_json(run_sweep(small_config()));
  CHECK(ja == jb);
}

TEST_CASE("csv schema: fixed header, LF endings, 12 significant digits") {
  const std::string csv = rows_to_csv(run_sweep(small_config()));
  std::istringstream is(csv);
  std::string header;
  std::getline(is, header);
  CHECK(header ==
        "family,b,n,E,x_max,p_max,q_x_mean,q_x2,q_p2,q_product,"
        "c_x_mean,c_x2,c_p2,c_product,abs_gap");
  CHECK(csv.find("\r") == std::string::npos);
  CHECK(format_number(M_PI) == "3.14159265359");
  CHECK(format_number(0.25) == "0.25");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
}

TEST_CASE("json rows mirror the csv schema") {
  const std::vector<ReportRow> rows = run_sweep(small_config());
  const nlohmann::json arr = nlohmann::json::parse(rows_to_json(rows));
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == rows.size());
  const std::vector<std::string> fields = {
      "family", "b",  "n",        "E",        "x_max",     "p_max",
      "q_x_mean", "q_x2", "q_p2",     "q_product", "c_x_mean", "c_x2",
      "c_p2",     "c_product", "abs_gap"};
  for (const auto& obj : arr) {
    CHECK(obj.size() == fields.size());
    for (const std::string& f : fields) CHECK(obj.contains(f));
  }
  CHECK(arr[0]["family"] == "symmetric-power");
  CHECK(std::abs(arr[3]["q_product"].get<double>() - 0.25) < 1e-3);
}

TEST_CASE("config validation") {
  SweepConfig c = small_config();
  c.b_values = {17};
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c = small_config();
  c.b_values.clear();
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c = small_config();
  c.n_values = {-1};
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c = small_config();
  c.families.clear();
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
}

TEST_CASE("figure data: panel anchors") {
  const DataTable f1b = figure_data(FigureId::F1b, 2001);
  REQUIRE(f1b.rows.size() == 10);
  REQUIRE(f1b.columns == std::vector<std::string>{"b", "classical", "quantum"});
  // b = 2 row: both series at 1/4
  CHECK(f1b.rows[1][0] == 2.0);
  CHECK(std::abs(f1b.rows[1][1] - 0.25) < 1e-8);
  CHECK(std::abs(f1b.rows[1][2] - 0.25) < 1e-4);

  const DataTable f3 = figure_data(FigureId::F3a, 2001);
  REQUIRE(f3.rows.size() == 26);
  CHECK(std::abs(f3.rows[0][2] - 0.72) < 0.01);           // quantum n = 0
  CHECK(std::abs(f3.rows[0][1] - 8.0 / 15.0) < 1e-8);     // classical
  for (int n = 1; n <= 25; n += 2) {
    CHECK(std::abs(f3.rows[n][2] - 8.0 / 15.0) < 1e-3);   // odd states
  }
}

TEST_CASE("figure files are written in both formats") {
  const std::string csv_path = temp_file("qcl_fig_test.csv");
  emit_figure_data(FigureId::F2b, csv_path, OutputFormat::Csv, 1001);
  const std::string csv = slurp(csv_path);
  CHECK(csv.rfind("b,classical,quantum\n", 0) == 0);

  const std::string json_path = temp_file("qcl_fig_test.json");
  emit_figure_data(FigureId::F2b, json_path, OutputFormat::Json, 1001);
  const nlohmann::json arr = nlohmann::json::parse(slurp(json_path));
  CHECK(arr.size() == 10);
  CHECK(arr[0].contains("quantum"));
  std::filesystem::remove(csv_path);
  std::filesystem::remove(json_path);
}

TEST_CASE("oracle check passes on the default grid") {
  const OracleReport report = oracle_check();
  CHECK(report.failures == 0);
  bool erratum_seen = false;
  for (const OracleCheckLine& line : report.lines) {
    if (line.name.find("published/quadrature ratio n=0") !=
        std::string::npos) {
      erratum_seen = true;
      CHECK(line.pass);
    }
  }
  CHECK(erratum_seen);
}

TEST_CASE("oracle check flags an under-resolved grid") {
  const OracleReport report = oracle_check(101);
  CHECK(report.failures > 0);
  bool energy_failure = false;
  for (const OracleCheckLine& line : report.lines) {
    if (!line.pass && line.name.find("bouncing energy") != std::string::npos) {
      energy_failure = true;
      CHECK(line.detail.find("got") != std::string::npos);
    }
  }
  CHECK(energy_failure);
}

TEST_CASE("cli: sweep to file, figure, exit codes") {
  std::ostringstream out, err;
  const std::string path = temp_file("qcl_cli_sweep.csv");
  int rc = cli::run({"sweep", "--family", "symmetric-power", "--b", "2",
                     "--n", "0..1", "--points", "1001", "--out", path},
                    out, err);
  CHECK(rc == 0);
  const std::string csv = slurp(path);
  CHECK(csv.rfind("family,", 0) == 0);
  CHECK(csv.find("symmetric-power,2,0,") != std::string::npos);
  std::filesystem::remove(path);

  // config errors exit 1
  out.str("");
  rc = cli::run({"sweep", "--family", "no-such-family", "--b", "2", "--n",
                 "0"},
                out, err);
  CHECK(rc == 1);
  rc = cli::run({"sweep", "--family", "symmetric-power", "--b", "42", "--n",
                 "0"},
                out, err);
  CHECK(rc == 1);
  rc = cli::run({"nonsense-subcommand"}, out, err);
  CHECK(rc == 1);
  rc = cli::run({"sweep", "--b", "two", "--n", "0"}, out, err);
  CHECK(rc == 1);
  rc = cli::run({"sweep", "--b", "99999999999999", "--n", "0"}, out, err);
  CHECK(rc == 1);
  rc = cli::run({"spectrum", "--b", "1..3", "--n", "0"}, out, err);
  CHECK(rc == 1);

  // spectrum to stdout in json
  out.str("");
  rc = cli::run({"spectrum", "--family", "symmetric-box", "--n", "1",
                 "--points", "1001", "--format", "json"},
                out, err);
  CHECK(rc == 0);
  const nlohmann::json arr = nlohmann::json::parse(out.str());
  CHECK(arr.size() == 2);
  CHECK(std::abs(arr[0]["E"].get<double>() - M_PI * M_PI / 8.0) < 1e-3);
}

TEST_CASE("cli: discretization failures exit with the solver code") {
  std::ostringstream out, err;
  const int rc =
      cli::run({"sweep", "--family", "symmetric-power", "--b", "10", "--n",
                "0..3", "--points", "101", "--c-lambda", "40"},
               out, err);
  CHECK(rc == 2);
  CHECK(err.str().find("sweep row symmetric-power-b10") != std::string::npos);
}

TEST_CASE("cli: oversized b warns but still runs up to the ceiling") {
  std::ostringstream out, err;
  const int rc = cli::run({"spectrum", "--family", "symmetric-power", "--b",
                           "12", "--n", "0", "--points", "1001"},
                          out, err);
  CHECK(rc == 0);
  CHECK(err.str().find("warning") != std::string::npos);
}
