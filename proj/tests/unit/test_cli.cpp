#include <doctest.h>

#include <cstdlib>
#include <string>

#include <json.hpp>

#include "helpers.hpp"

namespace {

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(INFOIMB_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

nlohmann::json load_json(const std::string& path) {
  return nlohmann::json::parse(testutil::read_file(path));
}

/// Analytical payload with the manifest timestamp removed.
std::string comparable(const std::string& path) {
  nlohmann::json j = load_json(path);
  j["manifest"].erase("created_utc");
  return j.dump();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("synth is deterministic and feeds the pipeline") {
  testutil::TempDir dir("cli");
  const std::string a = dir.file("a.csv");
  const std::string b = dir.file("b.csv");
  const std::string base =
      "synth --regime multivariate_sum --n 200 --seed 42 --out ";
  REQUIRE(run_cli(base + a) == 0);
  REQUIRE(run_cli(base + b) == 0);
  CHECK(testutil::read_file(a) == testutil::read_file(b));
  CHECK(!testutil::read_file(a + ".manifest.json").empty());
}

TEST_CASE("plane puts a disguised target copy at (2/N, 2/N)") {
  testutil::TempDir dir("cli");
  const std::string csv = dir.file("p.csv");
  std::string text = "date,alias,t\n";
  infoimb::PortableRng rng(1);
  infoimb::Date d = infoimb::parse_date("2014-01-01");
  for (int i = 0; i < 40; ++i, d += std::chrono::days{1}) {
    const double v = rng.normal();
    text += infoimb::format_date(d) + "," + std::to_string(v) + "," +
            std::to_string(v) + "\n";
  }
  testutil::write_file(csv, text);

  const std::string out = dir.file("plane.json");
  REQUIRE(run_cli("plane --input " + csv + " --target t --out " + out) == 0);
  const auto plane = load_json(out)["result"];
  REQUIRE(plane.size() == 1);
  CHECK(plane[0]["x_columns"][0] == "alias");
  CHECK(plane[0]["forward"].get<double>() == 2.0 / 40.0);
  CHECK(plane[0]["backward"].get<double>() == 2.0 / 40.0);
}

TEST_CASE("select with max-k 1 matches the best plane point") {
  testutil::TempDir dir("cli");
  const std::string csv = dir.file("p.csv");
  REQUIRE(run_cli("synth --regime informative_plus_noise --n 150 --d-inf 2 "
                  "--d-noise 3 --seed 5 --out " +
                  csv) == 0);
  const std::string plane_out = dir.file("plane.json");
  const std::string sel_out = dir.file("sel.json");
  REQUIRE(run_cli("plane --input " + csv + " --target target --out " +
                  plane_out) == 0);
  REQUIRE(run_cli("select --input " + csv +
                  " --target target --max-k 1 --out " + sel_out) == 0);

  const auto plane = load_json(plane_out)["result"];
  double best = 1e300;
  std::string best_col;
  for (const auto& row : plane) {
    if (row["forward"].get<double>() < best) {
      best = row["forward"].get<double>();
      best_col = row["x_columns"][0];
    }
  }
  const auto trace = load_json(sel_out)["result"];
  REQUIRE(trace["steps"].size() == 1);
  CHECK(trace["steps"][0]["column"] == best_col);
  CHECK(trace["steps"][0]["forward"].get<double>() == best);
}

TEST_CASE("scan over one frequency matches select") {
  testutil::TempDir dir("cli");
  const std::string csv = dir.file("p.csv");
  REQUIRE(run_cli("synth --regime linear_noise --sigma 0.5 --n 120 --seed 9 "
                  "--out " +
                  csv) == 0);
  const std::string scan_out = dir.file("scan.json");
  const std::string sel_out = dir.file("sel.json");
  REQUIRE(run_cli("scan --input " + csv +
                  " --target y --frequencies daily --lags 0 --max-k 1 "
                  "--out " +
                  scan_out) == 0);
  REQUIRE(run_cli("select --input " + csv +
                  " --target y --max-k 1 --out " + sel_out) == 0);
  const auto cell = load_json(scan_out)["result"]["cells"][0];
  const auto direct = load_json(sel_out)["result"];
  CHECK(cell["frequency"] == "daily");
  CHECK(cell["trace"]["steps"][0]["column"] ==
        direct["steps"][0]["column"]);
  CHECK(cell["trace"]["steps"][0]["forward"] ==
        direct["steps"][0]["forward"]);
}

TEST_CASE("resample on the native frequency reproduces the values") {
  testutil::TempDir dir("cli");
  const std::string csv = dir.file("d.csv");
  REQUIRE(run_cli("synth --regime trend_plus_wiggle --n 80 --seed 3 --out " +
                  csv) == 0);
  const std::string out = dir.file("same.csv");
  REQUIRE(run_cli("resample --input " + csv +
                  " --frequency daily --out " + out) == 0);
  // Identical data block; only the file is rewritten.
  CHECK(testutil::read_file(csv) == testutil::read_file(out));
}

TEST_CASE("forecast report and path file") {
  testutil::TempDir dir("cli");
  const std::string csv = dir.file("p.csv");
  REQUIRE(run_cli("synth --regime informative_plus_noise --n 120 --d-inf 2 "
                  "--d-noise 3 --seed 11 --out " +
                  csv) == 0);
  const std::string out = dir.file("fc.json");
  REQUIRE(run_cli("forecast --input " + csv +
                  " --target target --mode selected --k 2 --folds 4 --out " +
                  out) == 0);
  const auto result = load_json(out)["result"];
  CHECK(result["mse_mean"].get<double>() >= 0.0);
  CHECK(result["folds"].size() == 4);
  const std::string paths = testutil::read_file(dir.file("fc.paths.csv"));
  CHECK(paths.rfind("date,realized,predicted,fold", 0) == 0);
  CHECK(std::count(paths.begin(), paths.end(), '\n') == 121);
}

TEST_CASE("identical invocations produce byte-identical reports") {
  testutil::TempDir dir("cli");
  const std::string csv = dir.file("p.csv");
  REQUIRE(run_cli("synth --regime informative_plus_noise --n 100 --d-inf 2 "
                  "--d-noise 4 --seed 21 --out " +
                  csv) == 0);
  const std::string r1 = dir.file("r1.json");
  const std::string r2 = dir.file("r2.json");
  const std::string args = "forecast --input " + csv +
                           " --target target --mode random --k 2 "
                           "--replications 3 --seed 4 --folds 4 --out ";
  REQUIRE(run_cli(args + r1) == 0);
  REQUIRE(run_cli(args + r2) == 0);
  // argv differs in the output path, so compare the analytical payload.
  CHECK(load_json(r1)["result"].dump() == load_json(r2)["result"].dump());
}

TEST_CASE("exit codes distinguish usage from data problems") {
  testutil::TempDir dir("cli");
  CHECK(run_cli("plane --no-such-flag") == 2);
  CHECK(run_cli("") == 2);  // a subcommand is required
  CHECK(run_cli("plane --input /nonexistent.csv --target t --out " +
                dir.file("x.json")) == 3);

  const std::string bad = dir.file("bad.csv");
  testutil::write_file(bad, "date,x\n2014-01-02,1\n2014-01-02,2\n");
  CHECK(run_cli("plane --input " + bad + " --target x --out " +
                dir.file("y.json")) == 3);
}

TEST_CASE("describe and corr emit plot-ready tables") {
  testutil::TempDir dir("cli");
  const std::string csv = dir.file("p.csv");
  REQUIRE(run_cli("synth --regime linear_noise --n 100 --seed 2 --out " +
                  csv) == 0);
  const std::string stats = dir.file("stats.csv");
  REQUIRE(run_cli("describe --input " + csv + " --format csv --out " +
                  stats) == 0);
  CHECK(testutil::read_file(stats).rfind("name,mean,std", 0) == 0);

  const std::string corr = dir.file("corr.json");
  REQUIRE(run_cli("corr --input " + csv + " --target y --out " + corr) == 0);
  const auto rows = load_json(corr)["result"];
  REQUIRE(rows.size() == 1);
  CHECK(rows[0]["pearson"].get<double>() > 0.5);
}

}  // TEST_SUITE
