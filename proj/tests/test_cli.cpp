#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <doctest.h>

namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  fs::path dir;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("hopf_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

Run hopf(const std::string& command, const std::string& config, const std::string& name) {
  const fs::path dir = scratch(name);
  const fs::path cfg = dir / "run.cfg";
  std::ofstream(cfg) << config;
  const std::string cmd = std::string(HOPF_BINARY) + " " + command + " --config " + cfg.string() +
                          " --out " + (dir / "out").string() + " > " + (dir / "log").string() +
                          " 2>&1";
  const int raw = std::system(cmd.c_str());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, dir};
}

// Second line of a one-row CSV, split on commas.
std::vector<std::string> data_row(const fs::path& csv) {
  std::istringstream in(slurp(csv));
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  std::vector<std::string> cells;
  std::stringstream ss(row);
  for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
  return cells;
}

}  // namespace

TEST_CASE("obstruct const1") {
  const Run r = hopf("obstruct", "field=const1\nlambda=0.5\n", "const1");
  REQUIRE(r.status == 0);
  const auto cells = data_row(r.dir / "out" / "obstruction.csv");
  CHECK(std::stod(cells[0]) == doctest::Approx(1.386294).epsilon(1e-6));
  CHECK(cells[2] == "undefined");
  CHECK(fs::exists(r.dir / "out" / "h_samples.csv"));
}

TEST_CASE("obstruct t_over_r reports the descent scalar") {
  const Run r = hopf("obstruct", "field=t_over_r\nlambda=0.5\n", "tr");
  REQUIRE(r.status == 0);
  const auto cells = data_row(r.dir / "out" / "obstruction.csv");
  CHECK(std::abs(std::stod(cells[0])) < 1e-6);
  CHECK(std::stod(cells[2]) == doctest::Approx(-0.693147).epsilon(1e-6));
}

TEST_CASE("solve: solvable and unsolvable exit codes") {
  const Run ok = hopf("solve", "field=coboundary:cos_theta\n", "solve_ok");
  REQUIRE(ok.status == 0);
  const auto cells = data_row(ok.dir / "out" / "solve.csv");
  CHECK(cells[0] == "1");
  CHECK(std::stod(cells[1]) < 1e-5);
  CHECK(fs::exists(ok.dir / "out" / "solution.csv"));

  const Run no = hopf("solve", "field=t_over_r\n", "solve_no");
  CHECK(no.status == 2);
  CHECK(!fs::exists(no.dir / "out" / "solution.csv"));
}

TEST_CASE("errors exit with status 1 and name the line") {
  const Run bad = hopf("obstruct", "n=2\nlambda=2\n", "bad_value");
  CHECK(bad.status == 1);
  const Run bad_line = hopf("obstruct", "n=2\nsphere_pts=4\n", "bad_line");
  CHECK(bad_line.status == 1);
  CHECK(slurp(bad_line.dir / "log").find("line 2") != std::string::npos);
  const Run bad_field = hopf("obstruct", "field=w9\n", "bad_field");
  CHECK(bad_field.status == 1);
  const Run bad_cmd = hopf("frobnicate", "n=2\n", "bad_cmd");
  CHECK(bad_cmd.status == 1);
}

TEST_CASE("appendix and invariants write their tables") {
  const Run a = hopf("appendix", "phi=sqrt\np_max=8\n", "appendix");
  REQUIRE(a.status == 0);
  const std::string table = slurp(a.dir / "out" / "convergence_table.csv");
  CHECK(table.rfind("k,r,p,rho,p_times_rho\n", 0) == 0);
  CHECK(fs::exists(a.dir / "out" / "nonsmoothness_witness.csv"));

  const Run inv = hopf("invariants", "field=const1\n", "invariants");
  REQUIRE(inv.status == 0);
  CHECK(slurp(inv.dir / "out" / "invariants.csv").find("orbit_plus,const1,") != std::string::npos);
}

TEST_CASE("identical configs give byte-identical output") {
  const std::string cfg = "field=random:5 + w2\nn=3\nlambda=0.3333333333333333\n";
  const Run a = hopf("obstruct", cfg, "det_a");
  const Run b = hopf("obstruct", cfg, "det_b");
  REQUIRE(a.status == 0);
  REQUIRE(b.status == 0);
  for (const char* f : {"obstruction.csv", "h_samples.csv"}) {
    CHECK(slurp(a.dir / "out" / f) == slurp(b.dir / "out" / f));
  }
}
