// hopf: batch driver for the leafwise obstruction pipelines.
//
//   hopf <obstruct|solve|appendix|invariants|selftest> --config <path> [--out <dir>]
//
// Exit status: 0 success, 2 unsolvable (solve only), 1 error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "hopf/acceptance.hpp"
#include "hopf/atlas.hpp"
#include "hopf/config.hpp"
#include "hopf/distributions.hpp"
#include "hopf/errors.hpp"
#include "hopf/frechet.hpp"
#include "hopf/obstruction.hpp"

namespace fs = std::filesystem;
using namespace hopf;

namespace {

std::ofstream open_csv(const fs::path& dir, const std::string& name) {
  std::ofstream out(dir / name, std::ios::binary);
  if (!out) throw Error("cannot write " + (dir / name).string());
  return out;
}

std::string num(double x) { return fmt::format("{:.12e}", x); }

void write_obstruction(const fs::path& dir, const ObstructionClass& cls, const HopfModel& m) {
  auto out = open_csv(dir, "obstruction.csv");
  const auto& diag = cls.diagnostics;
  fmt::print(out,
             "c_re,c_im,d_re,d_im,I_plus_re,I_plus_im,I_minus_re,I_minus_im,"
             "h_constant_re,h_constant_im,h_oscillation,contraction_terms\n");
  const std::string d_re = cls.d ? num(cls.d->real()) : "undefined";
  const std::string d_im = cls.d ? num(cls.d->imag()) : "undefined";
  fmt::print(out, "{},{},{},{},{},{},{},{},{},{},{},{}\n", num(cls.c.real()), num(cls.c.imag()),
             d_re, d_im, num(diag.i_plus.real()), num(diag.i_plus.imag()),
             num(diag.i_minus.real()), num(diag.i_minus.imag()), num(cls.h_constant.real()),
             num(cls.h_constant.imag()), num(cls.h_oscillation), diag.contraction_terms);

  auto samples = open_csv(dir, "h_samples.csv");
  fmt::print(samples, "theta");
  for (int i = 1; i <= m.n; ++i) fmt::print(samples, ",u{}", i);
  fmt::print(samples, ",h_re,h_im\n");
  for (std::size_t i = 0; i < cls.grid.points.size(); ++i) {
    const TransversalPoint& v = cls.grid.points[i];
    fmt::print(samples, "{}", num(v.theta));
    for (double x : v.u) fmt::print(samples, ",{}", num(x));
    fmt::print(samples, ",{},{}\n", num(cls.h_samples[i].real()), num(cls.h_samples[i].imag()));
  }

  fmt::print("c = {:.9f}{:+.9f}i\n", cls.c.real(), cls.c.imag());
  fmt::print("I_plus = {:.9f}  I_minus = {:.9f}\n", diag.i_plus.real(), diag.i_minus.real());
  fmt::print("osc(h) = {:.3e}\n", cls.h_oscillation);
  if (cls.d) {
    fmt::print("d = {:.9f}{:+.9f}i\n", cls.d->real(), cls.d->imag());
  } else {
    fmt::print("d = undefined\n");
  }
}

int cmd_obstruct(const RunConfig& cfg, const fs::path& dir) {
  const ObstructionClass cls = obstruction(parse_field(cfg.field, cfg.model), cfg.model);
  write_obstruction(dir, cls, cfg.model);
  return 0;
}

int cmd_solve(const RunConfig& cfg, const fs::path& dir) {
  const HopfModel& m = cfg.model;
  const SolveReport rep = solve_cohomological_equation(parse_field(cfg.field, m), m);
  write_obstruction(dir, rep.obstruction, m);
  auto summary = open_csv(dir, "solve.csv");
  fmt::print(summary, "solvable,residual,normalization_re,normalization_im,descent_terms\n");
  fmt::print(summary, "{},{},{},{},{}\n", rep.solvable() ? 1 : 0,
             rep.solvable() ? num(rep.residual) : "undefined", num(rep.normalization.real()),
             num(rep.normalization.imag()), rep.descent_terms);
  if (!rep.solvable()) {
    fmt::print("unsolvable: the class of g does not vanish\n");
    return 2;
  }
  auto out = open_csv(dir, "solution.csv");
  fmt::print(out, "theta");
  for (int i = 1; i <= m.n + 1; ++i) fmt::print(out, ",w{}", i);
  fmt::print(out, ",f_re,f_im\n");
  for (const HopfPoint& q : m_cover_grid(m).points) {
    const Complex f = (*rep.solution)(q);
    fmt::print(out, "{}", num(q.theta));
    for (double x : q.w) fmt::print(out, ",{}", num(x));
    fmt::print(out, ",{},{}\n", num(f.real()), num(f.imag()));
  }
  fmt::print("solved: residual = {:.3e}\n", rep.residual);
  return 0;
}

int cmd_appendix(const RunConfig& cfg, const fs::path& dir) {
  AppendixProfile profile;
  profile.phi = make_profile(cfg.phi);
  profile.p_max = cfg.p_max;
  // 1/t leaves every bounded set near 0: only the witness is meaningful.
  if (cfg.phi != "inverse") {
    auto out = open_csv(dir, "convergence_table.csv");
    write_convergence_csv(out, convergence_table(profile, cfg.model));
  }
  auto out = open_csv(dir, "nonsmoothness_witness.csv");
  write_witness_csv(out, nonsmoothness_witness(appendix_pair(profile, 1, cfg.model).f, cfg.model));
  return 0;
}

int cmd_invariants(const RunConfig& cfg, const fs::path& dir) {
  const HopfModel& m = cfg.model;
  std::vector<InvariantDistributionM> dists;
  dists.push_back(lift_distribution(uniform_distribution(), m, "uniform"));
  for (std::uint64_t s = cfg.seed; s < cfg.seed + 3; ++s) {
    DistributionV t;
    t.density = random_field_v(s, m);
    dists.push_back(lift_distribution(t, m, fmt::format("density:{}", s)));
    dists.push_back(lift_distribution(dirac(random_point_v(s, m)), m, fmt::format("dirac:{}", s)));
  }
  dists.push_back(orbit_distribution(Orbit::plus, m));
  dists.push_back(orbit_distribution(Orbit::minus, m));

  std::vector<NamedField> battery{{cfg.field, parse_field(cfg.field, m)}};
  for (std::uint64_t s = cfg.seed; s < cfg.seed + 3; ++s) {
    const std::string name = fmt::format("coboundary:random:{}", s);
    battery.push_back({name, parse_field(name, m)});
  }
  auto out = open_csv(dir, "invariants.csv");
  fmt::print(out, "distribution,field,pairing_re,pairing_im\n");
  for (const NamedField& nf : battery) {
    const ObstructionClass cls = obstruction(nf.field, m);
    for (const auto& t : dists) {
      const Complex v = t.pairing(cls);
      fmt::print(out, "{},{},{},{}\n", t.name(), nf.name, num(v.real()), num(v.imag()));
    }
  }
  return 0;
}

int cmd_selftest() {
  bool all = true;
  for (const Criterion& c : acceptance_criteria()) {
    const CriterionResult r = run_criterion(c);
    all = all && r.pass;
    fmt::print("{}\n", format_result(c, r));
    std::cout.flush();
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leafwise cohomology of the affine Reeb flow on the Hopf manifold"};
  std::string command;
  std::string config_path;
  std::string out_dir = ".";
  app.add_option("command", command, "obstruct | solve | appendix | invariants | selftest")
      ->required()
      ->check(CLI::IsMember({"obstruct", "solve", "appendix", "invariants", "selftest"}));
  app.add_option("--config", config_path, "flat key=value configuration file");
  app.add_option("--out", out_dir, "directory for CSV reports");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (command == "selftest") return cmd_selftest();
    if (config_path.empty()) throw ConfigError(0, "--config is required for " + command);
    const RunConfig cfg = load_config(config_path);
    fs::create_directories(out_dir);
    if (command == "obstruct") return cmd_obstruct(cfg, out_dir);
    if (command == "solve") return cmd_solve(cfg, out_dir);
    if (command == "appendix") return cmd_appendix(cfg, out_dir);
    return cmd_invariants(cfg, out_dir);
  } catch (const ConfigError& e) {
    fmt::print(stderr, "config error: {}\n", e.what());
  } catch (const Error& e) {
    fmt::print(stderr, "{} failed: {}\n", command, e.what());
  } catch (const std::exception& e) {
    fmt::print(stderr, "{} failed: {}\n", command, e.what());
  }
  return 1;
}
