// frenetbv: solve, check and export frame problems with jump data.
//
// Exit codes: 0 ok, 1 I/O failure, 2 parse error, 3 invalid data (including
// inadmissible jumps), 4 numerical failure.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "frenetbv/error.hpp"
#include "frenetbv/export.hpp"
#include "frenetbv/run.hpp"
#include "frenetbv/scenario.hpp"

namespace fs = std::filesystem;
using namespace frenetbv;

namespace {

enum Exit : int { kOk = 0, kIo = 1, kParse = 2, kValidation = 3, kNumerical = 4 };

struct Common {
  std::string scenario_file;
  std::string builtin;
  std::optional<double> d;
  std::optional<double> tau;
  std::optional<unsigned> seed;
  std::optional<int> grid;
  std::vector<double> eps;
  std::string out = "out";
  std::string format;  // empty: everything the scenario asks for
};

void add_common(CLI::App* cmd, Common& c) {
  auto* file = cmd->add_option("--scenario", c.scenario_file, "YAML scenario file")->check(CLI::ExistingFile);
  auto* builtin = cmd->add_option("--builtin", c.builtin, "built-in scenario name")
                      ->check(CLI::IsMember(builtin_names()));
  file->excludes(builtin);
  cmd->add_option("--d", c.d, "curvature jump for case-study / planar-jump");
  cmd->add_option("--tau", c.tau, "torsion jump for case-study");
  cmd->add_option("--seed", c.seed, "seed for random-jumps");
  cmd->add_option("--grid", c.grid, "base grid intervals")->check(CLI::PositiveNumber);
  cmd->add_option("--eps", c.eps, "mollification radii, strictly decreasing")->delimiter(',');
  cmd->add_option("--out", c.out, "output directory");
  cmd->add_option("--format", c.format, "restrict outputs to one format")
      ->check(CLI::IsMember({"csv", "json", "obj"}));
}

Scenario load(const Common& c) {
  if (c.scenario_file.empty() && c.builtin.empty())
    throw ParseError("one of --scenario or --builtin is required", 0, "");
  Scenario sc = c.scenario_file.empty() ? make_builtin(c.builtin, {c.d, c.tau, c.seed}) : load_scenario(c.scenario_file);
  if (c.grid) sc.solver.grid = *c.grid;
  if (!c.eps.empty()) sc.solver.eps_ladder = c.eps;
  try {
    sc.solver.validate();
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0, "--eps/--grid");
  }
  return sc;
}

bool wants(const Common& c, const char* fmt) { return c.format.empty() || c.format == fmt; }

std::string out_path(const Common& c, const std::string& name) {
  fs::create_directories(c.out);
  return (fs::path(c.out) / name).string();
}

void emit(const Common& c, const std::string& name, const std::string& content) {
  const auto path = out_path(c, name);
  write_atomic(path, content);
  std::cout << "wrote " << path << "\n";
}

int cmd_solve(const Common& c) {
  const Scenario sc = load(c);
  const SolveResult r = run_solve(sc);
  const auto& g = r.summary;
  std::cout << fmt::format("{}: {} on {} nodes\n", sc.name, r.solver, r.path->size());
  std::cout << fmt::format("  TC  = {:.12f}  (diffuse {:.12f} + jumps {:.12f})\n", g.tc_exact, g.diffuse_tc_mass,
                           g.jump_tc_sum);
  std::cout << fmt::format("  TAT = {:.12f}  (diffuse {:.12f} + jumps {:.12f})\n", g.tat_exact,
                           g.diffuse_tat_mass, g.jump_tat_sum);
  if (g.tc_polygonal)
    std::cout << fmt::format("  polygonal ({} segments): TC {:.6f}, TAT {:.6f}\n", *g.polygon_segments,
                             *g.tc_polygonal, *g.tat_polygonal);
  std::cout << fmt::format("  residual {:.3e}, orthogonality defect {:.3e}\n", r.residual.max_residual,
                           r.path->max_orthogonality_defect());
  if (sc.outputs.frames && wants(c, "csv")) emit(c, "frames.csv", frames_csv(*r.path));
  if (r.curve && sc.outputs.curve) {
    if (wants(c, "csv")) emit(c, "curve.csv", curve_csv(*r.curve));
    if (wants(c, "obj")) emit(c, "curve.obj", curve_obj(*r.curve, sc.name));
  }
  if (sc.outputs.summary && wants(c, "json")) emit(c, "summary.json", summary_json(sc, r));
  return kOk;
}

int cmd_oracle(const Common& c, double eps) {
  const Scenario sc = load(c);
  const OracleResult r = run_oracle(sc, eps);
  std::cout << fmt::format("{}: mollified with eps = {} on {} nodes, TC {:.12f}, TAT {:.12f}\n", sc.name, eps,
                           r.path->size(), r.tc, r.tat);
  if (wants(c, "csv")) {
    emit(c, "oracle_frames.csv", frames_csv(*r.path));
    if (r.curve) emit(c, "oracle_curve.csv", curve_csv(*r.curve));
  }
  if (r.curve && wants(c, "obj")) emit(c, "oracle_curve.obj", curve_obj(*r.curve, sc.name + "-oracle"));
  if (wants(c, "json")) emit(c, "oracle.json", oracle_json(sc, r));
  return kOk;
}

int cmd_convergence(const Common& c) {
  const Scenario sc = load(c);
  const auto rows = run_convergence(sc);
  std::cout << fmt::format("{:>11} {:>10} {:>14} {:>14} {:>14} {:>14}\n", "study", "parameter", "frechet", "tc",
                           "tat", "discarded");
  for (const auto& r : rows)
    std::cout << fmt::format("{:>11} {:>10.4g} {:>14.6e} {:>14.9f} {:>14.9f} {:>14.6e}\n", r.study, r.parameter,
                             r.frechet, r.tc, r.tat, r.discarded_mass);
  emit(c, "convergence.csv", convergence_csv(rows));
  return kOk;
}

int cmd_validate(const Common& c) {
  const Scenario sc = load(c);
  const ValidationResult r = run_validate(sc);
  std::cout << fmt::format("{}: {} jump(s) checked, {} violation(s)\n", sc.name, r.jumps.jumps_checked,
                           r.jumps.violations.size());
  for (const auto& v : r.jumps.violations)
    std::cout << fmt::format("  s = {}: d = {}, tau = {}: {}\n", v.at, v.d, v.tau, v.reason);
  if (r.residual) std::cout << fmt::format("  residual {:.3e} at s = {}\n", r.residual->max_residual, r.residual->at);
  if (wants(c, "json")) emit(c, "validation.json", validation_json(sc, r));
  return r.jumps.ok() ? kOk : kValidation;
}

int cmd_export(const Common& c, const std::string& from) {
  const FramePath path = parse_frames_csv(read_file((fs::path(from) / "frames.csv").string()));
  const Curve curve = integrate_tangent(path, true);
  const std::string fmt_name = c.format.empty() ? "obj" : c.format;
  if (fmt_name == "obj") emit(c, "curve.obj", curve_obj(curve, fs::path(from).filename().string()));
  else if (fmt_name == "csv") emit(c, "curve.csv", curve_csv(curve));
  else {
    emit(c, "frames.json", [&] {
      std::string out = "{\"frames\": [\n";
      for (std::size_t i = 0; i < path.size(); ++i) {
        const Matrix& g = path.frames()[i].matrix();
        out += fmt::format("  {{\"s\": {}, \"jump\": {}, \"g\": [{}, {}, {}, {}, {}, {}, {}, {}, {}]}}{}\n",
                           path.s()[i], static_cast<int>(path.kinds()[i]), g(0, 0), g(0, 1), g(0, 2), g(1, 0),
                           g(1, 1), g(1, 2), g(2, 0), g(2, 1), g(2, 2), i + 1 < path.size() ? "," : "");
      }
      return out + "]}\n";
    }());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frame and curve reconstruction from curvature and torsion data of bounded variation"};
  app.require_subcommand(1);
  Common common;

  auto* solve = app.add_subcommand("solve", "solve the frame system and write frames, curve and summary");
  add_common(solve, common);

  double eps = 0.0;
  auto* oracle = app.add_subcommand("oracle", "solve the mollified problem for one eps");
  oracle->add_option("EPS", eps, "mollification radius")->required()->check(CLI::PositiveNumber);
  add_common(oracle, common);

  auto* convergence = app.add_subcommand("convergence", "eps ladder and truncation ladder table");
  add_common(convergence, common);

  auto* validate = app.add_subcommand("validate", "check the jumps and the integral-equation residual");
  add_common(validate, common);

  std::string from;
  auto* exp = app.add_subcommand("export", "re-emit a stored frames.csv as a curve or JSON");
  exp->add_option("--from", from, "directory containing frames.csv")->required()->check(CLI::ExistingDirectory);
  exp->add_option("--out", common.out, "output directory");
  exp->add_option("--format", common.format, "obj (default), csv or json")->check(CLI::IsMember({"csv", "json", "obj"}));

  auto* list = app.add_subcommand("list", "list the built-in scenarios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*solve) return cmd_solve(common);
    if (*oracle) return cmd_oracle(common, eps);
    if (*convergence) return cmd_convergence(common);
    if (*validate) return cmd_validate(common);
    if (*exp) return cmd_export(common, from);
    if (*list) {
      for (const auto& n : builtin_names()) std::cout << n << "\n";
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ValidationError& e) {
    std::cerr << "invalid jump data: " << e.what() << "\n";
    return kValidation;
  } catch (const DomainError& e) {
    std::cerr << "invalid data: " << e.what() << "\n";
    return kValidation;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  }
  return kOk;
}
