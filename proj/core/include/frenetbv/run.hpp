#pragma once

// End-to-end drivers behind the CLI subcommands: pick the solver a scenario
// calls for, reconstruct the curve and collect every diagnostic.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frenetbv/curvegeom.hpp"
#include "frenetbv/scenario.hpp"
#include "frenetbv/solver.hpp"

namespace frenetbv {

struct SolveResult {
  std::string solver;  // solve_2d, solve_continuous, solve_bv or solve_bv_general
  std::shared_ptr<const FramePath> path;
  std::optional<SkewPath> solved_datum;  // the finite datum actually integrated
  std::optional<Curve> curve;            // absent when theta is not increasing
  GeomSummary summary;
  std::optional<PolygonalCurve> polygon;
  ResidualReport residual;
  TantrixVariation tantrix;
  JumpValidationReport jump_report;
  std::optional<TruncationStudy> truncation;
};

// Throws ValidationError on inadmissible jumps and NumericalError when a
// numerical invariant fails.
SolveResult run_solve(const Scenario& scenario);

struct OracleResult {
  double eps = 0.0;
  std::shared_ptr<const FramePath> path;
  std::optional<Curve> curve;
  double tc = 0.0;   // total curvature of the mollified datum
  double tat = 0.0;  // total absolute torsion of the mollified datum
  ResidualReport residual;
};

OracleResult run_oracle(const Scenario& scenario, double eps);

struct ConvergenceRow {
  std::string study;  // "eps" or "truncation"
  double parameter = 0.0;
  double frechet = 0.0;  // to the jump-exact curve (eps) or previous level (truncation)
  double tc = 0.0;
  double tat = 0.0;
  double discarded_mass = 0.0;
};

// The eps ladder of the scenario against the jump-exact curve, followed by the
// truncation ladder when the scenario has a jump tail.
std::vector<ConvergenceRow> run_convergence(const Scenario& scenario);

struct ValidationResult {
  JumpValidationReport jumps;
  std::optional<ResidualReport> residual;  // only when the jumps are admissible
};

ValidationResult run_validate(const Scenario& scenario);

}  // namespace frenetbv
