#include "frenetbv/run.hpp"

#include "frenetbv/error.hpp"

namespace frenetbv {

namespace {

bool theta_increasing(const SkewPath& omega) { return omega.theta().strictly_increasing(); }

std::shared_ptr<const FramePath> solve_finite(const Scenario& sc, std::string& solver) {
  const SkewPath& omega = sc.datum();
  const RotationMatrix g0 = sc.initial_frame();
  if (omega.dim() == 2 && theta_increasing(omega)) {
    solver = "solve_2d";
    return std::make_shared<const FramePath>(solve_2d(omega.theta(), g0, sc.solver));
  }
  if (!omega.has_jumps()) {
    solver = "solve_continuous";
    return std::make_shared<const FramePath>(solve_continuous(omega, g0, sc.solver));
  }
  solver = "solve_bv";
  return std::make_shared<const FramePath>(solve_bv(omega, g0, sc.solver));
}

}  // namespace

SolveResult run_solve(const Scenario& sc) {
  SolveResult out;
  out.jump_report = validate_jumps(sc.datum());
  if (sc.has_tail()) {
    out.solver = "solve_bv_general";
    auto study = solve_bv_general(sc.countable(), sc.initial_frame(), sc.solver, sc.truncation_levels);
    const auto& last = study.levels.back();
    out.path = last.path;
    out.curve = last.curve;
    out.solved_datum = sc.countable().truncate_by_mass(1.0 / sc.truncation_levels).path;
    out.truncation = std::move(study);
  } else {
    out.path = solve_finite(sc, out.solver);
    out.solved_datum = sc.datum();
    if (theta_increasing(sc.datum())) out.curve = integrate_tangent(out.path, true);
  }
  const SkewPath& datum = *out.solved_datum;
  out.summary = invariants_exact(*out.path, datum);
  out.residual = residual_check(*out.path, datum);
  out.tantrix = tantrix_variation(*out.path);
  if (out.curve) {
    out.polygon = inscribe(*out.curve, sc.polygon_segments);
    attach_polygonal(out.summary, *out.polygon);
  }
  return out;
}

OracleResult run_oracle(const Scenario& sc, double eps) {
  if (sc.has_tail()) throw DomainError("oracle: scenarios with a jump tail are not supported");
  OracleResult out;
  out.eps = eps;
  const SkewPath& omega = sc.datum();
  out.path = std::make_shared<const FramePath>(solve_mollified_oracle(omega, eps, sc.initial_frame(), sc.solver));
  const SkewPath smooth = omega.mollified(eps, sc.solver.mollifier);
  if (theta_increasing(omega)) out.curve = integrate_tangent(out.path, true);
  out.tc = smooth.theta().ac_variation();
  out.tat = smooth.dim() == 3 ? smooth.phi().ac_variation() : 0.0;
  out.residual = residual_check(*out.path, smooth);
  return out;
}

std::vector<ConvergenceRow> run_convergence(const Scenario& sc) {
  std::vector<ConvergenceRow> rows;
  if (!sc.has_tail()) {
    const SolveResult exact = run_solve(sc);
    if (!exact.curve) throw DomainError("convergence: theta must be strictly increasing");
    for (double eps : sc.solver.eps_ladder) {
      const OracleResult o = run_oracle(sc, eps);
      rows.push_back({"eps", eps, discrete_frechet(*o.curve, *exact.curve), o.tc, o.tat, 0.0});
    }
    return rows;
  }
  const auto study = solve_bv_general(sc.countable(), sc.initial_frame(), sc.solver, sc.truncation_levels);
  for (const auto& level : study.levels) {
    const auto cut = sc.countable().truncate_by_mass(1.0 / level.level);
    const GeomSummary g = invariants_exact(*level.path, cut.path);
    rows.push_back({"truncation", static_cast<double>(level.level), level.frechet_to_previous.value_or(0.0),
                    g.tc_exact, g.tat_exact, level.discarded_mass});
  }
  return rows;
}

ValidationResult run_validate(const Scenario& sc) {
  ValidationResult out;
  out.jumps = validate_jumps(sc.datum());
  if (sc.has_tail()) {
    const auto cut = sc.countable().truncate_by_mass(1.0 / sc.truncation_levels);
    const auto report = validate_jumps(cut.path);
    out.jumps.jumps_checked += report.jumps_checked;
    for (const auto& v : report.violations) out.jumps.violations.push_back(v);
    if (out.jumps.ok()) out.residual = residual_check(solve_bv(cut.path, sc.initial_frame(), sc.solver), cut.path);
    return out;
  }
  if (out.jumps.ok()) {
    std::string solver;
    out.residual = residual_check(*solve_finite(sc, solver), sc.datum());
  }
  return out;
}

}  // namespace frenetbv
