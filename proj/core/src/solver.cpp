#include "frenetbv/solver.hpp"

#include <algorithm>
#include <string>

#include <Eigen/LU>

#include "frenetbv/error.hpp"

namespace frenetbv {

namespace {

Matrix planar_rotation(double angle) {
  Matrix r(2, 2);
  r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return r;
}

// G exp(-(Omega(b) - Omega(a))) with the step split so that each increment
// stays below cfg.max_increment.
Matrix advance(const Matrix& g, const SkewPath& omega, double a, double b, double max_increment) {
  const Matrix oa = omega.continuous_value(a);
  const Matrix ob = omega.continuous_value(b);
  const double size = (ob - oa).norm();
  const int pieces = std::max(1, static_cast<int>(std::ceil(size / max_increment)));
  if (pieces == 1) return g * exp_skew(SkewMatrix(oa - ob)).matrix();
  Matrix out = g;
  Matrix prev = oa;
  for (int j = 1; j <= pieces; ++j) {
    const Matrix next = j == pieces ? ob : omega.continuous_value(a + (b - a) * j / pieces);
    out = out * exp_skew(SkewMatrix(prev - next)).matrix();
    prev = next;
  }
  return out;
}

JumpStep planar_jump(const RotationMatrix& left, double at, double d, double cap) {
  if (!(std::abs(d) > 0.0 && std::abs(d) < cap)) {
    throw ValidationError("jump at s = " + std::to_string(at) + ": |d| = " + std::to_string(std::abs(d)) +
                          " is not in (0, pi)");
  }
  RotationMatrix a(planar_rotation(d));
  RotationMatrix right = left * a;
  JumpRecord rec{at, left, right, a, std::nullopt, std::abs(d), d, 0.0};
  return {std::move(right), std::move(rec)};
}

void require_initial(const SkewPath& omega, const RotationMatrix& initial) {
  if (initial.dim() != omega.dim()) {
    throw DomainError("initial frame has dimension " + std::to_string(initial.dim()) +
                      " but the datum has dimension " + std::to_string(omega.dim()));
  }
}

void check_orthogonality(const FramePath& path, const SolverConfig& cfg) {
  const double defect = path.max_orthogonality_defect();
  if (!(defect <= cfg.orthogonality_tol)) {
    throw NumericalError("frame left SO(n): orthogonality defect " + std::to_string(defect));
  }
}

// Shared stepping routine for every solver on a fixed datum.
FramePath march(const SkewPath& omega, const RotationMatrix& initial, const SolverConfig& cfg,
                int intervals) {
  const auto atoms = omega.jumps();
  std::vector<double> locations;
  for (const auto& a : atoms) locations.push_back(a.at);
  const auto grid = build_grid(omega.length(), intervals, omega.knots(), locations);

  FramePath path(omega.dim(), initial);
  Matrix g = initial.matrix();
  std::size_t next_jump = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const bool right_of_jump = i > 0 && grid[i] == grid[i - 1];
    if (right_of_jump) {
      const JumpAtom& atom = atoms.at(next_jump++);
      const RotationMatrix left(g);
      JumpStep step = omega.dim() == 3 ? jump_step(left, atom.at, atom.d, atom.tau, cfg.jump_angle_cap)
                                       : planar_jump(left, atom.at, atom.d, cfg.jump_angle_cap);
      g = step.right.matrix();
      path.push(grid[i], std::move(step.right), NodeKind::JumpRight);
      path.push_jump(std::move(step.record));
      continue;
    }
    if (i > 0) g = advance(g, omega, grid[i - 1], grid[i], cfg.max_increment);
    const bool left_of_jump = i + 1 < grid.size() && grid[i + 1] == grid[i];
    path.push(grid[i], RotationMatrix(g), left_of_jump ? NodeKind::JumpLeft : NodeKind::Regular);
  }
  check_orthogonality(path, cfg);
  return path;
}

}  // namespace

void SolverConfig::validate() const {
  if (grid < 1) throw DomainError("SolverConfig: grid must be >= 1");
  if (!(max_increment > 0.0)) throw DomainError("SolverConfig: max_increment must be positive");
  if (!(orthogonality_tol > 0.0)) throw DomainError("SolverConfig: orthogonality_tol must be positive");
  if (!(jump_angle_cap > 0.0 && jump_angle_cap <= M_PI))
    throw DomainError("SolverConfig: jump_angle_cap must lie in (0, pi]");
  if (oracle_substeps < 1) throw DomainError("SolverConfig: oracle_substeps must be >= 1");
  for (std::size_t i = 0; i < eps_ladder.size(); ++i) {
    if (!(eps_ladder[i] > 0.0)) throw DomainError("SolverConfig: eps values must be positive");
    if (i > 0 && !(eps_ladder[i] < eps_ladder[i - 1]))
      throw DomainError("SolverConfig: eps ladder must be strictly decreasing");
  }
}

std::vector<double> build_grid(double length, int intervals, const std::vector<double>& knots,
                               const std::vector<double>& jump_locations) {
  if (!(length > 0.0)) throw DomainError("build_grid: length must be positive");
  if (intervals < 1) throw DomainError("build_grid: intervals must be >= 1");
  std::vector<double> fixed = knots;
  fixed.push_back(0.0);
  fixed.push_back(length);
  std::sort(fixed.begin(), fixed.end());
  fixed.erase(std::unique(fixed.begin(), fixed.end()), fixed.end());

  const double tol = 1e-12 * length;
  std::vector<double> grid = fixed;
  for (int i = 0; i <= intervals; ++i) {
    const double s = length * i / intervals;
    const auto it = std::lower_bound(fixed.begin(), fixed.end(), s - tol);
    if (it != fixed.end() && *it <= s + tol) continue;
    grid.push_back(s);
  }
  for (double at : jump_locations) grid.push_back(at);
  std::sort(grid.begin(), grid.end());
  return grid;
}

FramePath solve_continuous(const SkewPath& omega, const RotationMatrix& initial, const SolverConfig& cfg) {
  cfg.validate();
  require_initial(omega, initial);
  if (omega.has_jumps()) throw DomainError("solve_continuous: the datum has jumps; use solve_bv");
  return march(omega, initial, cfg, cfg.grid);
}

JumpStep jump_step(const RotationMatrix& left, double at, double d, double tau, double cap) {
  if (left.dim() != 3) throw DomainError("jump_step: requires a 3x3 frame");
  const double beta = std::hypot(d, tau);
  if (!(beta > 0.0 && beta < cap)) {
    throw ValidationError("jump at s = " + std::to_string(at) + ": sqrt(d^2 + tau^2) = " +
                          std::to_string(beta) + " is not in (0, pi)");
  }
  const Vector3 v(tau / beta, 0.0, d / beta);
  RotationMatrix a = rodrigues_exp(AxisAngle(v, beta));
  RotationMatrix right = left * a;
  const Vector3 axis = (left.matrix() * v).normalized();
  JumpRecord rec{at, left, right, std::move(a), AxisAngle(axis, beta), beta, d, tau};
  return {std::move(right), std::move(rec)};
}

FramePath solve_bv(const SkewPath& omega, const RotationMatrix& initial, const SolverConfig& cfg) {
  cfg.validate();
  require_initial(omega, initial);
  if (omega.dim() != 2 && omega.dim() != 3)
    throw DomainError("solve_bv: jumps are only defined in dimension 2 or 3");
  const auto report = validate_jumps(omega);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw ValidationError("jump at s = " + std::to_string(v.at) + ": " + v.reason);
  }
  return march(omega, initial, cfg, cfg.grid);
}

FramePath solve_2d(const BVScalar& theta, const RotationMatrix& initial, const SolverConfig& cfg) {
  cfg.validate();
  if (initial.dim() != 2) throw DomainError("solve_2d: initial frame must be 2x2");
  if (!theta.strictly_increasing()) throw DomainError("solve_2d: theta must be strictly increasing");
  std::vector<double> locations;
  for (const auto& j : theta.jumps()) {
    if (!(j.value > 0.0 && j.value < cfg.jump_angle_cap))
      throw ValidationError("jump at s = " + std::to_string(j.at) + ": d = " + std::to_string(j.value) +
                            " is not in (0, pi)");
    locations.push_back(j.at);
  }
  const auto grid = build_grid(theta.length(), cfg.grid, theta.knots(), locations);
  const double theta0 = theta.one_sided_limits(0.0).right;
  const Matrix& g0 = initial.matrix();

  FramePath path(2, initial);
  std::size_t next_jump = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto lim = theta.one_sided_limits(grid[i]);
    if (i > 0 && grid[i] == grid[i - 1]) {
      const Jump& j = theta.jumps().at(next_jump++);
      RotationMatrix right(g0 * planar_rotation(lim.right - theta0));
      const RotationMatrix& left = path.frames().back();
      JumpRecord rec{j.at, left, right, RotationMatrix(planar_rotation(j.value)), std::nullopt,
                     j.value, j.value, 0.0};
      path.push(grid[i], std::move(right), NodeKind::JumpRight);
      path.push_jump(std::move(rec));
      continue;
    }
    const bool left_of_jump = i + 1 < grid.size() && grid[i + 1] == grid[i];
    path.push(grid[i], RotationMatrix(g0 * planar_rotation(lim.left - theta0)),
              left_of_jump ? NodeKind::JumpLeft : NodeKind::Regular);
  }
  check_orthogonality(path, cfg);
  return path;
}

FramePath solve_mollified_oracle(const SkewPath& omega, double eps, const RotationMatrix& initial,
                                 const SolverConfig& cfg) {
  cfg.validate();
  require_initial(omega, initial);
  const SkewPath smooth = omega.mollified(eps, cfg.mollifier);
  return march(smooth, initial, cfg, cfg.grid * cfg.oracle_substeps);
}

namespace {

Matrix geodesic_midpoint(const Matrix& a, const Matrix& b) {
  const Matrix rel = a.transpose() * b;
  if (a.rows() == 2) return a * planar_rotation(0.5 * std::atan2(rel(1, 0), rel(0, 0)));
  if (a.rows() == 3) {
    const AxisAngle aa = log_rotation(RotationMatrix(rel));
    return a * rodrigues_exp(AxisAngle(aa.axis, 0.5 * aa.angle)).matrix();
  }
  return 0.5 * (a + b);
}

}  // namespace

ResidualReport residual_check(const FramePath& path, const SkewPath& omega) {
  ResidualReport report;
  const int n = path.dim();
  if (omega.dim() != n) throw DomainError("residual_check: dimension mismatch");
  const Matrix g0 = path.initial().matrix();
  const auto atoms = omega.jumps();
  Matrix acc = Matrix::Zero(n, n);
  const auto& s = path.s();
  const auto& frames = path.frames();
  std::size_t next_jump = 0;

  for (std::size_t i = 0; i < path.size(); ++i) {
    const bool at_jump = path.kinds()[i] == NodeKind::JumpRight;
    if (at_jump) {
      const JumpRecord& rec = path.jumps().at(next_jump);
      const JumpAtom& atom = atoms.at(next_jump);
      ++next_jump;
      if (std::abs(atom.at - rec.at) > 1e-12) throw DomainError("residual_check: jump records do not match the datum");
      // [Omega] has theta's jump at (0, 1) and phi's at (1, 2).
      Matrix jump = Matrix::Zero(n, n);
      jump(0, 1) = atom.d;
      jump(1, 0) = -atom.d;
      if (n == 3) {
        jump(1, 2) = atom.tau;
        jump(2, 1) = -atom.tau;
      }
      const double beta = atom.magnitude();
      const Matrix measure = (std::sin(beta) / beta) * jump;
      const Matrix precise_t = rec.precise().transpose();
      acc += precise_t.partialPivLu().solve(measure);
    } else if (i > 0) {
      const Matrix delta = omega.continuous_value(s[i]) - omega.continuous_value(s[i - 1]);
      acc += geodesic_midpoint(frames[i - 1].matrix(), frames[i].matrix()) * delta;
    }
    const Matrix r = frames[i].matrix() - g0 + acc;
    const double worst = r.cwiseAbs().maxCoeff();
    if (worst > report.max_residual) {
      report.max_residual = worst;
      report.at = s[i];
    }
    if (at_jump) report.max_jump_residual = std::max(report.max_jump_residual, worst);
  }
  report.nodes = static_cast<int>(path.size());
  return report;
}

}  // namespace frenetbv
