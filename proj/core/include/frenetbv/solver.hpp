#pragma once

// Solvers for DG = -G DOmega, G(0) = Gbar.
//
// Away from jumps every step advances G <- G exp(-(Omega(b) - Omega(a))) on the
// continuous part of Omega. At a jump with increments (d, tau) the frame is
// composed with A = exp(d J_3 + tau J_1), a rotation by sqrt(d^2 + tau^2).
// The solution with initial frame Gbar is Gbar times the solution from I.

#include <cmath>
#include <memory>
#include <optional>
#include <vector>

#include "frenetbv/curvegeom.hpp"
#include "frenetbv/frame_path.hpp"
#include "frenetbv/skewpath.hpp"

namespace frenetbv {

struct SolverConfig {
  int grid = 8192;  // uniform base intervals; knots are added on top
  double max_increment = 1e-2;  // bound on |Delta Omega|_F per step
  std::vector<double> eps_ladder{0.2, 0.1, 0.05, 0.025};
  double orthogonality_tol = 1e-10;
  double jump_angle_cap = M_PI - 1e-9;
  int oracle_substeps = 4;  // oracle grid is grid * oracle_substeps
  MollifierKind mollifier = MollifierKind::Box;

  // Throws DomainError on non-positive fields or an eps ladder that is not
  // strictly decreasing.
  void validate() const;
};

// Uniform base grid of `intervals` merged with the knots; every jump location
// appears twice. Nodes closer than 1e-12 L to a knot are snapped onto it.
std::vector<double> build_grid(double length, int intervals, const std::vector<double>& knots,
                               const std::vector<double>& jump_locations);

// Throws DomainError if omega has jumps or Gbar has the wrong dimension.
FramePath solve_continuous(const SkewPath& omega, const RotationMatrix& initial,
                           const SolverConfig& cfg = {});

struct JumpStep {
  RotationMatrix right;
  JumpRecord record;
};

// Throws ValidationError unless 0 < sqrt(d^2 + tau^2) < cap.
JumpStep jump_step(const RotationMatrix& left, double at, double d, double tau,
                   double cap = M_PI - 1e-9);

// Finitely many jumps, n = 2 or 3. Throws ValidationError when validate_jumps
// fails.
FramePath solve_bv(const SkewPath& omega, const RotationMatrix& initial, const SolverConfig& cfg = {});

// Closed form for planar data: G(s) = Gbar R(theta(s) - theta(0)). Throws
// DomainError unless theta is strictly increasing and ValidationError for a
// jump outside (0, pi).
FramePath solve_2d(const BVScalar& theta, const RotationMatrix& initial, const SolverConfig& cfg = {});

// Mollifies omega with radius eps and integrates the smooth datum on a grid
// refined by cfg.oracle_substeps.
FramePath solve_mollified_oracle(const SkewPath& omega, double eps, const RotationMatrix& initial,
                                 const SolverConfig& cfg = {});

enum class TruncationSchedule {
  Threshold,  // level n keeps atoms with mass > 1/n
  Prefix,     // level n keeps the base jumps and the first n tail terms
};

struct TruncationLevel {
  int level = 0;
  int atoms = 0;
  double discarded_mass = 0.0;
  // Mass of the atoms added relative to the previous level.
  double added_mass = 0.0;
  std::optional<double> frechet_to_previous;
  std::shared_ptr<const FramePath> path;
  Curve curve;
};

struct TruncationStudy {
  std::vector<TruncationLevel> levels;
  double total_jump_mass = 0.0;
};

TruncationStudy solve_bv_general(const CountableSkewPath& omega, const RotationMatrix& initial,
                                 const SolverConfig& cfg, int n_max,
                                 TruncationSchedule schedule = TruncationSchedule::Threshold);

struct ResidualReport {
  double max_residual = 0.0;  // max entry of G(s) - Gbar + int G dDbarOmega + atoms
  double at = 0.0;            // location of the maximum
  double max_jump_residual = 0.0;
  int nodes = 0;
};

// Midpoint quadrature on the grid, with the geodesic midpoint of consecutive
// frames for n = 2, 3 and the chord midpoint otherwise. At a jump the atom
// (sin beta / beta) [Omega] enters through the inverse transpose of the
// precise representative.
ResidualReport residual_check(const FramePath& path, const SkewPath& omega);

}  // namespace frenetbv
