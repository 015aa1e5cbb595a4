#pragma once

// Curve reconstruction from a frame path and the geometric invariants of the
// result: total curvature (TC) and total absolute torsion (TAT), computed from
// the data and from inscribed polygons.

#include <memory>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "frenetbv/frame_path.hpp"
#include "frenetbv/skewpath.hpp"

namespace frenetbv {

struct Curve {
  std::vector<double> s;
  std::vector<Eigen::Vector3d> points;
  std::shared_ptr<const FramePath> frames;  // may be null

  double length() const { return s.empty() ? 0.0 : s.back() - s.front(); }
  // Linear interpolation between samples; the right sample wins at duplicates.
  Eigen::Vector3d point_at(double value) const;
};

// gamma(0) = 0 and gamma' = t, integrated by the trapezoid rule. The two nodes
// of a jump share one point. Throws DomainError when theta_increasing is false,
// since the curve is then not determined by the data.
Curve integrate_tangent(const FramePath& path, bool theta_increasing);
Curve integrate_tangent(std::shared_ptr<const FramePath> path, bool theta_increasing);

// Q gamma + shift, frames dropped.
Curve rigid_transform(const Curve& curve, const Eigen::Matrix3d& q, const Eigen::Vector3d& shift);

struct JumpAngles {
  double t = 0.0;  // angle between t(s-) and t(s+)
  double n = 0.0;  // angle between n(s-) and n(s+)
  double b = 0.0;  // angle between b(s-) and b(s+)
  // pi - b when d^2 + tau^2 cos(sqrt(d^2 + tau^2)) < 0: the distance of b(s-)
  // and b(s+) as lines rather than as oriented vectors.
  std::optional<double> b_projective;
};

// Throws DomainError unless 0 < sqrt(d^2 + tau^2) < pi.
JumpAngles jump_angles(double d, double tau);

struct GeomSummary {
  double length = 0.0;
  double diffuse_tc_mass = 0.0;   // |D theta| without the jumps
  double diffuse_tat_mass = 0.0;  // |D phi| without the jumps
  double jump_tc_sum = 0.0;
  double jump_tat_sum = 0.0;
  double tc_exact = 0.0;
  double tat_exact = 0.0;
  // Upper bounds diffuse + |D^J Omega| / sqrt(2) and whether they hold.
  double tc_bound = 0.0;
  double tat_bound = 0.0;
  bool bounds_hold = true;
  double projective_jump_tat_sum = 0.0;
  std::optional<double> tc_polygonal;
  std::optional<double> tat_polygonal;
  std::optional<double> polygonal_length;
  std::optional<int> polygon_segments;
};

// Throws DomainError when the jump records of the path do not match the atoms
// of omega (location, d and tau to 1e-12).
GeomSummary invariants_exact(const FramePath& path, const SkewPath& omega);

struct PolygonalCurve {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<double> turning_angles;  // interior vertices, in [0, pi]
  std::vector<double> torsion_angles;  // in [0, pi/2]
  double modulus = 0.0;                // max diameter of the cut-off arcs
  int skipped_torsion = 0;             // near-aligned chords

  double length() const;
  double total_turning() const;  // K(p)
  double total_torsion() const;  // sum of psi
};

inline constexpr double kAlignedChordTolerance = 1e-10;

// Vertices gamma(n L / k), n = 0..k. Throws DomainError when k < 3 or a chord
// has zero length.
PolygonalCurve inscribe(const Curve& curve, int k);

// Fills the polygonal fields of the summary.
void attach_polygonal(GeomSummary& summary, const PolygonalCurve& polygon);

struct TantrixVariation {
  double spherical = 0.0;  // Var_{S^2}(t): geodesic lengths
  double euclidean = 0.0;  // |Dt|(I): jumps counted by chord length
};

// Throws NumericalError if (2/pi) Var > |Dt| or |Dt| > Var beyond rounding.
TantrixVariation tantrix_variation(const FramePath& path);

// Discrete Frechet distance of the sample sequences. Throws DomainError on an
// empty curve.
double discrete_frechet(const Curve& a, const Curve& b);

}  // namespace frenetbv
