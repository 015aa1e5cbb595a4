#include "frenetbv/curvegeom.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "frenetbv/error.hpp"

namespace frenetbv {

namespace {

double vector_angle(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  return std::atan2(a.cross(b).norm(), a.dot(b));
}

}  // namespace

Eigen::Vector3d Curve::point_at(double value) const {
  if (s.empty()) throw DomainError("Curve: empty curve");
  if (value <= s.front()) return points.front();
  if (value >= s.back()) return points.back();
  const auto it = std::upper_bound(s.begin(), s.end(), value);
  const auto hi = static_cast<std::size_t>(it - s.begin());
  const std::size_t lo = hi - 1;
  const double w = (value - s[lo]) / (s[hi] - s[lo]);
  return (1.0 - w) * points[lo] + w * points[hi];
}

Curve integrate_tangent(std::shared_ptr<const FramePath> path, bool theta_increasing) {
  if (!path) throw DomainError("integrate_tangent: null frame path");
  if (!theta_increasing) {
    throw DomainError(
        "integrate_tangent: theta is not strictly increasing, so the curve is not determined by the "
        "data (the frame path is still valid)");
  }
  Curve curve;
  const auto& s = path->s();
  curve.s = s;
  curve.points.reserve(s.size());
  Eigen::Vector3d p = Eigen::Vector3d::Zero();
  Eigen::Vector3d t_prev = path->tangent(0);
  curve.points.push_back(p);
  for (std::size_t i = 1; i < s.size(); ++i) {
    const Eigen::Vector3d t = path->tangent(i);
    p += 0.5 * (s[i] - s[i - 1]) * (t_prev + t);
    curve.points.push_back(p);
    t_prev = t;
  }
  curve.frames = std::move(path);
  return curve;
}

Curve integrate_tangent(const FramePath& path, bool theta_increasing) {
  return integrate_tangent(std::make_shared<const FramePath>(path), theta_increasing);
}

Curve rigid_transform(const Curve& curve, const Eigen::Matrix3d& q, const Eigen::Vector3d& shift) {
  Curve out;
  out.s = curve.s;
  out.points.reserve(curve.points.size());
  for (const auto& p : curve.points) out.points.push_back(q * p + shift);
  return out;
}

JumpAngles jump_angles(double d, double tau) {
  const double beta = std::hypot(d, tau);
  if (!(beta > 0.0 && beta < M_PI)) {
    throw DomainError("jump_angles: sqrt(d^2 + tau^2) = " + std::to_string(beta) + " is not in (0, pi)");
  }
  // 1 - cos(angle) = 2 (d / beta)^2 sin^2(beta / 2) for t, likewise with tau for b;
  // the half-angle form keeps full precision for small angles.
  const double half = std::sin(0.5 * beta) / beta;
  JumpAngles out;
  out.t = 2.0 * std::asin(std::min(1.0, std::abs(d) * half));
  out.n = beta;
  out.b = 2.0 * std::asin(std::min(1.0, std::abs(tau) * half));
  if (d * d + tau * tau * std::cos(beta) < 0.0) out.b_projective = M_PI - out.b;
  return out;
}

GeomSummary invariants_exact(const FramePath& path, const SkewPath& omega) {
  if (path.dim() != omega.dim()) throw DomainError("invariants_exact: dimension mismatch");
  const auto atoms = omega.jumps();
  const auto& records = path.jumps();
  if (atoms.size() != records.size()) {
    throw DomainError("invariants_exact: the path has " + std::to_string(records.size()) +
                      " jump records but the datum has " + std::to_string(atoms.size()) + " atoms");
  }
  GeomSummary out;
  out.length = omega.length();
  out.diffuse_tc_mass = omega.theta().ac_variation();
  out.diffuse_tat_mass = omega.dim() == 3 ? omega.phi().ac_variation() : 0.0;
  double atom_mass = 0.0;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    const auto& a = atoms[k];
    const auto& r = records[k];
    if (std::abs(a.at - r.at) > 1e-12 || std::abs(a.d - r.d) > 1e-12 || std::abs(a.tau - r.tau) > 1e-12) {
      throw DomainError("invariants_exact: jump record at s = " + std::to_string(r.at) +
                        " does not match the datum");
    }
    const JumpAngles ang = jump_angles(a.d, a.tau);
    out.jump_tc_sum += ang.t;
    out.jump_tat_sum += ang.b;
    out.projective_jump_tat_sum += ang.b_projective.value_or(ang.b);
    atom_mass += a.mass();
  }
  out.tc_exact = out.diffuse_tc_mass + out.jump_tc_sum;
  out.tat_exact = out.diffuse_tat_mass + out.jump_tat_sum;
  out.tc_bound = out.diffuse_tc_mass + atom_mass / std::sqrt(2.0);
  out.tat_bound = out.diffuse_tat_mass + atom_mass / std::sqrt(2.0);
  out.bounds_hold = out.tc_exact <= out.tc_bound && out.tat_exact <= out.tat_bound;
  return out;
}

void attach_polygonal(GeomSummary& summary, const PolygonalCurve& polygon) {
  summary.tc_polygonal = polygon.total_turning();
  summary.tat_polygonal = polygon.total_torsion();
  summary.polygonal_length = polygon.length();
  summary.polygon_segments = static_cast<int>(polygon.vertices.size()) - 1;
}

TantrixVariation tantrix_variation(const FramePath& path) {
  TantrixVariation out;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const Eigen::Vector3d a = path.tangent(i - 1), b = path.tangent(i);
    const double angle = vector_angle(a, b);
    out.spherical += angle;
    out.euclidean += path.kinds()[i] == NodeKind::JumpRight ? (b - a).norm() : angle;
  }
  const double slack = 1e-12 * std::max(1.0, out.spherical);
  if (2.0 / M_PI * out.spherical > out.euclidean + slack || out.euclidean > out.spherical + slack) {
    throw NumericalError("tantrix_variation: (2/pi) Var <= |Dt| <= Var violated");
  }
  return out;
}

}  // namespace frenetbv
