#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "frenetbv/curvegeom.hpp"
#include "frenetbv/error.hpp"

namespace frenetbv {

namespace {

// Diameter of the samples of `curve` with s in [a, b], endpoints included.
double arc_diameter(const Curve& curve, double a, double b) {
  std::vector<Eigen::Vector3d> pts{curve.point_at(a), curve.point_at(b)};
  const auto lo = std::upper_bound(curve.s.begin(), curve.s.end(), a);
  const auto hi = std::lower_bound(curve.s.begin(), curve.s.end(), b);
  for (auto it = lo; it < hi; ++it) pts.push_back(curve.points[static_cast<std::size_t>(it - curve.s.begin())]);
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, (pts[i] - pts[j]).squaredNorm());
  return std::sqrt(best);
}

}  // namespace

double PolygonalCurve::length() const {
  double len = 0.0;
  for (std::size_t i = 1; i < vertices.size(); ++i) len += (vertices[i] - vertices[i - 1]).norm();
  return len;
}

double PolygonalCurve::total_turning() const {
  return std::accumulate(turning_angles.begin(), turning_angles.end(), 0.0);
}

double PolygonalCurve::total_torsion() const {
  return std::accumulate(torsion_angles.begin(), torsion_angles.end(), 0.0);
}

PolygonalCurve inscribe(const Curve& curve, int k) {
  if (k < 3) throw DomainError("inscribe: k must be >= 3");
  if (curve.s.size() < 2) throw DomainError("inscribe: curve has fewer than two samples");
  PolygonalCurve poly;
  const double s0 = curve.s.front(), len = curve.length();
  std::vector<double> cuts;
  for (int i = 0; i <= k; ++i) {
    cuts.push_back(s0 + len * i / k);
    poly.vertices.push_back(curve.point_at(cuts.back()));
  }

  std::vector<Eigen::Vector3d> chords;
  for (int i = 0; i < k; ++i) {
    chords.push_back(poly.vertices[static_cast<std::size_t>(i) + 1] - poly.vertices[static_cast<std::size_t>(i)]);
    if (!(chords.back().norm() > 0.0)) {
      throw DomainError("inscribe: degenerate chord " + std::to_string(i));
    }
  }
  for (std::size_t i = 1; i < chords.size(); ++i) {
    const auto& a = chords[i - 1];
    const auto& b = chords[i];
    poly.turning_angles.push_back(std::atan2(a.cross(b).norm(), a.dot(b)));
  }
  // Osculating plane normals at the interior vertices; the angle between two
  // planes is taken as the angle between lines, hence in [0, pi/2].
  std::vector<std::optional<Eigen::Vector3d>> normals;
  for (std::size_t i = 1; i < chords.size(); ++i) {
    const Eigen::Vector3d n = chords[i - 1].cross(chords[i]);
    if (n.norm() < kAlignedChordTolerance * chords[i - 1].norm() * chords[i].norm()) normals.emplace_back();
    else normals.emplace_back(n);
  }
  for (std::size_t i = 1; i < normals.size(); ++i) {
    if (!normals[i - 1] || !normals[i]) {
      ++poly.skipped_torsion;
      continue;
    }
    const auto& a = *normals[i - 1];
    const auto& b = *normals[i];
    poly.torsion_angles.push_back(std::atan2(a.cross(b).norm(), std::abs(a.dot(b))));
  }
  for (int i = 0; i < k; ++i) {
    poly.modulus = std::max(poly.modulus, arc_diameter(curve, cuts[static_cast<std::size_t>(i)],
                                                       cuts[static_cast<std::size_t>(i) + 1]));
  }
  return poly;
}

}  // namespace frenetbv
