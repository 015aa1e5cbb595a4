#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "frenetbv/curvegeom.hpp"
#include "frenetbv/error.hpp"
#include "frenetbv/solver.hpp"
#include "oracles.hpp"

using namespace frenetbv;

namespace {

SkewPath helix_datum(double k, double tau, double len) {
  return SkewPath::frenet(BVScalar::affine(len, 0.0, k), BVScalar::affine(len, 0.0, tau));
}

Curve polyline(const std::vector<Eigen::Vector3d>& pts) {
  Curve c;
  for (std::size_t i = 0; i < pts.size(); ++i) c.s.push_back(static_cast<double>(i));
  c.points = pts;
  return c;
}

}  // namespace

TEST(JumpAngles, MatchArccosOfFrameColumns) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  int checked = 0;
  while (checked < 300) {
    const double d = std::abs(u(rng)), tau = u(rng);
    if (std::hypot(d, tau) >= 3.1) continue;
    const auto got = jump_angles(d, tau);
    const auto ref = oracle::jump_angles_arccos(d, tau);
    EXPECT_NEAR(got.t, ref.t, 1e-7);
    EXPECT_NEAR(got.n, ref.n, 1e-7);
    EXPECT_NEAR(got.b, ref.b, 1e-7);
    ++checked;
  }
}

TEST(JumpAngles, AxisCasesCollapse) {
  for (double x : {0.1, 1.0, 2.5, 3.1}) {
    const auto corner = jump_angles(x, 0.0);
    EXPECT_NEAR(corner.t, x, 1e-12);
    EXPECT_NEAR(corner.n, x, 1e-12);
    EXPECT_NEAR(corner.b, 0.0, 1e-12);
    const auto twist = jump_angles(0.0, -x);
    EXPECT_NEAR(twist.t, 0.0, 1e-12);
    EXPECT_NEAR(twist.n, x, 1e-12);
    EXPECT_NEAR(twist.b, x, 1e-12);
  }
}

TEST(JumpAngles, ProjectiveValueOnlyWhenBinormalsFlip) {
  // d^2 + tau^2 cos(beta) < 0 needs a large torsion jump and cos(beta) < 0.
  const auto flip = jump_angles(0.2, 2.8);
  ASSERT_TRUE(flip.b_projective.has_value());
  EXPECT_NEAR(*flip.b_projective, M_PI - flip.b, 1e-15);
  EXPECT_GT(flip.b, 0.5 * M_PI);
  EXPECT_FALSE(jump_angles(1.0, 1.0).b_projective.has_value());
}

TEST(JumpAngles, OutOfRangeThrows) {
  EXPECT_THROW(jump_angles(0.0, 0.0), DomainError);
  EXPECT_THROW(jump_angles(M_PI, 0.0), DomainError);
}

TEST(IntegrateTangent, UnitCircle) {
  const SkewPath circle = SkewPath::planar(BVScalar::affine(2.0 * M_PI, 0.0, 1.0));
  const auto path = std::make_shared<const FramePath>(solve_2d(circle.theta(), RotationMatrix::identity(2)));
  const Curve c = integrate_tangent(path, true);
  EXPECT_NEAR(c.points.back().norm(), 0.0, 1e-6);
  double worst = 0.0;
  for (const auto& p : c.points) worst = std::max(worst, std::abs((p - Eigen::Vector3d(0, 1, 0)).norm() - 1.0));
  EXPECT_LT(worst, 1e-6);
  EXPECT_THROW(integrate_tangent(path, false), DomainError);
}

TEST(IntegrateTangent, HelixRadiusAndPitch) {
  const double k = 1.0, tau = 0.5, len = 4.0 * M_PI;
  const FramePath p = solve_continuous(helix_datum(k, tau, len), RotationMatrix::identity(3));
  const Curve c = integrate_tangent(p, true);
  // Axis direction tau e_1 + k e_3, radius k / (k^2 + tau^2).
  const Eigen::Vector3d axis = Eigen::Vector3d(tau, 0.0, k).normalized();
  const double radius = k / (k * k + tau * tau);
  const Eigen::Vector3d centre = radius * Eigen::Vector3d(0, 1, 0);
  double worst = 0.0;
  for (const auto& x : c.points) {
    const Eigen::Vector3d r = x - centre;
    worst = std::max(worst, std::abs((r - r.dot(axis) * axis).norm() - radius));
  }
  EXPECT_LT(worst, 1e-6);
}

TEST(Frechet, AgreesWithRecursiveReference) {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Eigen::Vector3d> a, b;
    for (int i = 0; i < 25; ++i) a.emplace_back(g(rng), g(rng), g(rng));
    for (int i = 0; i < 31; ++i) b.emplace_back(g(rng), g(rng), g(rng));
    EXPECT_DOUBLE_EQ(discrete_frechet(polyline(a), polyline(b)), oracle::frechet_reference(a, b));
    EXPECT_DOUBLE_EQ(discrete_frechet(polyline(a), polyline(b)), discrete_frechet(polyline(b), polyline(a)));
  }
}

TEST(Frechet, ParallelSegmentsAndRigidInvariance) {
  std::vector<Eigen::Vector3d> a, b;
  for (int i = 0; i <= 10; ++i) {
    a.emplace_back(0.1 * i, 0.0, 0.0);
    b.emplace_back(0.1 * i, 0.25, 0.0);
  }
  EXPECT_NEAR(discrete_frechet(polyline(a), polyline(b)), 0.25, 1e-15);
  const Eigen::Matrix3d q = oracle::exp_series(oracle::hat(Eigen::Vector3d(0.2, 0.4, -1.0)));
  const Eigen::Vector3d shift(1, 2, 3);
  EXPECT_NEAR(discrete_frechet(rigid_transform(polyline(a), q, shift), rigid_transform(polyline(b), q, shift)),
              0.25, 1e-14);
  EXPECT_THROW(discrete_frechet(polyline(a), Curve{}), DomainError);
}

TEST(Polygon, InscribedHelixApproachesInvariants) {
  const double len = 4.0 * M_PI;
  const FramePath p = solve_continuous(helix_datum(1.0, 0.5, len), RotationMatrix::identity(3));
  const Curve c = integrate_tangent(p, true);
  const PolygonalCurve poly = inscribe(c, 2048);
  EXPECT_EQ(poly.vertices.size(), 2049u);
  EXPECT_NEAR(poly.length() / len, 1.0, 1e-3);
  EXPECT_NEAR(poly.total_turning() / len, 1.0, 1e-2);
  EXPECT_NEAR(poly.total_torsion() / (0.5 * len), 1.0, 1e-2);
  EXPECT_GT(poly.modulus, 0.0);
  EXPECT_LT(poly.modulus, 0.05);
  EXPECT_THROW(inscribe(c, 2), DomainError);
}

TEST(Polygon, PlanarCurveHasNoTorsion) {
  const SkewPath circle = SkewPath::planar(BVScalar::affine(2.0 * M_PI, 0.0, 1.0));
  const Curve c = integrate_tangent(solve_2d(circle.theta(), RotationMatrix::identity(2)), true);
  const PolygonalCurve poly = inscribe(c, 256);
  EXPECT_NEAR(poly.total_torsion(), 0.0, 1e-12);
  EXPECT_NEAR(poly.total_turning(), 2.0 * M_PI * (1.0 - 1.0 / 256), 1e-3);
}

TEST(Invariants, CaseStudyTotals) {
  const SkewPath datum = SkewPath::frenet(BVScalar::affine(2.0, -1.0, 1.0, {{1.0, 1.0}}),
                                          BVScalar::affine(2.0, 0.0, 0.0, {{1.0, 1.0}}));
  const FramePath p = solve_bv(datum, RotationMatrix::identity(3));
  const GeomSummary g = invariants_exact(p, datum);
  const double jump = std::acos(0.5 * (1.0 + std::cos(std::sqrt(2.0))));
  EXPECT_NEAR(g.tc_exact, 2.0 + jump, 1e-12);
  EXPECT_NEAR(g.tat_exact, jump, 1e-12);
  EXPECT_NEAR(g.tc_bound, 2.0 + std::sqrt(2.0), 1e-12);
  EXPECT_TRUE(g.bounds_hold);
  // Mismatched datum is rejected.
  EXPECT_THROW(invariants_exact(p, datum.without_jumps()), DomainError);
}

TEST(Tantrix, JumpCountedByChord) {
  const SkewPath datum = SkewPath::frenet(BVScalar::affine(2.0, -1.0, 1.0, {{1.0, 2.0}}), BVScalar::constant(2.0, 0.0));
  const FramePath p = solve_bv(datum, RotationMatrix::identity(3));
  const TantrixVariation tv = tantrix_variation(p);
  EXPECT_NEAR(tv.spherical, 2.0 + 2.0, 1e-9);
  EXPECT_NEAR(tv.euclidean, 2.0 + 2.0 * std::sin(1.0), 1e-9);
}
