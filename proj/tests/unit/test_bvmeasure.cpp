#include <cmath>
#include <functional>

#include <gtest/gtest.h>

#include "frenetbv/bvmeasure.hpp"
#include "frenetbv/error.hpp"

using namespace frenetbv;

namespace {

// Piecewise linear interpolant of the Cantor staircase on 3^level cells.
std::vector<double> cantor_samples(int level) {
  const int n = static_cast<int>(std::pow(3, level));
  std::function<double(double, int)> c = [&](double x, int depth) -> double {
    if (depth == 0) return x;
    if (x < 1.0 / 3.0) return 0.5 * c(3.0 * x, depth - 1);
    if (x > 2.0 / 3.0) return 0.5 + 0.5 * c(3.0 * x - 2.0, depth - 1);
    return 0.5;
  };
  std::vector<double> v;
  for (int i = 0; i <= n; ++i) v.push_back(c(static_cast<double>(i) / n, level));
  return v;
}

}  // namespace

TEST(BVScalar, ValidatesPiecesAndJumps) {
  EXPECT_THROW(BVScalar(0.0, {PolynomialPiece::affine(0, 1, 0, 1)}), DomainError);
  EXPECT_THROW(BVScalar(2.0, {PolynomialPiece::affine(0, 1, 0, 1)}), DomainError);
  EXPECT_THROW(BVScalar(2.0, {PolynomialPiece::affine(0, 1, 0, 1), PolynomialPiece::affine(1, 2, 5, 1)}),
               DomainError);
  EXPECT_THROW(BVScalar::affine(2.0, 0.0, 1.0, {{0.0, 1.0}}), DomainError);
  EXPECT_THROW(BVScalar::affine(2.0, 0.0, 1.0, {{1.0, 0.0}}), DomainError);
  EXPECT_THROW(BVScalar::affine(2.0, 0.0, 1.0, {{1.5, 1.0}, {0.5, 1.0}}), DomainError);
  EXPECT_NO_THROW(BVScalar(2.0, {PolynomialPiece::affine(0, 1, 0, 1), PolynomialPiece::affine(1, 2, 1, -1)}));
}

TEST(BVScalar, OneSidedLimitsAndPreciseRepresentative) {
  const BVScalar u = BVScalar::affine(2.0, -1.0, 1.0, {{1.0, 0.8}});
  const auto at = u.one_sided_limits(1.0);
  EXPECT_DOUBLE_EQ(at.left, 0.0);
  EXPECT_DOUBLE_EQ(at.right, 0.8);
  EXPECT_DOUBLE_EQ(at.precise, 0.4);
  EXPECT_DOUBLE_EQ(u.value(0.5), -0.5);
  EXPECT_DOUBLE_EQ(u.value(1.5), 0.5 + 0.8);
  EXPECT_DOUBLE_EQ(u.jump_sum(1.0, false), 0.0);
  EXPECT_DOUBLE_EQ(u.jump_sum(1.0, true), 0.8);
}

TEST(BVScalar, VariationSplitsIntoDiffuseAndJumpParts) {
  const BVScalar u = BVScalar::affine(3.0, 0.0, -0.5, {{1.0, 0.25}, {2.0, -0.75}});
  EXPECT_NEAR(u.ac_variation(), 1.5, 1e-15);
  EXPECT_NEAR(u.jump_variation(), 1.0, 1e-15);
  EXPECT_NEAR(total_variation(u), 2.5, 1e-15);
  EXPECT_FALSE(u.strictly_increasing());
  EXPECT_TRUE(BVScalar::affine(3.0, 0.0, 0.5, {{1.0, 0.25}}).strictly_increasing());
}

TEST(BVScalar, HarmonicVariationCountsEveryLobe) {
  // sin(3s) on [0, 2 pi] rises and falls twelve times by one unit.
  const BVScalar u(2.0 * M_PI, {HarmonicPiece{0.0, 2.0 * M_PI, 0.0, 0.0, 1.0, 3.0, 0.0}});
  EXPECT_NEAR(u.ac_variation(), 12.0, 1e-12);
}

TEST(BVScalar, IntegralWithConstantExtension) {
  const BVScalar u = BVScalar::affine(2.0, 0.0, 1.0, {{1.0, 1.0}});
  EXPECT_NEAR(u.integral(0.0, 2.0), 2.0 + 1.0, 1e-14);
  // Outside [0, L] the function is frozen at its endpoint values.
  EXPECT_NEAR(u.integral(-1.0, 0.0), 0.0, 1e-14);
  EXPECT_NEAR(u.integral(2.0, 3.0), 3.0, 1e-14);
}

TEST(BVScalar, WithoutJumpsKeepsContinuousPart) {
  const BVScalar u = BVScalar::affine(2.0, 0.0, 1.0, {{1.0, 1.0}});
  const BVScalar c = u.without_jumps();
  EXPECT_FALSE(c.has_jumps());
  EXPECT_DOUBLE_EQ(c.value(1.5), 1.5);
}

TEST(Decompose, RecoversJumpAtomsAndDensity) {
  const BVScalar u = BVScalar::affine(2.0, 0.0, 2.0, {{0.5, 0.3}, {1.25, -0.1}});
  const auto dec = decompose(u, 1000);
  ASSERT_EQ(dec.jump_atoms.size(), 2u);
  EXPECT_DOUBLE_EQ(dec.jump_atoms[0].at, 0.5);
  EXPECT_DOUBLE_EQ(dec.jump_atoms[1].value, -0.1);
  EXPECT_NEAR(dec.ac_mass, 4.0, 1e-12);
  EXPECT_NEAR(dec.jump_mass, 0.4, 1e-15);
  for (double v : dec.ac_density) EXPECT_DOUBLE_EQ(v, 2.0);
}

TEST(Decompose, SampledCantorStaircaseHasNoAtoms) {
  // The sampled staircase is Lipschitz, so all of its unit variation is
  // diffuse and none of it is carried by atoms.
  const BVScalar u(1.0, {SampledPiece{0.0, 1.0, cantor_samples(6)}});
  const auto dec = decompose(u);
  EXPECT_TRUE(dec.jump_atoms.empty());
  EXPECT_NEAR(dec.ac_mass, 1.0, 1e-12);
  EXPECT_NEAR(u.ac_variation(), 1.0, 1e-12);
}

TEST(Mollify, BoxAverageOfStepIsRamp) {
  const double d = 0.7, eps = 0.1;
  const BVScalar u = BVScalar::affine(2.0, 0.0, 0.0, {{1.0, d}});
  const BVScalar m = mollify(u, eps, MollifierKind::Box);
  EXPECT_FALSE(m.has_jumps());
  for (double s : {0.5, 0.9, 0.95, 1.0, 1.03, 1.1, 1.5}) {
    const double expected = s <= 1.0 - eps ? 0.0 : s >= 1.0 + eps ? d : d * (s - 1.0 + eps) / (2.0 * eps);
    EXPECT_NEAR(m.value(s), expected, 1e-12) << "s = " << s;
  }
  EXPECT_NEAR(m.ac_variation(), d, 1e-12);
}

TEST(Mollify, BoxAverageOfAffineWithJump) {
  // Inside the window the average has slope (2 eps + d) / (2 eps).
  const double d = 1.0, eps = 0.05;
  const BVScalar u = BVScalar::affine(2.0, -1.0, 1.0, {{1.0, d}});
  const BVScalar m = mollify(u, eps);
  const double slope = (m.value(1.0 + 0.5 * eps) - m.value(1.0 - 0.5 * eps)) / eps;
  EXPECT_NEAR(slope, (2.0 * eps + d) / (2.0 * eps), 1e-10);
  EXPECT_NEAR(m.value(1.0), 0.5 * d, 1e-12);
}

TEST(Mollify, BumpIsMonotoneAndPreservesTotalRise) {
  const BVScalar u = BVScalar::affine(2.0, 0.0, 0.0, {{1.0, 0.5}});
  const BVScalar m = mollify(u, 0.2, MollifierKind::Bump);
  EXPECT_NEAR(m.value(0.7), 0.0, 1e-12);
  EXPECT_NEAR(m.value(1.3), 0.5, 1e-9);
  EXPECT_NEAR(m.value(1.0), 0.25, 1e-6);
  EXPECT_NEAR(m.ac_variation(), 0.5, 1e-6);
}

TEST(Mollify, RejectsWindowsThatOverlapJumpsOrBoundary) {
  const BVScalar u = BVScalar::affine(2.0, 0.0, 1.0, {{0.2, 0.5}, {0.5, 0.5}});
  EXPECT_THROW(mollify(u, 0.25), DomainError);
  EXPECT_THROW(mollify(u, 0.16), DomainError);
  EXPECT_THROW(mollify(u, -1.0), DomainError);
  EXPECT_NO_THROW(mollify(u, 0.1));
}

TEST(SkewPath, MergesThetaAndPhiJumpsAtOnePoint) {
  const SkewPath p = SkewPath::frenet(BVScalar::affine(2.0, 0.0, 1.0, {{1.0, 1.0}}),
                                      BVScalar::affine(2.0, 0.0, 0.0, {{0.5, 0.2}, {1.0, 1.0}}));
  const auto atoms = p.jumps();
  ASSERT_EQ(atoms.size(), 2u);
  EXPECT_DOUBLE_EQ(atoms[0].at, 0.5);
  EXPECT_DOUBLE_EQ(atoms[0].d, 0.0);
  EXPECT_DOUBLE_EQ(atoms[1].d, 1.0);
  EXPECT_DOUBLE_EQ(atoms[1].tau, 1.0);
  EXPECT_NEAR(p.jump_mass(), std::sqrt(2.0) * (0.2 + std::sqrt(2.0)), 1e-14);
}

TEST(SkewPath, ValueUsesPreciseRepresentative) {
  const SkewPath p = SkewPath::frenet(BVScalar::affine(2.0, 0.0, 1.0, {{1.0, 1.0}}), BVScalar::constant(2.0, 0.3));
  const auto v = p.value(1.0);
  EXPECT_DOUBLE_EQ(v(0, 1), 1.5);
  EXPECT_DOUBLE_EQ(v(1, 0), -1.5);
  EXPECT_DOUBLE_EQ(v(1, 2), 0.3);
}

TEST(SkewPath, PlanarRejectsTorsionJumps) {
  const SkewPath p = SkewPath::planar(BVScalar::affine(1.0, 0.0, 1.0));
  EXPECT_THROW(p.with_jumps({{0.5, 0.1, 0.2}}), DomainError);
  EXPECT_EQ(p.with_jumps({{0.5, 0.1, 0.0}}).jumps().size(), 1u);
}

TEST(SkewPath, TruncateKeepsHeavyAtoms) {
  const SkewPath p = SkewPath::frenet(BVScalar::affine(3.0, 0.0, 1.0, {{1.0, 1.0}, {2.0, 0.1}}),
                                      BVScalar::constant(3.0, 0.0));
  const SkewPath t = truncate_jumps(p, 2);
  ASSERT_EQ(t.jumps().size(), 1u);
  EXPECT_DOUBLE_EQ(t.jumps()[0].at, 1.0);
  EXPECT_EQ(truncate_jumps(p, 10).jumps().size(), 2u);
}

TEST(ValidateJumps, FlagsMagnitudesAtOrAbovePi) {
  const SkewPath ok = SkewPath::frenet(BVScalar::affine(2.0, 0.0, 1.0, {{1.0, 3.0}}),
                                       BVScalar::affine(2.0, 0.0, 0.0, {{1.0, 0.1}}));
  EXPECT_TRUE(validate_jumps(ok).ok());
  const SkewPath bad = SkewPath::frenet(BVScalar::affine(2.0, 0.0, 1.0, {{1.0, 3.0}}),
                                        BVScalar::affine(2.0, 0.0, 0.0, {{1.0, 1.0}}));
  const auto report = validate_jumps(bad);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.jumps_checked, 1);
  EXPECT_NEAR(report.violations[0].magnitude, std::hypot(3.0, 1.0), 1e-15);
}

TEST(CountableSkewPath, TailMassMatchesPartialSums) {
  const SkewPath base = SkewPath::frenet(BVScalar::affine(2.0, 0.0, 1.0), BVScalar::constant(2.0, 0.0));
  const GeometricJumpTail tail{1.0, 0.5, 0.8};
  const CountableSkewPath c(base, tail);
  double sum = 0.0;
  for (int k = 1; k < 400; ++k) sum += tail.atom(k, 2.0).mass();
  EXPECT_NEAR(c.total_jump_mass(), sum, 1e-12);
  const auto cut = c.truncate_by_prefix(5);
  EXPECT_EQ(cut.atoms_kept, 5);
  EXPECT_NEAR(cut.discarded_mass, tail.mass_from(6), 1e-12);
  EXPECT_NEAR(cut.path.jump_mass() + cut.discarded_mass, sum, 1e-12);
  const auto by_mass = c.truncate_by_mass(0.5);
  for (const auto& a : by_mass.path.jumps()) EXPECT_GT(a.mass(), 0.5);
}

TEST(CountableSkewPath, RejectsNonSummableTail) {
  const SkewPath base = SkewPath::frenet(BVScalar::affine(2.0, 0.0, 1.0), BVScalar::constant(2.0, 0.0));
  EXPECT_THROW(CountableSkewPath(base, GeometricJumpTail{1.0, 0.0, 1.0}), DomainError);
  EXPECT_THROW(CountableSkewPath(base, GeometricJumpTail{5.0, 0.0, 0.8}), DomainError);
}
