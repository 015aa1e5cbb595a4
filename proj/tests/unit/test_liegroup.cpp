#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "frenetbv/error.hpp"
#include "frenetbv/liegroup.hpp"
#include "oracles.hpp"

using namespace frenetbv;

namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

Eigen::MatrixXd random_skew(std::mt19937_64& rng, int n, double scale) {
  std::normal_distribution<double> g(0.0, scale);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = g(rng);
      m(j, i) = -m(i, j);
    }
  return m;
}

}  // namespace

TEST(SkewMatrix, RejectsNonSkewInput) {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 1) = 1.0;
  EXPECT_THROW(SkewMatrix{m}, DomainError);
  m(1, 0) = -1.0;
  EXPECT_NO_THROW(SkewMatrix{m});
}

TEST(SkewMatrix, HatAndVeeAreInverse) {
  const Vector3 v(0.3, -1.2, 2.5);
  EXPECT_LT((SkewMatrix::hat(v).vee() - v).norm(), 1e-15);
  EXPECT_LT(max_abs(SkewMatrix::hat(v).matrix() - oracle::hat(v)), 1e-15);
}

TEST(RotationMatrix, RejectsReflectionsAndNonOrthogonal) {
  Matrix r = Matrix::Identity(3, 3);
  r(2, 2) = -1.0;
  EXPECT_THROW(RotationMatrix{r}, NumericalError);
  r(2, 2) = 1.1;
  EXPECT_THROW(RotationMatrix{r}, NumericalError);
}

TEST(Generators, IndexOutOfRangeThrows) {
  EXPECT_THROW(generator(0), DomainError);
  EXPECT_THROW(generator(4), DomainError);
  EXPECT_LT(max_abs(generator(3).matrix() - oracle::hat(Vector3::UnitZ())), 1e-15);
}

TEST(Rodrigues, MatchesPowerSeries) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(-3.1, 3.1);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 200; ++trial) {
    const Vector3 axis = Vector3(g(rng), g(rng), g(rng)).normalized();
    const double a = angle(rng);
    const auto r = rodrigues_exp(AxisAngle(axis, a));
    EXPECT_LT(max_abs(r.matrix() - oracle::exp_series(oracle::hat(axis * a))), 1e-13) << "trial " << trial;
  }
}

TEST(ExpSkew, GeneralDimensionMatchesSeries) {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 6; ++n) {
    const Eigen::MatrixXd x = random_skew(rng, n, 0.8);
    const auto r = exp_skew(SkewMatrix(x));
    EXPECT_LT(max_abs(r.matrix() - oracle::exp_series(x)), 1e-12) << "n = " << n;
  }
}

TEST(ExpSkew, PlanarConvention) {
  // [[0, w], [-w, 0]] exponentiates to the rotation by -w.
  for (double w : {-2.0, -0.4, 0.0, 0.9, 3.0}) {
    Matrix x(2, 2);
    x << 0.0, w, -w, 0.0;
    EXPECT_LT(max_abs(exp_skew(SkewMatrix(x)).matrix() - oracle::planar_rotation(-w)), 1e-14);
  }
}

TEST(LogRotation, RoundTrip) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> angle(1e-6, 3.1);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 200; ++trial) {
    const Vector3 axis = Vector3(g(rng), g(rng), g(rng)).normalized();
    const double a = angle(rng);
    const AxisAngle back = log_rotation(rodrigues_exp(AxisAngle(axis, a)));
    EXPECT_NEAR(back.angle, a, 1e-10);
    EXPECT_LT((back.axis - axis).norm(), 1e-8);
  }
}

TEST(LogRotation, IdentityAndHalfTurn) {
  const AxisAngle id = log_rotation(RotationMatrix::identity(3));
  EXPECT_EQ(id.angle, 0.0);
  EXPECT_THROW(log_rotation(rodrigues_exp(AxisAngle(Vector3::UnitX(), M_PI))), DomainError);
}

TEST(Cayley, ClosedFormOnPlaneRotation) {
  const Matrix j2 = generator(2).matrix();
  for (double a : {-3.0, -1.5, -0.3, 0.3, 1.5, 3.0}) {
    const auto b = cayley(rodrigues_exp(AxisAngle(Vector3::UnitY(), a)));
    EXPECT_LT(max_abs(b.matrix() - std::tan(0.5 * a) * j2), 1e-12) << "alpha = " << a;
  }
}

TEST(Cayley, InverseRoundTripAndHalfTurnFailure) {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 6; ++n) {
    const Eigen::MatrixXd b = random_skew(rng, n, 1.0);
    const auto a = inverse_cayley(SkewMatrix(b));
    EXPECT_LT(max_abs(cayley(a).matrix() - b), 1e-11);
  }
  EXPECT_THROW(cayley(rodrigues_exp(AxisAngle(Vector3::UnitZ(), M_PI))), NumericalError);
}

TEST(AtomicSkew, SincWeightedJump) {
  for (auto [d, tau] : {std::pair{1.0, 1.0}, {0.5, -2.0}, {2.9, 0.1}, {0.0, 1.3}}) {
    const double beta = std::hypot(d, tau);
    const Eigen::Matrix3d a = oracle::exp_series(oracle::hat(Eigen::Vector3d(tau, 0.0, d)));
    const auto atom = atomic_skew(RotationMatrix(Matrix(a)));
    EXPECT_LT(max_abs(atom.matrix() - std::sin(beta) / beta * oracle::frenet_skew(d, tau)), 1e-13);
  }
}

TEST(AtomicSkew, PlanarJumpGivesSineWeight) {
  for (double d : {0.2, 1.0, 2.5}) {
    const auto atom = atomic_skew(RotationMatrix(Matrix(oracle::planar_rotation(d))));
    EXPECT_NEAR(atom(0, 1), std::sin(d), 1e-15);
    EXPECT_NEAR(atom(1, 0), -std::sin(d), 1e-15);
  }
}

// Multiplying the jump of the datum by the Cayley factor of the jump rotation
// does not give a skew weight, so it cannot be the jump part of the equation.
TEST(AtomicSkew, CayleyWeightedJumpIsNotSkew) {
  for (double d : {0.3, 1.0, 2.0}) {
    Eigen::Matrix2d m, jump;
    m << 1.0, -std::sin(d) / (1.0 + std::cos(d)), std::sin(d) / (1.0 + std::cos(d)), 1.0;
    jump << 0.0, -d, d, 0.0;
    const Eigen::Matrix2d rhs = m * jump;
    EXPECT_GT(std::abs(rhs(0, 0)), 1e-2);
    EXPECT_GT((rhs + rhs.transpose()).norm(), 1e-2);
    Eigen::Matrix2d sine_atom;
    sine_atom << 0.0, std::sin(d), -std::sin(d), 0.0;
    EXPECT_GT((rhs - sine_atom).norm(), 0.1);
    EXPECT_NEAR(rhs(0, 0), -d * std::sin(d) / (1.0 + std::cos(d)), 1e-15);
  }
}

namespace {

ScalarPath path(std::function<double(double)> v, std::function<double(double)> dv) { return {v, dv}; }

Eigen::Matrix3d x_of(double f, double g, double h) {
  Eigen::Matrix3d x;
  x << 0.0, f, h, -f, 0.0, g, -h, -g, 0.0;
  return x;
}

}  // namespace

TEST(ExpPathDerivative, HelixDatumIsConstant) {
  const double k = 1.3, tau = -0.7;
  const auto f = path([k](double s) { return k * s; }, [k](double) { return k; });
  const auto g = path([tau](double s) { return tau * s; }, [tau](double) { return tau; });
  const auto h = path([](double) { return 0.0; }, [](double) { return 0.0; });
  for (int i = 1; i <= 100; ++i) {
    const double s = 0.05 * i;
    const auto b = exp_path_derivative(f, g, h, s);
    EXPECT_NEAR(b(0, 1), k, 1e-9);
    EXPECT_NEAR(b(0, 2), 0.0, 1e-9);
    EXPECT_NEAR(b(1, 2), tau, 1e-9);
  }
}

TEST(ExpPathDerivative, MatchesQuadratureOnNonCommutingPath) {
  const auto f = path([](double s) { return std::sin(s) + 0.2; }, [](double s) { return std::cos(s); });
  const auto g = path([](double s) { return s * s; }, [](double s) { return 2.0 * s; });
  const auto h = path([](double s) { return 0.3 * std::cos(2.0 * s); }, [](double s) { return -0.6 * std::sin(2.0 * s); });
  auto x = [&](double s) -> Eigen::Matrix3d { return x_of(f.value(s), g.value(s), h.value(s)); };
  auto dx = [&](double s) -> Eigen::Matrix3d { return x_of(f.derivative(s), g.derivative(s), h.derivative(s)); };
  for (double s : {0.1, 0.6, 1.1, 1.7}) {
    const auto b = exp_path_derivative(f, g, h, s);
    EXPECT_LT(max_abs(b.matrix() - oracle::exp_derivative_quadrature(x, dx, s)), 1e-9) << "s = " << s;
  }
}

TEST(ExpPathDerivative, ZeroPathThrows) {
  const auto z = path([](double) { return 0.0; }, [](double) { return 1.0; });
  EXPECT_THROW(exp_path_derivative(z, z, z, 0.0), DomainError);
}
