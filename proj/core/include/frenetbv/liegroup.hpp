#pragma once

// Small dense matrix primitives on Sk(n) and SO(n).
//
// Matrices are row-major doubles; n is small (2..8). All types are immutable
// value types whose invariants are checked on construction.

#include <functional>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace frenetbv {

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector3 = Eigen::Vector3d;

inline constexpr double kSkewTolerance = 1e-12;
inline constexpr double kOrthogonalityTolerance = 1e-10;

// Element of the Lie algebra of skew-symmetric n x n matrices.
class SkewMatrix {
 public:
  // Throws DomainError unless |m(i,j) + m(j,i)| <= 1e-12 * max(1, |m|_F).
  explicit SkewMatrix(Matrix m);

  static SkewMatrix zero(int n);
  // 3x3 matrix J with J v = axis x v.
  static SkewMatrix hat(const Vector3& axis);

  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const noexcept { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }
  double norm() const { return m_.norm(); }

  // Inverse of hat(); requires dim() == 3.
  Vector3 vee() const;

  SkewMatrix operator-() const;
  SkewMatrix operator+(const SkewMatrix& other) const;
  SkewMatrix operator-(const SkewMatrix& other) const;
  SkewMatrix operator*(double scale) const;

 private:
  struct Trusted {};
  SkewMatrix(Matrix m, Trusted) : m_(std::move(m)) {}
  Matrix m_;
};

// Element of SO(n).
class RotationMatrix {
 public:
  // Throws NumericalError unless |R^T R - I|_F <= 1e-10 and det R > 0.
  explicit RotationMatrix(Matrix m);

  static RotationMatrix identity(int n);

  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const noexcept { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  RotationMatrix transpose() const;
  RotationMatrix operator*(const RotationMatrix& other) const;

  // |R^T R - I|_F
  double orthogonality_defect() const;

 private:
  Matrix m_;
};

struct AxisAngle {
  Vector3 axis;  // unit vector
  double angle;  // radians

  // Throws DomainError unless | |axis| - 1 | <= 1e-12.
  AxisAngle(Vector3 axis, double angle);
};

// J_1, J_2, J_3 with J_l v = e_l x v. Throws DomainError for l outside 1..3.
SkewMatrix generator(int index);

// I + sin(a) J + (1 - cos(a)) J^2.
RotationMatrix rodrigues_exp(const AxisAngle& rotation);

// Exponential of an arbitrary skew matrix. Closed form for n = 2 and n = 3,
// scaling-and-squaring Taylor series otherwise.
RotationMatrix exp_skew(const SkewMatrix& x);

// Inverse of rodrigues_exp on rotations with angle in [0, pi). The identity
// maps to (e_1, 0). Throws DomainError when trace(R) <= -1 + 1e-9.
AxisAngle log_rotation(const RotationMatrix& r);

// B = (A + I)^{-1} (A - I). Throws NumericalError when |det(A + I)| <= 1e-12.
SkewMatrix cayley(const RotationMatrix& a);

// A = (I + B)(I - B)^{-1}; the inverse of cayley on its domain.
RotationMatrix inverse_cayley(const SkewMatrix& b);

// (A^T - A) / 2: the atomic skew weight carried by a jump rotation A.
SkewMatrix atomic_skew(const RotationMatrix& a);

// A scalar path supplied together with its derivative.
struct ScalarPath {
  std::function<double(double)> value;
  std::function<double(double)> derivative;
};

// Right-trivialised derivative of s -> exp(X(s)) where
//   X = [[0, f, h], [-f, 0, g], [-h, -g, 0]],
// i.e. the skew matrix B(s) with d/ds exp(X) = exp(X) B, expressed through
// rho = |(f, g, h)| and its derivative. Throws DomainError when rho <= 1e-12.
SkewMatrix exp_path_derivative(const ScalarPath& f, const ScalarPath& g,
                               const ScalarPath& h, double s);

}  // namespace frenetbv
