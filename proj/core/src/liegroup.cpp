#include "frenetbv/liegroup.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/LU>

#include "frenetbv/error.hpp"

namespace frenetbv {

namespace {

Matrix identity_matrix(int n) { return Matrix::Identity(n, n); }

void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() < 2) {
    throw DomainError(std::string(what) + ": expected a square matrix of size >= 2, got " +
                      std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

// exp(X) for skew X via scaling and squaring of a truncated Taylor series.
Matrix series_exp(const Matrix& x) {
  const int n = static_cast<int>(x.rows());
  const double norm1 = x.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > 0.25) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.25)));
  const Matrix y = x / std::ldexp(1.0, squarings);

  Matrix result = identity_matrix(n);
  Matrix term = identity_matrix(n);
  for (int k = 1; k <= 30; ++k) {
    term = (term * y) / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  for (int i = 0; i < squarings; ++i) result = (result * result).eval();
  return result;
}

}  // namespace

SkewMatrix::SkewMatrix(Matrix m) : m_(std::move(m)) {
  require_square(m_, "SkewMatrix");
  const double tol = kSkewTolerance * std::max(1.0, m_.norm());
  const double defect = (m_ + m_.transpose()).cwiseAbs().maxCoeff();
  if (!(defect <= tol)) {
    throw DomainError("SkewMatrix: matrix is not skew-symmetric (defect " +
                      std::to_string(defect) + ")");
  }
}

SkewMatrix SkewMatrix::zero(int n) {
  if (n < 2) throw DomainError("SkewMatrix::zero: dimension must be >= 2");
  return SkewMatrix(Matrix::Zero(n, n), Trusted{});
}

SkewMatrix SkewMatrix::hat(const Vector3& axis) {
  Matrix m(3, 3);
  m << 0.0, -axis.z(), axis.y(),
       axis.z(), 0.0, -axis.x(),
       -axis.y(), axis.x(), 0.0;
  return SkewMatrix(std::move(m), Trusted{});
}

Vector3 SkewMatrix::vee() const {
  if (dim() != 3) throw DomainError("SkewMatrix::vee: requires dimension 3");
  return {m_(2, 1), m_(0, 2), m_(1, 0)};
}

SkewMatrix SkewMatrix::operator-() const { return SkewMatrix(-m_, Trusted{}); }

SkewMatrix SkewMatrix::operator+(const SkewMatrix& other) const {
  if (other.dim() != dim()) throw DomainError("SkewMatrix: dimension mismatch");
  return SkewMatrix(m_ + other.m_, Trusted{});
}

SkewMatrix SkewMatrix::operator-(const SkewMatrix& other) const {
  if (other.dim() != dim()) throw DomainError("SkewMatrix: dimension mismatch");
  return SkewMatrix(m_ - other.m_, Trusted{});
}

SkewMatrix SkewMatrix::operator*(double scale) const { return SkewMatrix(m_ * scale, Trusted{}); }

RotationMatrix::RotationMatrix(Matrix m) : m_(std::move(m)) {
  require_square(m_, "RotationMatrix");
  const double defect = orthogonality_defect();
  if (!(defect <= kOrthogonalityTolerance)) {
    throw NumericalError("RotationMatrix: |R^T R - I|_F = " + std::to_string(defect) +
                         " exceeds tolerance");
  }
  if (!(m_.determinant() > 0.0)) {
    throw NumericalError("RotationMatrix: determinant is not positive");
  }
}

RotationMatrix RotationMatrix::identity(int n) { return RotationMatrix(identity_matrix(n)); }

RotationMatrix RotationMatrix::transpose() const { return RotationMatrix(m_.transpose()); }

RotationMatrix RotationMatrix::operator*(const RotationMatrix& other) const {
  if (other.dim() != dim()) throw DomainError("RotationMatrix: dimension mismatch");
  return RotationMatrix(m_ * other.m_);
}

double RotationMatrix::orthogonality_defect() const {
  return (m_.transpose() * m_ - identity_matrix(dim())).norm();
}

AxisAngle::AxisAngle(Vector3 axis_in, double angle_in) : axis(std::move(axis_in)), angle(angle_in) {
  if (!(std::abs(axis.norm() - 1.0) <= 1e-12)) {
    throw DomainError("AxisAngle: axis is not a unit vector (norm " +
                      std::to_string(axis.norm()) + ")");
  }
}

SkewMatrix generator(int index) {
  switch (index) {
    case 1: return SkewMatrix::hat(Vector3::UnitX());
    case 2: return SkewMatrix::hat(Vector3::UnitY());
    case 3: return SkewMatrix::hat(Vector3::UnitZ());
    default:
      throw DomainError("generator: index must be 1, 2 or 3, got " + std::to_string(index));
  }
}

RotationMatrix rodrigues_exp(const AxisAngle& rotation) {
  const Matrix j = SkewMatrix::hat(rotation.axis).matrix();
  return RotationMatrix(identity_matrix(3) + std::sin(rotation.angle) * j +
                        (1.0 - std::cos(rotation.angle)) * (j * j));
}

RotationMatrix exp_skew(const SkewMatrix& x) {
  const Matrix& m = x.matrix();
  switch (x.dim()) {
    case 2: {
      // m = [[0, w], [-w, 0]] is a rotation by -w.
      const double a = -m(0, 1);
      Matrix r(2, 2);
      r << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
      return RotationMatrix(std::move(r));
    }
    case 3: {
      const double angle = x.vee().norm();
      double a = 0.0;
      double b = 0.0;
      if (angle < 1e-4) {
        const double t2 = angle * angle;
        a = 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
        b = 0.5 - t2 / 24.0 + t2 * t2 / 720.0;
      } else {
        a = std::sin(angle) / angle;
        b = (1.0 - std::cos(angle)) / (angle * angle);
      }
      return RotationMatrix(identity_matrix(3) + a * m + b * (m * m));
    }
    default:
      return RotationMatrix(series_exp(m));
  }
}

AxisAngle log_rotation(const RotationMatrix& r) {
  if (r.dim() != 3) throw DomainError("log_rotation: requires a 3x3 rotation");
  const Matrix& m = r.matrix();
  const double trace = m.trace();
  if (!(trace > -1.0 + 1e-9)) {
    throw DomainError("log_rotation: rotation angle is pi (axis is ambiguous)");
  }
  const Vector3 w(0.5 * (m(2, 1) - m(1, 2)), 0.5 * (m(0, 2) - m(2, 0)),
                  0.5 * (m(1, 0) - m(0, 1)));
  const double c = std::clamp(0.5 * (trace - 1.0), -1.0, 1.0);
  const double s = w.norm();
  const double angle = std::atan2(s, c);
  if (s == 0.0) return AxisAngle(Vector3::UnitX(), 0.0);

  Vector3 axis;
  if (angle > 0.5 * M_PI) {
    // sin(angle) loses accuracy near pi: read the axis off the symmetric part.
    const Matrix sym = 0.5 * (m + m.transpose()) - c * identity_matrix(3);
    int j = 0;
    sym.diagonal().maxCoeff(&j);
    axis = Vector3(sym(0, j), sym(1, j), sym(2, j));
    if (axis.dot(w) < 0.0) axis = -axis;
  } else {
    axis = w / s;
  }
  return AxisAngle(axis.normalized(), angle);
}

SkewMatrix cayley(const RotationMatrix& a) {
  const int n = a.dim();
  const Matrix plus = a.matrix() + identity_matrix(n);
  const Eigen::PartialPivLU<Matrix> lu(plus);
  const double det = lu.determinant();
  if (!(std::abs(det) > 1e-12)) {
    throw NumericalError("cayley: A + I is singular (A has eigenvalue -1)");
  }
  return SkewMatrix(lu.solve(a.matrix() - identity_matrix(n)));
}

RotationMatrix inverse_cayley(const SkewMatrix& b) {
  const int n = b.dim();
  const Matrix id = identity_matrix(n);
  // (I + B) and (I - B)^{-1} commute.
  const Eigen::PartialPivLU<Matrix> lu(id - b.matrix());
  return RotationMatrix(lu.solve(id + b.matrix()));
}

SkewMatrix atomic_skew(const RotationMatrix& a) {
  return SkewMatrix(0.5 * (a.matrix().transpose() - a.matrix()));
}

SkewMatrix exp_path_derivative(const ScalarPath& f, const ScalarPath& g, const ScalarPath& h,
                               double s) {
  const double fv = f.value(s), gv = g.value(s), hv = h.value(s);
  const double fd = f.derivative(s), gd = g.derivative(s), hd = h.derivative(s);
  const double rho = std::sqrt(fv * fv + gv * gv + hv * hv);
  if (!(rho > 1e-12)) {
    throw DomainError("exp_path_derivative: |(f, g, h)| vanishes at s = " + std::to_string(s));
  }
  const double rho_d = (fv * fd + gv * gd + hv * hd) / rho;
  const double sin_rho = std::sin(rho);
  const double cross = (1.0 - std::cos(rho)) / (rho * rho);
  // d/ds (u / rho)
  auto ratio_d = [&](double u, double ud) { return (ud * rho - u * rho_d) / (rho * rho); };

  const double b12 = sin_rho * ratio_d(fv, fd) + fv / rho * rho_d + cross * (gd * hv - gv * hd);
  const double b13 = sin_rho * ratio_d(hv, hd) + hv / rho * rho_d + cross * (gv * fd - gd * fv);
  const double b23 = sin_rho * ratio_d(gv, gd) + gv / rho * rho_d + cross * (fv * hd - fd * hv);

  Matrix m = Matrix::Zero(3, 3);
  m(0, 1) = b12;
  m(0, 2) = b13;
  m(1, 2) = b23;
  m(1, 0) = -b12;
  m(2, 0) = -b13;
  m(2, 1) = -b23;
  return SkewMatrix(std::move(m));
}

}  // namespace frenetbv
