#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/LU>
#include <boost/math/quadrature/gauss.hpp>

#include "frenetbv/bvscalar.hpp"
#include "frenetbv/error.hpp"

namespace frenetbv {

namespace {

double box_average(const BVScalar& u, double s, double eps) {
  return u.integral(s - eps, s + eps) / (2.0 * eps);
}

void check_admissible(const BVScalar& u, double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw DomainError("mollify: eps must be positive");
  const auto& jumps = u.jumps();
  for (std::size_t k = 0; k < jumps.size(); ++k) {
    const double boundary = std::min(jumps[k].at, u.length() - jumps[k].at);
    if (!(eps < boundary)) {
      throw DomainError("mollify: eps = " + std::to_string(eps) +
                        " reaches the boundary from the jump at s = " + std::to_string(jumps[k].at));
    }
    if (k > 0 && !(2.0 * eps < jumps[k].at - jumps[k - 1].at)) {
      throw DomainError("mollify: eps = " + std::to_string(eps) +
                        " is too large for the jump spacing near s = " + std::to_string(jumps[k].at));
    }
  }
}

// Exact box average of a piecewise polynomial of degree <= 2 with jumps: on
// every cell between the shifted knots the average is a cubic, recovered here
// by interpolation at four points.
BVScalar box_exact(const BVScalar& u, double eps) {
  const double len = u.length();
  std::vector<double> cuts{0.0, len};
  for (double k : u.knots()) {
    for (double c : {k - eps, k + eps})
      if (c > 0.0 && c < len) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  const double merge_tol = 1e-12 * std::max(1.0, len);
  std::vector<double> nodes;
  for (double c : cuts)
    if (nodes.empty() || c - nodes.back() > merge_tol) nodes.push_back(c);
  nodes.back() = len;

  std::vector<Piece> pieces;
  pieces.reserve(nodes.size());
  double previous_end_value = 0.0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const double a = nodes[i], b = nodes[i + 1], h = b - a;
    Eigen::Matrix4d vander;
    Eigen::Vector4d rhs;
    for (int r = 0; r < 4; ++r) {
      const double t = h * r / 3.0;
      vander(r, 0) = 1.0;
      vander(r, 1) = t;
      vander(r, 2) = t * t;
      vander(r, 3) = t * t * t;
      rhs(r) = box_average(u, a + t, eps);
    }
    // Share the endpoint value with the previous cell so the pieces join exactly.
    if (i > 0) rhs(0) = previous_end_value;
    const Eigen::Vector4d c = vander.partialPivLu().solve(rhs);
    pieces.push_back(PolynomialPiece{a, b, {rhs(0), c(1), c(2), c(3)}});
    // Evaluate the stored cubic at the right end so the next cell starts there.
    previous_end_value = piece_value(pieces.back(), b);
  }
  return BVScalar(len, std::move(pieces));
}

BVScalar box_sampled(const BVScalar& u, double eps, int samples) {
  const double len = u.length();
  SampledPiece piece{0.0, len, {}};
  piece.values.reserve(static_cast<std::size_t>(samples) + 1);
  for (int i = 0; i <= samples; ++i) piece.values.push_back(box_average(u, len * i / samples, eps));
  return BVScalar(len, {std::move(piece)});
}

double bump(double x) { return std::abs(x) < 1.0 ? std::exp(-1.0 / (1.0 - x * x)) : 0.0; }

using Gauss = boost::math::quadrature::gauss<double, 30>;

double bump_normalisation() {
  static const double value = Gauss::integrate(bump, -1.0, 1.0);
  return value;
}

// (psi_eps * u)(s), integrating cell by cell between the knots of u so the
// quadrature never straddles a jump.
double bump_average(const BVScalar& u, double s, double eps, const std::vector<double>& knots) {
  std::vector<double> cuts{s - eps};
  for (double k : knots)
    if (k > s - eps && k < s + eps) cuts.push_back(k);
  cuts.push_back(s + eps);
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    acc += Gauss::integrate([&](double y) { return bump((s - y) / eps) * u.value(y); }, cuts[i],
                            cuts[i + 1]);
  }
  return acc / (eps * bump_normalisation());
}

BVScalar bump_sampled(const BVScalar& u, double eps, int samples) {
  const double len = u.length();
  const auto knots = u.knots();
  SampledPiece piece{0.0, len, {}};
  piece.values.reserve(static_cast<std::size_t>(samples) + 1);
  for (int i = 0; i <= samples; ++i) piece.values.push_back(bump_average(u, len * i / samples, eps, knots));
  return BVScalar(len, {std::move(piece)});
}

}  // namespace

BVScalar mollify(const BVScalar& u, double eps, MollifierKind kind, int samples) {
  check_admissible(u, eps);
  if (samples < 2) throw DomainError("mollify: samples must be >= 2");
  if (kind == MollifierKind::Bump) return bump_sampled(u, eps, samples);
  const int degree = u.polynomial_degree();
  if (degree >= 0 && degree <= 2) return box_exact(u, eps);
  return box_sampled(u, eps, samples);
}

}  // namespace frenetbv
