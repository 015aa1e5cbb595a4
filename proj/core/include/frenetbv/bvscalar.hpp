#pragma once

// Scalar functions of bounded variation on (0, L): a continuous part given by
// pieces, plus a finite list of jump atoms.
//
// The value is u(s) = c(s) + sum_{s_k < s} [u](s_k) away from the jumps, where
// c is the continuous part. Jump values are stored right-minus-left; at a jump
// the precise representative is the mean of the two one-sided limits.

#include <array>
#include <cstddef>
#include <variant>
#include <vector>

namespace frenetbv {

// c0 + c1 t + c2 t^2 + c3 t^3 with t = s - from. An affine piece has c2 = c3 = 0.
struct PolynomialPiece {
  double from = 0.0;
  double to = 0.0;
  std::array<double, 4> coeffs{};

  static PolynomialPiece affine(double from, double to, double value, double slope) {
    return {from, to, {value, slope, 0.0, 0.0}};
  }
};

// Uniformly spaced samples on [from, to] joined by linear interpolation.
struct SampledPiece {
  double from = 0.0;
  double to = 0.0;
  std::vector<double> values;  // at least two
};

// value + slope t + amplitude sin(frequency t + phase), t = s - from.
struct HarmonicPiece {
  double from = 0.0;
  double to = 0.0;
  double value = 0.0;
  double slope = 0.0;
  double amplitude = 0.0;
  double frequency = 0.0;
  double phase = 0.0;
};

using Piece = std::variant<PolynomialPiece, SampledPiece, HarmonicPiece>;

double piece_from(const Piece& p);
double piece_to(const Piece& p);
double piece_value(const Piece& p, double s);
// Right derivative inside the piece (left derivative at `to`).
double piece_derivative(const Piece& p, double s);
// Exact integral over [a, b] within the piece.
double piece_integral(const Piece& p, double a, double b);
// Exact total variation over [from, to].
double piece_variation(const Piece& p);
// Lower bound for the derivative over the piece.
double piece_min_derivative(const Piece& p);

struct Jump {
  double at = 0.0;
  double value = 0.0;  // u(at+) - u(at-), non-zero
};

struct OneSidedLimits {
  double left = 0.0;
  double right = 0.0;
  double precise = 0.0;
};

class BVScalar {
 public:
  // Throws DomainError when the pieces do not tile [0, length] continuously or
  // the jumps are unordered, outside (0, length), zero or non-finite. With
  // `monotone` set the function must also be strictly increasing.
  BVScalar(double length, std::vector<Piece> pieces, std::vector<Jump> jumps = {},
           bool monotone = false);

  static BVScalar constant(double length, double value);
  static BVScalar affine(double length, double value_at_zero, double slope,
                         std::vector<Jump> jumps = {});

  double length() const noexcept { return length_; }
  const std::vector<Piece>& pieces() const noexcept { return pieces_; }
  const std::vector<Jump>& jumps() const noexcept { return jumps_; }
  bool has_jumps() const noexcept { return !jumps_.empty(); }
  bool monotone_flag() const noexcept { return monotone_; }

  // Continuous part c(s), clamped to [0, L].
  double continuous_value(double s) const;
  double continuous_derivative(double s) const;

  // One-sided limits; at s <= 0 both equal u(0+), at s >= L both equal u(L-).
  OneSidedLimits one_sided_limits(double s) const;
  double value(double s) const { return one_sided_limits(s).precise; }

  // Sum of the jumps located strictly before s (or at s when inclusive).
  double jump_sum(double s, bool inclusive) const;

  // |D^a u|(I) and |D^J u|(I).
  double ac_variation() const;
  double jump_variation() const;

  // Slopes >= 1e-12 on every piece and every jump positive.
  bool strictly_increasing() const;
  bool piecewise_polynomial() const;
  int polynomial_degree() const;  // max degree over pieces; -1 if not polynomial

  // Integral of u over [a, b], u extended by u(0+) on the left of 0 and by
  // u(L-) on the right of L.
  double integral(double a, double b) const;

  // Piece breakpoints together with jump locations, sorted and deduplicated.
  std::vector<double> knots() const;

  BVScalar with_jumps(std::vector<Jump> jumps) const;
  BVScalar without_jumps() const { return with_jumps({}); }

 private:
  std::size_t piece_index(double s) const;
  double antiderivative(double s) const;  // integral of u over [0, s], s in [0, L]

  double length_;
  std::vector<Piece> pieces_;
  std::vector<Jump> jumps_;
  bool monotone_;
  std::vector<double> piece_integrals_;  // cumulative integral of c at piece starts
};

struct DerivativeDecomposition {
  std::vector<double> grid;        // sample locations
  std::vector<double> ac_density;  // u' on the grid
  std::vector<Jump> jump_atoms;
  double ac_mass = 0.0;    // |D^a u|(I)
  double jump_mass = 0.0;  // |D^J u|(I)
};

// Samples u' on a uniform grid of `samples` intervals merged with the knots.
DerivativeDecomposition decompose(const BVScalar& u, int samples = 4096);

OneSidedLimits one_sided_limits(const BVScalar& u, double s);

// ac_mass + jump_mass.
double total_variation(const BVScalar& u);

enum class MollifierKind { Box, Bump };

// Average of u over windows of half-width eps (Box), or convolution with a
// smooth compactly supported bump of radius eps (Bump). u is extended by
// constants outside (0, L). The result has no jumps. Box mollification of a
// piecewise polynomial of degree <= 2 is exact and piecewise polynomial; other
// inputs are sampled on `samples` uniform intervals.
//
// Throws DomainError unless eps is smaller than the distance between
// consecutive jumps and between every jump and the boundary.
BVScalar mollify(const BVScalar& u, double eps, MollifierKind kind = MollifierKind::Box,
                 int samples = 8192);

}  // namespace frenetbv
