#include "frenetbv/bvscalar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "frenetbv/error.hpp"

namespace frenetbv {

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

double poly_eval(const std::array<double, 4>& c, double t) {
  return ((c[3] * t + c[2]) * t + c[1]) * t + c[0];
}

double poly_deriv(const std::array<double, 4>& c, double t) {
  return (3.0 * c[3] * t + 2.0 * c[2]) * t + c[1];
}

double poly_antideriv(const std::array<double, 4>& c, double t) {
  return (((c[3] / 4.0 * t + c[2] / 3.0) * t + c[1] / 2.0) * t + c[0]) * t;
}

// Roots of the derivative of a cubic inside (0, len).
std::vector<double> poly_critical_points(const std::array<double, 4>& c, double len) {
  std::vector<double> roots;
  const double a = 3.0 * c[3], b = 2.0 * c[2], cc = c[1];
  if (a == 0.0) {
    if (b != 0.0) roots.push_back(-cc / b);
  } else {
    const double disc = b * b - 4.0 * a * cc;
    if (disc >= 0.0) {
      const double sq = std::sqrt(disc);
      const double q = -0.5 * (b + std::copysign(sq, b));
      if (q != 0.0) {
        roots.push_back(q / a);
        roots.push_back(cc / q);
      } else {
        roots.push_back(0.0);
      }
    }
  }
  std::vector<double> inside;
  for (double r : roots)
    if (r > 0.0 && r < len) inside.push_back(r);
  std::sort(inside.begin(), inside.end());
  return inside;
}

struct SampledGeometry {
  double h;
  std::size_t segments;
};

SampledGeometry sampled_geometry(const SampledPiece& p) {
  const std::size_t segs = p.values.size() - 1;
  return {(p.to - p.from) / static_cast<double>(segs), segs};
}

// Segment index and local offset for s inside a sampled piece.
std::pair<std::size_t, double> sampled_locate(const SampledPiece& p, double s) {
  const auto g = sampled_geometry(p);
  double x = (s - p.from) / g.h;
  x = std::clamp(x, 0.0, static_cast<double>(g.segments));
  auto k = static_cast<std::size_t>(std::floor(x));
  if (k >= g.segments) k = g.segments - 1;
  return {k, (x - static_cast<double>(k)) * g.h};
}

double sampled_antideriv(const SampledPiece& p, double s) {
  const auto g = sampled_geometry(p);
  const auto [k, t] = sampled_locate(p, s);
  double acc = 0.0;
  for (std::size_t i = 0; i < k; ++i) acc += 0.5 * g.h * (p.values[i] + p.values[i + 1]);
  const double slope = (p.values[k + 1] - p.values[k]) / g.h;
  return acc + p.values[k] * t + 0.5 * slope * t * t;
}

double harmonic_eval(const HarmonicPiece& p, double t) {
  return p.value + p.slope * t + p.amplitude * std::sin(p.frequency * t + p.phase);
}

double harmonic_deriv(const HarmonicPiece& p, double t) {
  return p.slope + p.amplitude * p.frequency * std::cos(p.frequency * t + p.phase);
}

double harmonic_antideriv(const HarmonicPiece& p, double t) {
  double sine_part = 0.0;
  if (p.frequency != 0.0) {
    sine_part = -p.amplitude / p.frequency *
                (std::cos(p.frequency * t + p.phase) - std::cos(p.phase));
  } else {
    sine_part = p.amplitude * std::sin(p.phase) * t;
  }
  return p.value * t + 0.5 * p.slope * t * t + sine_part;
}

std::vector<double> harmonic_critical_points(const HarmonicPiece& p, double len) {
  std::vector<double> out;
  const double aw = p.amplitude * p.frequency;
  if (aw == 0.0) return out;
  const double r = -p.slope / aw;
  if (std::abs(r) >= 1.0) return out;
  const double base = std::acos(r);
  const double w = p.frequency;
  // w t + phase = +-base + 2 pi m
  const double lo = std::min(p.phase, w * len + p.phase);
  const double hi = std::max(p.phase, w * len + p.phase);
  const auto m_lo = static_cast<long>(std::floor((lo - base) / (2.0 * M_PI))) - 1;
  const auto m_hi = static_cast<long>(std::ceil((hi + base) / (2.0 * M_PI))) + 1;
  for (long m = m_lo; m <= m_hi; ++m) {
    for (double sign : {1.0, -1.0}) {
      const double t = (sign * base + 2.0 * M_PI * static_cast<double>(m) - p.phase) / w;
      if (t > 0.0 && t < len) out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void validate_piece(const Piece& piece, std::size_t i) {
  const double from = piece_from(piece), to = piece_to(piece);
  if (!std::isfinite(from) || !std::isfinite(to) || !(to > from)) {
    throw DomainError("piece " + idx(i) + ": requires from < to");
  }
  if (const auto* sp = std::get_if<SampledPiece>(&piece)) {
    if (sp->values.size() < 2) throw DomainError("piece " + idx(i) + ": needs >= 2 samples");
    for (double v : sp->values)
      if (!std::isfinite(v)) throw DomainError("piece " + idx(i) + ": non-finite sample");
  } else if (const auto* pp = std::get_if<PolynomialPiece>(&piece)) {
    for (double c : pp->coeffs)
      if (!std::isfinite(c)) throw DomainError("piece " + idx(i) + ": non-finite coefficient");
  } else {
    const auto& hp = std::get<HarmonicPiece>(piece);
    for (double c : {hp.value, hp.slope, hp.amplitude, hp.frequency, hp.phase})
      if (!std::isfinite(c)) throw DomainError("piece " + idx(i) + ": non-finite parameter");
  }
}

}  // namespace

double piece_from(const Piece& p) {
  return std::visit([](const auto& x) { return x.from; }, p);
}

double piece_to(const Piece& p) {
  return std::visit([](const auto& x) { return x.to; }, p);
}

double piece_value(const Piece& piece, double s) {
  if (const auto* p = std::get_if<PolynomialPiece>(&piece)) return poly_eval(p->coeffs, s - p->from);
  if (const auto* p = std::get_if<SampledPiece>(&piece)) {
    const auto [k, t] = sampled_locate(*p, s);
    const double h = sampled_geometry(*p).h;
    return p->values[k] + (p->values[k + 1] - p->values[k]) * (t / h);
  }
  const auto& hp = std::get<HarmonicPiece>(piece);
  return harmonic_eval(hp, s - hp.from);
}

double piece_derivative(const Piece& piece, double s) {
  if (const auto* p = std::get_if<PolynomialPiece>(&piece)) return poly_deriv(p->coeffs, s - p->from);
  if (const auto* p = std::get_if<SampledPiece>(&piece)) {
    const auto [k, t] = sampled_locate(*p, s);
    (void)t;
    return (p->values[k + 1] - p->values[k]) / sampled_geometry(*p).h;
  }
  const auto& hp = std::get<HarmonicPiece>(piece);
  return harmonic_deriv(hp, s - hp.from);
}

double piece_integral(const Piece& piece, double a, double b) {
  if (const auto* p = std::get_if<PolynomialPiece>(&piece))
    return poly_antideriv(p->coeffs, b - p->from) - poly_antideriv(p->coeffs, a - p->from);
  if (const auto* p = std::get_if<SampledPiece>(&piece))
    return sampled_antideriv(*p, b) - sampled_antideriv(*p, a);
  const auto& hp = std::get<HarmonicPiece>(piece);
  return harmonic_antideriv(hp, b - hp.from) - harmonic_antideriv(hp, a - hp.from);
}

double piece_variation(const Piece& piece) {
  const double from = piece_from(piece), to = piece_to(piece), len = to - from;
  if (const auto* p = std::get_if<SampledPiece>(&piece)) {
    double tv = 0.0;
    for (std::size_t i = 0; i + 1 < p->values.size(); ++i)
      tv += std::abs(p->values[i + 1] - p->values[i]);
    return tv;
  }
  std::vector<double> cuts{0.0};
  if (const auto* p = std::get_if<PolynomialPiece>(&piece)) {
    for (double r : poly_critical_points(p->coeffs, len)) cuts.push_back(r);
  } else {
    for (double r : harmonic_critical_points(std::get<HarmonicPiece>(piece), len)) cuts.push_back(r);
  }
  cuts.push_back(len);
  double tv = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    tv += std::abs(piece_value(piece, from + cuts[i + 1]) - piece_value(piece, from + cuts[i]));
  return tv;
}

double piece_min_derivative(const Piece& piece) {
  const double from = piece_from(piece), len = piece_to(piece) - from;
  if (const auto* p = std::get_if<SampledPiece>(&piece)) {
    const double h = sampled_geometry(*p).h;
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < p->values.size(); ++i)
      lo = std::min(lo, (p->values[i + 1] - p->values[i]) / h);
    return lo;
  }
  if (const auto* p = std::get_if<PolynomialPiece>(&piece)) {
    // u' is at most quadratic: check the endpoints and the vertex.
    const auto& c = p->coeffs;
    double lo = std::min(poly_deriv(c, 0.0), poly_deriv(c, len));
    if (c[3] != 0.0) {
      const double t = -c[2] / (3.0 * c[3]);
      if (t > 0.0 && t < len) lo = std::min(lo, poly_deriv(c, t));
    }
    return lo;
  }
  const auto& hp = std::get<HarmonicPiece>(piece);
  const double aw = std::abs(hp.amplitude * hp.frequency);
  // cos reaches -1 inside the piece when the phase range covers an odd multiple of pi.
  const double lo_phase = std::min(hp.phase, hp.frequency * len + hp.phase);
  const double hi_phase = std::max(hp.phase, hp.frequency * len + hp.phase);
  double lo = std::min(harmonic_deriv(hp, 0.0), harmonic_deriv(hp, len));
  const double k = std::ceil((lo_phase - M_PI) / (2.0 * M_PI));
  if (M_PI + 2.0 * M_PI * k <= hi_phase) lo = std::min(lo, hp.slope - aw);
  return lo;
}

BVScalar::BVScalar(double length, std::vector<Piece> pieces, std::vector<Jump> jumps,
                   bool monotone)
    : length_(length), pieces_(std::move(pieces)), jumps_(std::move(jumps)), monotone_(monotone) {
  if (!(length_ > 0.0) || !std::isfinite(length_)) throw DomainError("BVScalar: length must be > 0");
  if (pieces_.empty()) throw DomainError("BVScalar: at least one piece is required");
  const double tol = 1e-12 * std::max(1.0, length_);
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    validate_piece(pieces_[i], i);
    const double expected_from = i == 0 ? 0.0 : piece_to(pieces_[i - 1]);
    if (std::abs(piece_from(pieces_[i]) - expected_from) > tol) {
      throw DomainError("piece " + idx(i) + ": starts at " + std::to_string(piece_from(pieces_[i])) +
                        ", expected " + std::to_string(expected_from));
    }
    if (i > 0) {
      const double left = piece_value(pieces_[i - 1], piece_to(pieces_[i - 1]));
      const double right = piece_value(pieces_[i], piece_from(pieces_[i]));
      if (std::abs(left - right) > 1e-9 * std::max(1.0, std::abs(left))) {
        throw DomainError("piece " + idx(i) + ": continuous part is discontinuous at s = " +
                          std::to_string(piece_from(pieces_[i])) +
                          " (declare the discontinuity as a jump)");
      }
    }
  }
  if (std::abs(piece_to(pieces_.back()) - length_) > tol) {
    throw DomainError("BVScalar: pieces end at " + std::to_string(piece_to(pieces_.back())) +
                      ", expected the domain length " + std::to_string(length_));
  }
  for (std::size_t k = 0; k < jumps_.size(); ++k) {
    const Jump& j = jumps_[k];
    if (!std::isfinite(j.at) || !(j.at > 0.0 && j.at < length_))
      throw DomainError("jump " + idx(k) + ": location must lie in (0, L)");
    if (!std::isfinite(j.value) || j.value == 0.0)
      throw DomainError("jump " + idx(k) + ": value must be finite and non-zero");
    if (k > 0 && !(j.at > jumps_[k - 1].at))
      throw DomainError("jump " + idx(k) + ": locations must be strictly increasing");
  }
  if (monotone_ && !strictly_increasing())
    throw DomainError("BVScalar: declared monotone but not strictly increasing");

  piece_integrals_.resize(pieces_.size() + 1, 0.0);
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    piece_integrals_[i + 1] =
        piece_integrals_[i] + piece_integral(pieces_[i], piece_from(pieces_[i]), piece_to(pieces_[i]));
  }
}

BVScalar BVScalar::constant(double length, double value) {
  return BVScalar(length, {PolynomialPiece::affine(0.0, length, value, 0.0)});
}

BVScalar BVScalar::affine(double length, double value_at_zero, double slope, std::vector<Jump> jumps) {
  return BVScalar(length, {PolynomialPiece::affine(0.0, length, value_at_zero, slope)}, std::move(jumps));
}

std::size_t BVScalar::piece_index(double s) const {
  // First piece whose end is >= s.
  std::size_t lo = 0, hi = pieces_.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (piece_to(pieces_[mid]) < s) lo = mid + 1;
    else hi = mid;
  }
  return lo;
}

double BVScalar::continuous_value(double s) const {
  s = std::clamp(s, 0.0, length_);
  return piece_value(pieces_[piece_index(s)], s);
}

double BVScalar::continuous_derivative(double s) const {
  s = std::clamp(s, 0.0, length_);
  return piece_derivative(pieces_[piece_index(s)], s);
}

double BVScalar::jump_sum(double s, bool inclusive) const {
  double acc = 0.0;
  for (const Jump& j : jumps_) {
    if (j.at < s || (inclusive && j.at == s)) acc += j.value;
    else break;
  }
  return acc;
}

OneSidedLimits BVScalar::one_sided_limits(double s) const {
  if (s <= 0.0) {
    const double v = continuous_value(0.0);
    return {v, v, v};
  }
  if (s >= length_) {
    const double v = continuous_value(length_) + jump_sum(length_, false);
    return {v, v, v};
  }
  const double c = continuous_value(s);
  const double left = c + jump_sum(s, false);
  const double right = c + jump_sum(s, true);
  return {left, right, 0.5 * (left + right)};
}

double BVScalar::ac_variation() const {
  double tv = 0.0;
  for (const Piece& p : pieces_) tv += piece_variation(p);
  return tv;
}

double BVScalar::jump_variation() const {
  double tv = 0.0;
  for (const Jump& j : jumps_) tv += std::abs(j.value);
  return tv;
}

bool BVScalar::strictly_increasing() const {
  for (const Piece& p : pieces_)
    if (!(piece_min_derivative(p) >= 1e-12)) return false;
  for (const Jump& j : jumps_)
    if (!(j.value > 0.0)) return false;
  return true;
}

bool BVScalar::piecewise_polynomial() const {
  return std::all_of(pieces_.begin(), pieces_.end(),
                     [](const Piece& p) { return std::holds_alternative<PolynomialPiece>(p); });
}

int BVScalar::polynomial_degree() const {
  if (!piecewise_polynomial()) return -1;
  int degree = 0;
  for (const Piece& p : pieces_) {
    const auto& c = std::get<PolynomialPiece>(p).coeffs;
    for (int k = 3; k > degree; --k) {
      if (c[static_cast<std::size_t>(k)] != 0.0) {
        degree = k;
        break;
      }
    }
  }
  return degree;
}

double BVScalar::antiderivative(double s) const {
  const std::size_t i = piece_index(s);
  double acc = piece_integrals_[i] + piece_integral(pieces_[i], piece_from(pieces_[i]), s);
  for (const Jump& j : jumps_) {
    if (j.at < s) acc += j.value * (s - j.at);
    else break;
  }
  return acc;
}

double BVScalar::integral(double a, double b) const {
  if (b < a) return -integral(b, a);
  const double u0 = one_sided_limits(0.0).right;
  const double uL = one_sided_limits(length_).left;
  double acc = 0.0;
  if (a < 0.0) {
    acc += u0 * (std::min(b, 0.0) - a);
    a = 0.0;
  }
  if (b > length_) {
    acc += uL * (b - std::max(a, length_));
    b = length_;
  }
  if (b > a) acc += antiderivative(b) - antiderivative(a);
  return acc;
}

std::vector<double> BVScalar::knots() const {
  std::vector<double> out;
  out.reserve(pieces_.size() + 1 + jumps_.size());
  out.push_back(0.0);
  for (const Piece& p : pieces_) out.push_back(piece_to(p));
  out.back() = length_;
  for (const Jump& j : jumps_) out.push_back(j.at);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BVScalar BVScalar::with_jumps(std::vector<Jump> jumps) const {
  return BVScalar(length_, pieces_, std::move(jumps), monotone_);
}

DerivativeDecomposition decompose(const BVScalar& u, int samples) {
  if (samples < 1) throw DomainError("decompose: samples must be >= 1");
  DerivativeDecomposition out;
  const double len = u.length();
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(samples) + 1);
  for (int i = 0; i <= samples; ++i) grid.push_back(len * i / samples);
  for (double k : u.knots()) grid.push_back(k);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  out.ac_density.reserve(grid.size());
  for (double s : grid) out.ac_density.push_back(u.continuous_derivative(s));
  out.grid = std::move(grid);
  out.jump_atoms = u.jumps();
  out.ac_mass = u.ac_variation();
  out.jump_mass = u.jump_variation();
  return out;
}

OneSidedLimits one_sided_limits(const BVScalar& u, double s) { return u.one_sided_limits(s); }

double total_variation(const BVScalar& u) { return u.ac_variation() + u.jump_variation(); }

}  // namespace frenetbv
