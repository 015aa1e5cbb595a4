#pragma once

// The Sk(n)-valued datum Omega(s). Entry (i, j) with i < j holds a BVScalar
// and entry (j, i) its negative. For n = 3 the Frenet datum is
//   Omega = -theta J_3 - phi J_1,
// which puts theta at (0, 1) and phi at (1, 2). For n = 2, Omega = theta Jhat.

#include <optional>
#include <string>
#include <vector>

#include "frenetbv/bvscalar.hpp"
#include "frenetbv/liegroup.hpp"

namespace frenetbv {

// Combined jump of (theta, phi) at one location.
struct JumpAtom {
  double at = 0.0;
  double d = 0.0;    // [theta](at)
  double tau = 0.0;  // [phi](at)

  // sqrt(d^2 + tau^2), the rotation angle of the jump.
  double magnitude() const;
  // |D^J Omega|({at}) = sqrt(2) * magnitude().
  double mass() const;
};

struct SkewEntry {
  int row = 0;
  int col = 1;  // row < col
  BVScalar value;
};

class SkewPath {
 public:
  static SkewPath frenet(BVScalar theta, BVScalar phi);
  static SkewPath planar(BVScalar theta);
  // Continuous data of any dimension >= 2. Entries not listed are zero. Throws
  // DomainError on duplicate or out-of-range entries, mismatched lengths, or
  // jumps when n is neither 2 nor 3.
  static SkewPath general(int n, std::vector<SkewEntry> entries);

  int dim() const noexcept { return n_; }
  double length() const noexcept { return length_; }
  const std::vector<SkewEntry>& entries() const noexcept { return entries_; }

  // theta is entry (0, 1); phi is entry (1, 2) or identically zero.
  const BVScalar& theta() const;
  BVScalar phi() const;

  // Continuous part of Omega at s (jumps removed).
  Matrix continuous_value(double s) const;
  // Precise representative of Omega at s.
  SkewMatrix value(double s) const;

  bool has_jumps() const;
  std::vector<JumpAtom> jumps() const;  // ordered by location
  double jump_mass() const;             // |D^J Omega|(I)
  std::vector<double> knots() const;

  // Same continuous part with the jump set replaced. Only for n = 2, 3.
  SkewPath with_jumps(const std::vector<JumpAtom>& atoms) const;
  SkewPath without_jumps() const;

  // Entrywise mollification; see mollify().
  SkewPath mollified(double eps, MollifierKind kind = MollifierKind::Box) const;

 private:
  SkewPath(int n, double length, std::vector<SkewEntry> entries);

  int n_;
  double length_;
  std::vector<SkewEntry> entries_;
};

// Keeps the jumps whose mass exceeds 1/n. Throws DomainError when n < 1.
SkewPath truncate_jumps(const SkewPath& omega, int n);

struct JumpViolation {
  double at = 0.0;
  double d = 0.0;
  double tau = 0.0;
  double magnitude = 0.0;
  std::string reason;
};

struct JumpValidationReport {
  std::vector<JumpViolation> violations;
  int jumps_checked = 0;
  bool ok() const noexcept { return violations.empty(); }
};

inline constexpr double kJumpAngleMargin = 1e-9;

// Checks 0 < sqrt(d^2 + tau^2) < pi - 1e-9 at every jump. Report only.
JumpValidationReport validate_jumps(const SkewPath& omega);

// Jumps d_k = d_scale r^k, tau_k = tau_scale r^k at s_k = L (1 - 2^-k),
// k = 1, 2, ...; 0 < r < 1 is required for summability.
struct GeometricJumpTail {
  double d_scale = 1.0;
  double tau_scale = 0.0;
  double ratio = 0.8;

  JumpAtom atom(int k, double length) const;
  // Total mass of the terms k >= first.
  double mass_from(int first) const;
};

// A datum with finitely many explicit jumps plus an optional geometric tail.
class CountableSkewPath {
 public:
  // Throws DomainError for n != 3, a ratio outside (0, 1), or a tail whose
  // first term is already too large to be admissible.
  CountableSkewPath(SkewPath base, std::optional<GeometricJumpTail> tail);

  const SkewPath& base() const noexcept { return base_; }
  const std::optional<GeometricJumpTail>& tail() const noexcept { return tail_; }

  double total_jump_mass() const;

  // Finite datum keeping every atom with mass > threshold, together with the
  // exact mass of the atoms left out.
  struct Truncation {
    SkewPath path;
    double discarded_mass = 0.0;
    int atoms_kept = 0;
  };
  Truncation truncate_by_mass(double threshold) const;
  // Base jumps plus the first `terms` tail terms.
  Truncation truncate_by_prefix(int terms) const;

 private:
  Truncation assemble(std::vector<JumpAtom> atoms, double discarded) const;

  SkewPath base_;
  std::optional<GeometricJumpTail> tail_;
};

}  // namespace frenetbv
