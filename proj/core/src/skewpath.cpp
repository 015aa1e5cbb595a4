#include "frenetbv/skewpath.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "frenetbv/error.hpp"

namespace frenetbv {

namespace {

const SkewEntry* find_entry(const std::vector<SkewEntry>& entries, int row, int col) {
  for (const auto& e : entries)
    if (e.row == row && e.col == col) return &e;
  return nullptr;
}

// Merges atoms sharing a location and drops the ones that cancel.
std::vector<JumpAtom> merge_atoms(std::vector<JumpAtom> atoms) {
  std::sort(atoms.begin(), atoms.end(),
            [](const JumpAtom& a, const JumpAtom& b) { return a.at < b.at; });
  std::vector<JumpAtom> out;
  for (const auto& a : atoms) {
    if (!out.empty() && out.back().at == a.at) {
      out.back().d += a.d;
      out.back().tau += a.tau;
    } else {
      out.push_back(a);
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const JumpAtom& a) { return a.d == 0.0 && a.tau == 0.0; }),
            out.end());
  return out;
}

}  // namespace

double JumpAtom::magnitude() const { return std::hypot(d, tau); }

double JumpAtom::mass() const { return std::sqrt(2.0) * magnitude(); }

SkewPath::SkewPath(int n, double length, std::vector<SkewEntry> entries)
    : n_(n), length_(length), entries_(std::move(entries)) {}

SkewPath SkewPath::frenet(BVScalar theta, BVScalar phi) {
  if (theta.length() != phi.length())
    throw DomainError("SkewPath: theta and phi must share the domain length");
  const double len = theta.length();
  std::vector<SkewEntry> entries;
  entries.push_back({0, 1, std::move(theta)});
  entries.push_back({1, 2, std::move(phi)});
  return SkewPath(3, len, std::move(entries));
}

SkewPath SkewPath::planar(BVScalar theta) {
  const double len = theta.length();
  std::vector<SkewEntry> entries;
  entries.push_back({0, 1, std::move(theta)});
  return SkewPath(2, len, std::move(entries));
}

SkewPath SkewPath::general(int n, std::vector<SkewEntry> entries) {
  if (n < 2) throw DomainError("SkewPath: dimension must be >= 2");
  if (entries.empty()) throw DomainError("SkewPath: at least one entry is required");
  const double len = entries.front().value.length();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (!(0 <= e.row && e.row < e.col && e.col < n))
      throw DomainError("SkewPath: entry (" + std::to_string(e.row) + ", " + std::to_string(e.col) +
                        ") is outside the strict upper triangle");
    if (e.value.length() != len) throw DomainError("SkewPath: entries must share the domain length");
    for (std::size_t j = 0; j < i; ++j)
      if (entries[j].row == e.row && entries[j].col == e.col)
        throw DomainError("SkewPath: duplicate entry (" + std::to_string(e.row) + ", " +
                          std::to_string(e.col) + ")");
    if (e.value.has_jumps()) {
      const bool frenet_slot = (n == 3 && ((e.row == 0 && e.col == 1) || (e.row == 1 && e.col == 2))) ||
                               (n == 2);
      if (!frenet_slot)
        throw DomainError("SkewPath: jumps are only defined for the theta/phi entries in dimension 2 or 3");
    }
  }
  return SkewPath(n, len, std::move(entries));
}

const BVScalar& SkewPath::theta() const {
  const SkewEntry* e = find_entry(entries_, 0, 1);
  if (!e) throw DomainError("SkewPath: no theta entry");
  return e->value;
}

BVScalar SkewPath::phi() const {
  const SkewEntry* e = n_ >= 3 ? find_entry(entries_, 1, 2) : nullptr;
  return e ? e->value : BVScalar::constant(length_, 0.0);
}

Matrix SkewPath::continuous_value(double s) const {
  Matrix m = Matrix::Zero(n_, n_);
  for (const auto& e : entries_) {
    const double v = e.value.continuous_value(s);
    m(e.row, e.col) = v;
    m(e.col, e.row) = -v;
  }
  return m;
}

SkewMatrix SkewPath::value(double s) const {
  Matrix m = Matrix::Zero(n_, n_);
  for (const auto& e : entries_) {
    const double v = e.value.value(s);
    m(e.row, e.col) = v;
    m(e.col, e.row) = -v;
  }
  return SkewMatrix(std::move(m));
}

bool SkewPath::has_jumps() const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [](const SkewEntry& e) { return e.value.has_jumps(); });
}

std::vector<JumpAtom> SkewPath::jumps() const {
  if (!has_jumps()) return {};
  std::vector<JumpAtom> atoms;
  for (const auto& j : theta().jumps()) atoms.push_back({j.at, j.value, 0.0});
  if (n_ == 3) {
    const BVScalar phi_entry = phi();
    for (const auto& j : phi_entry.jumps()) atoms.push_back({j.at, 0.0, j.value});
  }
  return merge_atoms(std::move(atoms));
}

double SkewPath::jump_mass() const {
  double m = 0.0;
  for (const auto& a : jumps()) m += a.mass();
  return m;
}

std::vector<double> SkewPath::knots() const {
  std::vector<double> out;
  for (const auto& e : entries_) {
    const auto k = e.value.knots();
    out.insert(out.end(), k.begin(), k.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SkewPath SkewPath::with_jumps(const std::vector<JumpAtom>& atoms) const {
  if (n_ != 2 && n_ != 3) throw DomainError("SkewPath: jumps are only defined in dimension 2 or 3");
  std::vector<Jump> theta_jumps, phi_jumps;
  for (const auto& a : merge_atoms(atoms)) {
    if (a.d != 0.0) theta_jumps.push_back({a.at, a.d});
    if (a.tau != 0.0) {
      if (n_ == 2) throw DomainError("SkewPath: planar data cannot carry torsion jumps");
      phi_jumps.push_back({a.at, a.tau});
    }
  }
  std::vector<SkewEntry> entries = entries_;
  for (auto& e : entries) {
    if (e.row == 0 && e.col == 1) e.value = e.value.with_jumps(theta_jumps);
    else if (e.row == 1 && e.col == 2) e.value = e.value.with_jumps(phi_jumps);
  }
  if (n_ == 3 && !phi_jumps.empty() && !find_entry(entries, 1, 2))
    entries.push_back({1, 2, BVScalar::constant(length_, 0.0).with_jumps(phi_jumps)});
  return SkewPath(n_, length_, std::move(entries));
}

SkewPath SkewPath::without_jumps() const {
  std::vector<SkewEntry> entries = entries_;
  for (auto& e : entries) e.value = e.value.without_jumps();
  return SkewPath(n_, length_, std::move(entries));
}

SkewPath SkewPath::mollified(double eps, MollifierKind kind) const {
  std::vector<SkewEntry> entries = entries_;
  for (auto& e : entries) e.value = mollify(e.value, eps, kind);
  return SkewPath(n_, length_, std::move(entries));
}

SkewPath truncate_jumps(const SkewPath& omega, int n) {
  if (n < 1) throw DomainError("truncate_jumps: n must be >= 1");
  std::vector<JumpAtom> kept;
  for (const auto& a : omega.jumps())
    if (a.mass() > 1.0 / n) kept.push_back(a);
  return omega.with_jumps(kept);
}

JumpValidationReport validate_jumps(const SkewPath& omega) {
  JumpValidationReport report;
  if (omega.dim() != 2 && omega.dim() != 3) {
    if (omega.has_jumps())
      report.violations.push_back({0.0, 0.0, 0.0, 0.0, "jumps are only defined in dimension 2 or 3"});
    return report;
  }
  for (const auto& a : omega.jumps()) {
    ++report.jumps_checked;
    const double m = a.magnitude();
    if (!(m > 0.0)) {
      report.violations.push_back({a.at, a.d, a.tau, m, "zero jump"});
    } else if (!(m < M_PI - kJumpAngleMargin)) {
      report.violations.push_back(
          {a.at, a.d, a.tau, m, "jump magnitude sqrt(d^2 + tau^2) is not below pi"});
    }
  }
  return report;
}

JumpAtom GeometricJumpTail::atom(int k, double length) const {
  const double w = std::pow(ratio, k);
  return {length * (1.0 - std::ldexp(1.0, -k)), d_scale * w, tau_scale * w};
}

double GeometricJumpTail::mass_from(int first) const {
  const double m0 = std::sqrt(2.0) * std::hypot(d_scale, tau_scale);
  return m0 * std::pow(ratio, first) / (1.0 - ratio);
}

CountableSkewPath::CountableSkewPath(SkewPath base, std::optional<GeometricJumpTail> tail)
    : base_(std::move(base)), tail_(tail) {
  if (base_.dim() != 3) throw DomainError("CountableSkewPath: requires dimension 3");
  if (tail_) {
    if (!(tail_->ratio > 0.0 && tail_->ratio < 1.0))
      throw DomainError("CountableSkewPath: tail ratio must lie in (0, 1) for a summable jump family");
    if (!(std::hypot(tail_->d_scale, tail_->tau_scale) > 0.0))
      throw DomainError("CountableSkewPath: tail scales are both zero");
    if (!(tail_->atom(1, base_.length()).magnitude() < M_PI - kJumpAngleMargin))
      throw DomainError("CountableSkewPath: first tail jump is not below pi");
  }
}

double CountableSkewPath::total_jump_mass() const {
  return base_.jump_mass() + (tail_ ? tail_->mass_from(1) : 0.0);
}

CountableSkewPath::Truncation CountableSkewPath::assemble(std::vector<JumpAtom> atoms,
                                                          double discarded) const {
  const int kept = static_cast<int>(atoms.size());
  return {base_.with_jumps(atoms), discarded, kept};
}

CountableSkewPath::Truncation CountableSkewPath::truncate_by_mass(double threshold) const {
  std::vector<JumpAtom> atoms;
  double discarded = 0.0;
  for (const auto& a : base_.jumps()) {
    if (a.mass() > threshold) atoms.push_back(a);
    else discarded += a.mass();
  }
  if (tail_) {
    // Tail masses decrease in k, so the kept terms form a prefix.
    int k = 1;
    while (tail_->atom(k, base_.length()).mass() > threshold) {
      atoms.push_back(tail_->atom(k, base_.length()));
      ++k;
    }
    discarded += tail_->mass_from(k);
  }
  return assemble(std::move(atoms), discarded);
}

CountableSkewPath::Truncation CountableSkewPath::truncate_by_prefix(int terms) const {
  if (terms < 0) throw DomainError("truncate_by_prefix: terms must be >= 0");
  std::vector<JumpAtom> atoms = base_.jumps();
  double discarded = 0.0;
  if (tail_) {
    for (int k = 1; k <= terms; ++k) atoms.push_back(tail_->atom(k, base_.length()));
    discarded = tail_->mass_from(terms + 1);
  }
  return assemble(std::move(atoms), discarded);
}

}  // namespace frenetbv
