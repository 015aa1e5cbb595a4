#include <algorithm>
#include <cmath>
#include <random>

#include "frenetbv/error.hpp"
#include "frenetbv/scenario.hpp"

namespace frenetbv {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

BVScalar affine(double length, double value, double slope, std::vector<Jump> jumps = {}) {
  return BVScalar(length, {PolynomialPiece::affine(0.0, length, value, slope)}, std::move(jumps));
}

Scenario case_study(double d, double tau) {
  Scenario sc;
  sc.name = "case-study";
  std::vector<Jump> dj, tj;
  if (d != 0.0) dj.push_back({1.0, d});
  if (tau != 0.0) tj.push_back({1.0, tau});
  // theta(s) = s - 1 on (0, 2), i.e. the centred problem shifted by one.
  sc.omega = SkewPath::frenet(affine(2.0, -1.0, 1.0, dj), affine(2.0, 0.0, 0.0, tj));
  sc.initial = case_study_initial_frame(d, tau);
  sc.outputs.convergence = true;
  return sc;
}

Scenario planar_jump(double d) {
  Scenario sc;
  sc.name = "planar-jump";
  sc.omega = SkewPath::planar(affine(2.0, -1.0, 1.0, {{1.0, d}}));
  return sc;
}

Scenario helix() {
  Scenario sc;
  sc.name = "helix";
  const double len = 4.0 * M_PI;
  sc.omega = SkewPath::frenet(affine(len, 0.0, 1.0), affine(len, 0.0, 0.5));
  return sc;
}

Scenario circle_2d() {
  Scenario sc;
  sc.name = "circle-2d";
  sc.omega = SkewPath::planar(affine(kTwoPi, 0.0, 1.0));
  return sc;
}

Scenario smooth_2d() {
  Scenario sc;
  sc.name = "smooth-2d";
  sc.omega = SkewPath::planar(BVScalar(kTwoPi, {HarmonicPiece{0.0, kTwoPi, 0.0, 1.0, 0.25, 1.0, 0.0}}));
  return sc;
}

Scenario three_jumps() {
  Scenario sc;
  sc.name = "three-jumps";
  const double len = 3.0;
  sc.omega = SkewPath::frenet(affine(len, 0.0, 1.0, {{0.75, 0.5}, {2.25, 0.3}}),
                              affine(len, 0.0, 0.2, {{1.5, 0.5}, {2.25, 0.4}}));
  return sc;
}

Scenario geometric_jumps() {
  Scenario sc;
  sc.name = "geometric-jumps";
  sc.omega = SkewPath::frenet(affine(2.0, 0.0, 1.0), affine(2.0, 0.0, 0.25));
  sc.tail = GeometricJumpTail{1.0, 0.5, 0.8};
  sc.outputs.convergence = true;
  return sc;
}

// Uniform double in [lo, hi) from the top 53 bits, independent of the
// standard library's distribution implementation.
double uniform(std::mt19937_64& gen, double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

Scenario random_jumps(unsigned seed) {
  std::mt19937_64 gen(seed);
  Scenario sc;
  sc.name = "random-jumps";
  const double len = 2.0;
  const int count = 1 + static_cast<int>(gen() % 5);
  std::vector<Jump> dj, tj;
  // Locations on a coarse lattice keep them distinct and away from the ends.
  std::vector<int> slots;
  for (int i = 1; i < 20; ++i) slots.push_back(i);
  std::shuffle(slots.begin(), slots.end(), gen);
  slots.resize(static_cast<std::size_t>(count));
  std::sort(slots.begin(), slots.end());
  for (int slot : slots) {
    const double at = len * slot / 20.0;
    dj.push_back({at, uniform(gen, 0.05, 1.5)});
    const double tau = uniform(gen, -1.5, 1.5);
    if (tau != 0.0) tj.push_back({at, tau});
  }
  const double k = uniform(gen, 0.5, 1.5);
  const double t = uniform(gen, -0.5, 0.5);
  sc.omega = SkewPath::frenet(affine(len, 0.0, k, dj), affine(len, 0.0, t, tj));
  return sc;
}

}  // namespace

RotationMatrix case_study_left_limit(double d, double tau) {
  const double beta = std::hypot(d, tau);
  if (beta == 0.0) return RotationMatrix::identity(3);
  return rodrigues_exp(AxisAngle(Vector3(tau / beta, 0.0, d / beta), -0.5 * beta));
}

RotationMatrix case_study_right_limit(double d, double tau) {
  const double beta = std::hypot(d, tau);
  if (beta == 0.0) return RotationMatrix::identity(3);
  return rodrigues_exp(AxisAngle(Vector3(tau / beta, 0.0, d / beta), 0.5 * beta));
}

RotationMatrix case_study_initial_frame(double d, double tau) {
  // On (0, 1) the frame turns by exp(J_3); undo one unit of it.
  return case_study_left_limit(d, tau) * rodrigues_exp(AxisAngle(Vector3::UnitZ(), -1.0));
}

std::vector<std::string> builtin_names() {
  return {"case-study", "planar-jump",  "helix",           "circle-2d",
          "smooth-2d",  "three-jumps",  "geometric-jumps", "random-jumps"};
}

Scenario make_builtin(const std::string& name, const BuiltinParams& params) {
  if (name == "case-study") return case_study(params.d.value_or(1.0), params.tau.value_or(1.0));
  if (name == "planar-jump") return planar_jump(params.d.value_or(1.0));
  if (name == "helix") return helix();
  if (name == "circle-2d") return circle_2d();
  if (name == "smooth-2d") return smooth_2d();
  if (name == "three-jumps") return three_jumps();
  if (name == "geometric-jumps") return geometric_jumps();
  if (name == "random-jumps") return random_jumps(params.seed.value_or(1));
  std::string known;
  for (const auto& n : builtin_names()) known += (known.empty() ? "" : ", ") + n;
  throw DomainError("unknown built-in scenario '" + name + "' (known: " + known + ")");
}

}  // namespace frenetbv
