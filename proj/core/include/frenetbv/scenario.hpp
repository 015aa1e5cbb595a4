#pragma once

// Scenario description shared by the CLI and the test suites, the YAML
// scenario loader and the built-in scenarios.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frenetbv/skewpath.hpp"
#include "frenetbv/solver.hpp"

namespace frenetbv {

struct OutputRequest {
  bool frames = true;
  bool curve = true;
  bool summary = true;
  bool convergence = false;
};

struct Scenario {
  std::string name;
  std::optional<SkewPath> omega;
  std::optional<GeometricJumpTail> tail;  // dimension 3 only
  std::optional<RotationMatrix> initial;  // identity when unset
  SolverConfig solver;
  int polygon_segments = 4096;
  int truncation_levels = 12;
  OutputRequest outputs;

  const SkewPath& datum() const;
  RotationMatrix initial_frame() const;
  bool has_tail() const noexcept { return tail.has_value(); }
  CountableSkewPath countable() const;
};

// Throws ParseError (with the 1-based line and the offending field) on
// malformed input or invalid data.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

struct BuiltinParams {
  std::optional<double> d;
  std::optional<double> tau;
  std::optional<unsigned> seed;
};

// Names accepted by make_builtin.
std::vector<std::string> builtin_names();

// Throws DomainError for an unknown name.
Scenario make_builtin(const std::string& name, const BuiltinParams& params = {});

// Initial frame that places the left limit of the case-study jump at
// s = 1 on the closed form G(0-) of the centred problem.
RotationMatrix case_study_initial_frame(double d, double tau);

// G(0-) and G(0+) of the centred case study: rotations by -/+ beta / 2 about
// (tau, 0, d) / beta, beta = sqrt(d^2 + tau^2).
RotationMatrix case_study_left_limit(double d, double tau);
RotationMatrix case_study_right_limit(double d, double tau);

}  // namespace frenetbv
