#pragma once

// Output formats. Every writer renders to a string first; write_atomic puts it
// in place through a temporary file and a rename.
//
//   frames.csv       s,g11,g12,g13,g21,g22,g23,g31,g32,g33,jump
//                    jump is 0 (regular), 1 (left limit) or 2 (right limit);
//                    planar frames are embedded with g33 = 1.
//   curve.csv        s,x,y,z
//   curve.obj        one 'v' line per sample and a single 'l' polyline
//   summary.json     solver, invariants, jump records, diagnostics
//   convergence.csv  study,parameter,frechet,tc,tat,discarded_mass
//
// Numbers use the shortest round-trip representation, so the same input
// always produces the same bytes.

#include <string>
#include <vector>

#include "frenetbv/run.hpp"
#include "frenetbv/scenario.hpp"

namespace frenetbv {

std::string frames_csv(const FramePath& path);
std::string curve_csv(const Curve& curve);
std::string curve_obj(const Curve& curve, const std::string& name);
std::string summary_json(const Scenario& scenario, const SolveResult& result);
std::string oracle_json(const Scenario& scenario, const OracleResult& result);
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);
std::string validation_json(const Scenario& scenario, const ValidationResult& result);

// Rebuilds a three-dimensional frame path from frames.csv. Jump records are
// recovered from the one-sided frames. Throws ParseError on malformed rows.
FramePath parse_frames_csv(const std::string& text);

// Writes `content` to `path` via `path`.tmp and a rename. Throws Error on I/O
// failure.
void write_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace frenetbv
