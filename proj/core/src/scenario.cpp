#include "frenetbv/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "frenetbv/error.hpp"

namespace frenetbv {

namespace {

int line_of(const YAML::Node& node) { return node.Mark().line >= 0 ? node.Mark().line + 1 : 0; }

[[noreturn]] void fail(const YAML::Node& node, const std::string& field, const std::string& message) {
  throw ParseError(message, line_of(node), field);
}

template <typename T>
T read(const YAML::Node& node, const std::string& field) {
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    fail(node, field, "expected a value of the right type");
  }
}

template <typename T>
T read_or(const YAML::Node& map, const std::string& key, const std::string& prefix, T fallback) {
  const YAML::Node node = map[key];
  if (!node) return fallback;
  return read<T>(node, prefix + key);
}

double require_number(const YAML::Node& map, const std::string& key, const std::string& prefix) {
  const YAML::Node node = map[key];
  if (!node) fail(map, prefix + key, "missing required field");
  return read<double>(node, prefix + key);
}

void reject_unknown(const YAML::Node& map, const std::vector<std::string>& allowed, const std::string& prefix) {
  for (const auto& kv : map) {
    const auto key = kv.first.as<std::string>();
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      fail(kv.first, prefix + key, "unknown field");
  }
}

Piece parse_piece(const YAML::Node& node, const std::string& field) {
  if (!node.IsMap()) fail(node, field, "a piece must be a mapping");
  const auto type = read_or<std::string>(node, "type", field + ".", "affine");
  const double from = require_number(node, "from", field + ".");
  const double to = require_number(node, "to", field + ".");
  if (type == "affine") {
    reject_unknown(node, {"type", "from", "to", "value", "slope"}, field + ".");
    return PolynomialPiece::affine(from, to, read_or<double>(node, "value", field + ".", 0.0),
                                   read_or<double>(node, "slope", field + ".", 0.0));
  }
  if (type == "cubic") {
    reject_unknown(node, {"type", "from", "to", "coeffs"}, field + ".");
    const YAML::Node c = node["coeffs"];
    if (!c || !c.IsSequence() || c.size() == 0 || c.size() > 4)
      fail(c ? c : node, field + ".coeffs", "expected a list of 1 to 4 coefficients");
    PolynomialPiece p{from, to, {}};
    for (std::size_t i = 0; i < c.size(); ++i) p.coeffs[i] = read<double>(c[i], field + ".coeffs");
    return p;
  }
  if (type == "samples") {
    reject_unknown(node, {"type", "from", "to", "values"}, field + ".");
    const YAML::Node v = node["values"];
    if (!v || !v.IsSequence() || v.size() < 2)
      fail(v ? v : node, field + ".values", "expected at least two samples");
    SampledPiece p{from, to, {}};
    for (const auto& x : v) p.values.push_back(read<double>(x, field + ".values"));
    return p;
  }
  if (type == "harmonic") {
    reject_unknown(node, {"type", "from", "to", "value", "slope", "amplitude", "frequency", "phase"},
                   field + ".");
    const std::string pre = field + ".";
    return HarmonicPiece{from,
                         to,
                         read_or<double>(node, "value", pre, 0.0),
                         read_or<double>(node, "slope", pre, 0.0),
                         read_or<double>(node, "amplitude", pre, 0.0),
                         read_or<double>(node, "frequency", pre, 1.0),
                         read_or<double>(node, "phase", pre, 0.0)};
  }
  fail(node["type"], field + ".type", "unknown piece type '" + type + "' (affine, cubic, samples, harmonic)");
}

std::vector<Piece> parse_pieces(const YAML::Node& root, const std::string& key, double length) {
  const YAML::Node node = root[key];
  if (!node) return {PolynomialPiece::affine(0.0, length, 0.0, 0.0)};
  if (!node.IsMap()) fail(node, key, "expected a mapping with a 'pieces' list");
  reject_unknown(node, {"pieces"}, key + ".");
  const YAML::Node list = node["pieces"];
  if (!list || !list.IsSequence() || list.size() == 0) fail(list ? list : node, key + ".pieces", "expected a non-empty list");
  std::vector<Piece> out;
  for (std::size_t i = 0; i < list.size(); ++i)
    out.push_back(parse_piece(list[i], key + ".pieces[" + std::to_string(i) + "]"));
  return out;
}

Matrix parse_matrix(const YAML::Node& node, int n) {
  if (node.IsScalar() && node.as<std::string>() == "identity") return Matrix::Identity(n, n);
  if (!node.IsSequence() || static_cast<int>(node.size()) != n)
    fail(node, "initial_frame", "expected 'identity' or a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  Matrix m(n, n);
  for (int r = 0; r < n; ++r) {
    const YAML::Node row = node[static_cast<std::size_t>(r)];
    if (!row.IsSequence() || static_cast<int>(row.size()) != n) fail(row, "initial_frame", "row has the wrong length");
    for (int c = 0; c < n; ++c) m(r, c) = read<double>(row[static_cast<std::size_t>(c)], "initial_frame");
  }
  return m;
}

void parse_solver(const YAML::Node& node, SolverConfig& cfg) {
  if (!node) return;
  if (!node.IsMap()) fail(node, "solver", "expected a mapping");
  reject_unknown(node, {"grid", "max_increment", "eps", "oracle_substeps", "mollifier", "orthogonality_tol"},
                 "solver.");
  cfg.grid = read_or<int>(node, "grid", "solver.", cfg.grid);
  cfg.max_increment = read_or<double>(node, "max_increment", "solver.", cfg.max_increment);
  cfg.oracle_substeps = read_or<int>(node, "oracle_substeps", "solver.", cfg.oracle_substeps);
  cfg.orthogonality_tol = read_or<double>(node, "orthogonality_tol", "solver.", cfg.orthogonality_tol);
  if (const YAML::Node eps = node["eps"]) {
    if (!eps.IsSequence()) fail(eps, "solver.eps", "expected a list");
    cfg.eps_ladder.clear();
    for (const auto& e : eps) cfg.eps_ladder.push_back(read<double>(e, "solver.eps"));
  }
  if (const YAML::Node m = node["mollifier"]) {
    const auto kind = read<std::string>(m, "solver.mollifier");
    if (kind == "box") cfg.mollifier = MollifierKind::Box;
    else if (kind == "bump") cfg.mollifier = MollifierKind::Bump;
    else fail(m, "solver.mollifier", "expected 'box' or 'bump'");
  }
  try {
    cfg.validate();
  } catch (const DomainError& e) {
    fail(node, "solver", e.what());
  }
}

void parse_outputs(const YAML::Node& node, OutputRequest& out) {
  if (!node) return;
  if (!node.IsSequence()) fail(node, "outputs", "expected a list");
  out = {false, false, false, false};
  for (const auto& item : node) {
    const auto name = read<std::string>(item, "outputs");
    if (name == "frames") out.frames = true;
    else if (name == "curve") out.curve = true;
    else if (name == "summary") out.summary = true;
    else if (name == "convergence") out.convergence = true;
    else fail(item, "outputs", "unknown output '" + name + "' (frames, curve, summary, convergence)");
  }
}

Scenario build(const YAML::Node& root) {
  if (!root.IsMap()) fail(root, "", "a scenario must be a mapping");
  reject_unknown(root,
                 {"name", "length", "dimension", "theta", "phi", "jumps", "tail", "initial_frame", "solver",
                  "polygon_segments", "truncation_levels", "outputs"},
                 "");
  Scenario sc;
  sc.name = read_or<std::string>(root, "name", "", "scenario");
  const double length = require_number(root, "length", "");
  if (!(length > 0.0)) fail(root["length"], "length", "must be positive");
  const int dim = read_or<int>(root, "dimension", "", 3);
  if (dim != 2 && dim != 3) fail(root["dimension"], "dimension", "must be 2 or 3");
  if (dim == 2 && root["phi"]) fail(root["phi"], "phi", "planar scenarios have no phi");

  std::vector<Jump> theta_jumps, phi_jumps;
  if (const YAML::Node jumps = root["jumps"]) {
    if (!jumps.IsSequence()) fail(jumps, "jumps", "expected a list of {at, d, tau}");
    for (std::size_t i = 0; i < jumps.size(); ++i) {
      const std::string field = "jumps[" + std::to_string(i) + "]";
      const YAML::Node j = jumps[i];
      if (!j.IsMap()) fail(j, field, "expected a mapping");
      reject_unknown(j, {"at", "d", "tau"}, field + ".");
      const double at = require_number(j, "at", field + ".");
      const double d = read_or<double>(j, "d", field + ".", 0.0);
      const double tau = read_or<double>(j, "tau", field + ".", 0.0);
      if (dim == 2 && tau != 0.0) fail(j, field + ".tau", "planar scenarios cannot have torsion jumps");
      if (d != 0.0) theta_jumps.push_back({at, d});
      if (tau != 0.0) phi_jumps.push_back({at, tau});
    }
  }
  try {
    BVScalar theta(length, parse_pieces(root, "theta", length), theta_jumps);
    if (dim == 2) {
      sc.omega = SkewPath::planar(std::move(theta));
    } else {
      BVScalar phi(length, parse_pieces(root, "phi", length), phi_jumps);
      sc.omega = SkewPath::frenet(std::move(theta), std::move(phi));
    }
  } catch (const DomainError& e) {
    fail(root["jumps"] ? root["jumps"] : root, "theta/phi/jumps", e.what());
  }

  if (const YAML::Node tail = root["tail"]) {
    if (dim != 3) fail(tail, "tail", "a jump tail needs dimension 3");
    reject_unknown(tail, {"d_scale", "tau_scale", "ratio"}, "tail.");
    GeometricJumpTail t;
    t.d_scale = read_or<double>(tail, "d_scale", "tail.", t.d_scale);
    t.tau_scale = read_or<double>(tail, "tau_scale", "tail.", t.tau_scale);
    t.ratio = read_or<double>(tail, "ratio", "tail.", t.ratio);
    sc.tail = t;
    try {
      (void)sc.countable();
    } catch (const DomainError& e) {
      fail(tail, "tail", e.what());
    }
  }
  if (const YAML::Node init = root["initial_frame"]) {
    try {
      sc.initial = RotationMatrix(parse_matrix(init, dim));
    } catch (const NumericalError& e) {
      fail(init, "initial_frame", e.what());
    }
  }
  parse_solver(root["solver"], sc.solver);
  sc.polygon_segments = read_or<int>(root, "polygon_segments", "", sc.polygon_segments);
  if (sc.polygon_segments < 3) fail(root["polygon_segments"], "polygon_segments", "must be >= 3");
  sc.truncation_levels = read_or<int>(root, "truncation_levels", "", sc.truncation_levels);
  if (sc.truncation_levels < 1) fail(root["truncation_levels"], "truncation_levels", "must be >= 1");
  parse_outputs(root["outputs"], sc.outputs);
  return sc;
}

}  // namespace

const SkewPath& Scenario::datum() const {
  if (!omega) throw DomainError("scenario '" + name + "' has no datum");
  return *omega;
}

RotationMatrix Scenario::initial_frame() const {
  return initial ? *initial : RotationMatrix::identity(datum().dim());
}

CountableSkewPath Scenario::countable() const { return CountableSkewPath(datum(), tail); }

Scenario parse_scenario(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw ParseError(e.msg, e.mark.line >= 0 ? e.mark.line + 1 : 0, "");
  }
  return build(root);
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file '" + path + "'", 0, "");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace frenetbv
