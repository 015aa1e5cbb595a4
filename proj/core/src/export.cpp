#include "frenetbv/export.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "frenetbv/error.hpp"

namespace frenetbv {

namespace {

using nlohmann::json;

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json residual_json(const ResidualReport& r) {
  return {{"max", r.max_residual}, {"at", r.at}, {"max_at_jumps", r.max_jump_residual}, {"nodes", r.nodes}};
}

json jump_report_json(const JumpValidationReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"at", v.at}, {"d", v.d}, {"tau", v.tau}, {"magnitude", v.magnitude}, {"reason", v.reason}});
  return {{"ok", r.ok()}, {"checked", r.jumps_checked}, {"violations", std::move(violations)}};
}

json summary_fields(const GeomSummary& g) {
  json out = {{"length", g.length},
              {"tc_exact", g.tc_exact},
              {"tat_exact", g.tat_exact},
              {"diffuse_tc_mass", g.diffuse_tc_mass},
              {"diffuse_tat_mass", g.diffuse_tat_mass},
              {"jump_tc_sum", g.jump_tc_sum},
              {"jump_tat_sum", g.jump_tat_sum},
              {"projective_jump_tat_sum", g.projective_jump_tat_sum},
              {"tc_bound", g.tc_bound},
              {"tat_bound", g.tat_bound},
              {"bounds_hold", g.bounds_hold}};
  if (g.tc_polygonal) out["tc_polygonal"] = *g.tc_polygonal;
  if (g.tat_polygonal) out["tat_polygonal"] = *g.tat_polygonal;
  if (g.polygonal_length) out["polygonal_length"] = *g.polygonal_length;
  if (g.polygon_segments) out["polygon_segments"] = *g.polygon_segments;
  return out;
}

double csv_number(const std::string& cell, int line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(cell, &used);
    if (used != cell.size()) throw std::invalid_argument(cell);
    return v;
  } catch (const std::exception&) {
    throw ParseError("not a number: '" + cell + "'", line, "frames.csv");
  }
}

}  // namespace

std::string frames_csv(const FramePath& path) {
  std::string out = "s,g11,g12,g13,g21,g22,g23,g31,g32,g33,jump\n";
  for (std::size_t i = 0; i < path.size(); ++i) {
    Matrix g = Matrix::Identity(3, 3);
    const Matrix& f = path.frames()[i].matrix();
    const int n = std::min(3, path.dim());
    g.topLeftCorner(n, n) = f.topLeftCorner(n, n);
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", path.s()[i], g(0, 0), g(0, 1), g(0, 2), g(1, 0),
                       g(1, 1), g(1, 2), g(2, 0), g(2, 1), g(2, 2), static_cast<int>(path.kinds()[i]));
  }
  return out;
}

std::string curve_csv(const Curve& curve) {
  std::string out = "s,x,y,z\n";
  for (std::size_t i = 0; i < curve.s.size(); ++i) {
    const auto& p = curve.points[i];
    out += fmt::format("{},{},{},{}\n", curve.s[i], p.x(), p.y(), p.z());
  }
  return out;
}

std::string curve_obj(const Curve& curve, const std::string& name) {
  std::string out = fmt::format("o {}\n", name);
  for (const auto& p : curve.points) out += fmt::format("v {} {} {}\n", p.x(), p.y(), p.z());
  out += "l";
  for (std::size_t i = 1; i <= curve.points.size(); ++i) out += fmt::format(" {}", i);
  out += "\n";
  return out;
}

std::string summary_json(const Scenario& sc, const SolveResult& r) {
  json jumps = json::array();
  for (const auto& rec : r.path->jumps()) {
    json j = {{"at", rec.at},   {"d", rec.d},
              {"tau", rec.tau}, {"angle", rec.angle},
              {"left", matrix_json(rec.left.matrix())}, {"right", matrix_json(rec.right.matrix())}};
    if (r.path->dim() == 3) {
      const JumpAngles a = jump_angles(rec.d, rec.tau);
      j["angle_t"] = a.t;
      j["angle_n"] = a.n;
      j["angle_b"] = a.b;
      if (a.b_projective) j["angle_b_projective"] = *a.b_projective;
    } else {
      j["angle_t"] = std::abs(rec.d);
    }
    jumps.push_back(std::move(j));
  }
  json out = {{"scenario", sc.name},
              {"solver", r.solver},
              {"dimension", r.path->dim()},
              {"nodes", r.path->size()},
              {"summary", summary_fields(r.summary)},
              {"jumps", std::move(jumps)},
              {"jump_validation", jump_report_json(r.jump_report)},
              {"residual", residual_json(r.residual)},
              {"orthogonality_defect", r.path->max_orthogonality_defect()},
              {"tantrix", {{"spherical", r.tantrix.spherical}, {"euclidean", r.tantrix.euclidean}}}};
  if (r.polygon) {
    out["polygon"] = {{"segments", r.polygon->vertices.size() - 1},
                      {"modulus", r.polygon->modulus},
                      {"skipped_torsion", r.polygon->skipped_torsion}};
  }
  if (r.truncation) {
    json levels = json::array();
    for (const auto& l : r.truncation->levels) {
      json lv = {{"level", l.level}, {"atoms", l.atoms}, {"discarded_mass", l.discarded_mass},
                 {"added_mass", l.added_mass}};
      if (l.frechet_to_previous) lv["frechet_to_previous"] = *l.frechet_to_previous;
      levels.push_back(std::move(lv));
    }
    out["truncation"] = {{"total_jump_mass", r.truncation->total_jump_mass}, {"levels", std::move(levels)}};
  }
  return out.dump(2) + "\n";
}

std::string oracle_json(const Scenario& sc, const OracleResult& r) {
  json out = {{"scenario", sc.name},
              {"eps", r.eps},
              {"nodes", r.path->size()},
              {"tc", r.tc},
              {"tat", r.tat},
              {"residual", residual_json(r.residual)},
              {"orthogonality_defect", r.path->max_orthogonality_defect()}};
  return out.dump(2) + "\n";
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::string out = "study,parameter,frechet,tc,tat,discarded_mass\n";
  for (const auto& r : rows)
    out += fmt::format("{},{},{},{},{},{}\n", r.study, r.parameter, r.frechet, r.tc, r.tat, r.discarded_mass);
  return out;
}

std::string validation_json(const Scenario& sc, const ValidationResult& r) {
  json out = {{"scenario", sc.name}, {"jump_validation", jump_report_json(r.jumps)}};
  if (r.residual) out["residual"] = residual_json(*r.residual);
  return out.dump(2) + "\n";
}

FramePath parse_frames_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::vector<double> s;
  std::vector<Matrix> frames;
  std::vector<int> flags;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line_no == 1 && line.rfind("s,", 0) == 0) continue;
    std::vector<std::string> cells;
    std::stringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (cells.size() != 11) throw ParseError("expected 11 columns, got " + std::to_string(cells.size()), line_no, "frames.csv");
    s.push_back(csv_number(cells[0], line_no));
    Matrix g(3, 3);
    for (int k = 0; k < 9; ++k) g(k / 3, k % 3) = csv_number(cells[static_cast<std::size_t>(k) + 1], line_no);
    frames.push_back(std::move(g));
    const double flag = csv_number(cells[10], line_no);
    if (flag != 0.0 && flag != 1.0 && flag != 2.0) throw ParseError("jump flag must be 0, 1 or 2", line_no, "frames.csv");
    flags.push_back(static_cast<int>(flag));
  }
  if (frames.empty()) throw ParseError("no frames", line_no, "frames.csv");
  try {
    FramePath path(3, RotationMatrix(frames.front()));
    for (std::size_t i = 0; i < frames.size(); ++i) {
      path.push(s[i], RotationMatrix(frames[i]), static_cast<NodeKind>(flags[i]));
      if (flags[i] == 2) {
        if (i == 0 || flags[i - 1] != 1) throw ParseError("right limit without a left limit", static_cast<int>(i) + 2, "frames.csv");
        const RotationMatrix left(frames[i - 1]);
        const RotationMatrix right(frames[i]);
        RotationMatrix local = left.transpose() * right;
        const AxisAngle aa = log_rotation(local);
        const Vector3 spatial_axis = (left.matrix() * aa.axis).normalized();
        JumpRecord rec{s[i], left, right, local, AxisAngle(spatial_axis, aa.angle), aa.angle,
                       aa.angle * aa.axis.z(), aa.angle * aa.axis.x()};
        path.push_jump(std::move(rec));
      }
    }
    return path;
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), 0, "frames.csv");
  }
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp + "'");
    out << content;
    if (!out.flush()) throw Error("write to '" + tmp + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error("cannot rename '" + tmp + "' to '" + path + "': " + ec.message());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace frenetbv
