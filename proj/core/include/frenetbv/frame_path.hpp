#pragma once

// Sampled solution s -> G(s) of the frame system. Jump locations appear twice
// on the grid: once with the left limit G(s-) and once with the right limit
// G(s+).

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "frenetbv/liegroup.hpp"

namespace frenetbv {

enum class NodeKind : int { Regular = 0, JumpLeft = 1, JumpRight = 2 };

struct JumpRecord {
  double at = 0.0;
  RotationMatrix left;   // G(s-)
  RotationMatrix right;  // G(s+)
  // A = G(s-)^T G(s+), the jump rotation in body coordinates.
  RotationMatrix local;
  // Spatial form R with G(s+) = R G(s-); set in dimension 3 only.
  std::optional<AxisAngle> spatial;
  double angle = 0.0;  // rotation angle of A
  double d = 0.0;
  double tau = 0.0;

  // (1/2) G(s-) (A + I), the precise representative at the jump.
  Matrix precise() const;
};

class FramePath {
 public:
  FramePath(int dim, RotationMatrix initial);

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return s_.size(); }
  double length() const { return s_.empty() ? 0.0 : s_.back(); }

  const std::vector<double>& s() const noexcept { return s_; }
  const std::vector<RotationMatrix>& frames() const noexcept { return frames_; }
  const std::vector<NodeKind>& kinds() const noexcept { return kinds_; }
  const std::vector<JumpRecord>& jumps() const noexcept { return jumps_; }
  const RotationMatrix& initial() const noexcept { return initial_; }

  // Columns of the frame at node i, padded with zeros to R^3 for n = 2.
  Eigen::Vector3d tangent(std::size_t i) const { return column(i, 0); }
  Eigen::Vector3d normal(std::size_t i) const { return column(i, 1); }
  Eigen::Vector3d binormal(std::size_t i) const { return column(i, 2); }

  // Index of the last node with s <= value (right limit at a jump).
  std::size_t index_at(double value) const;

  double max_orthogonality_defect() const;

  void push(double s, RotationMatrix frame, NodeKind kind = NodeKind::Regular);
  void push_jump(JumpRecord record);

 private:
  Eigen::Vector3d column(std::size_t i, int c) const;

  int dim_;
  RotationMatrix initial_;
  std::vector<double> s_;
  std::vector<RotationMatrix> frames_;
  std::vector<NodeKind> kinds_;
  std::vector<JumpRecord> jumps_;
};

}  // namespace frenetbv
