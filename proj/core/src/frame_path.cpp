#include "frenetbv/frame_path.hpp"

#include <algorithm>

#include "frenetbv/error.hpp"

namespace frenetbv {

Matrix JumpRecord::precise() const {
  return 0.5 * left.matrix() * (local.matrix() + Matrix::Identity(local.dim(), local.dim()));
}

FramePath::FramePath(int dim, RotationMatrix initial) : dim_(dim), initial_(std::move(initial)) {
  if (initial_.dim() != dim_) throw DomainError("FramePath: initial frame has the wrong dimension");
}

void FramePath::push(double s, RotationMatrix frame, NodeKind kind) {
  if (frame.dim() != dim_) throw DomainError("FramePath: frame has the wrong dimension");
  if (!s_.empty() && s < s_.back()) throw DomainError("FramePath: samples must be ordered");
  s_.push_back(s);
  frames_.push_back(std::move(frame));
  kinds_.push_back(kind);
}

void FramePath::push_jump(JumpRecord record) { jumps_.push_back(std::move(record)); }

std::size_t FramePath::index_at(double value) const {
  if (s_.empty()) throw DomainError("FramePath: empty path");
  const auto it = std::upper_bound(s_.begin(), s_.end(), value);
  if (it == s_.begin()) return 0;
  return static_cast<std::size_t>(it - s_.begin()) - 1;
}

double FramePath::max_orthogonality_defect() const {
  double worst = 0.0;
  for (const auto& g : frames_) worst = std::max(worst, g.orthogonality_defect());
  return worst;
}

Eigen::Vector3d FramePath::column(std::size_t i, int c) const {
  Eigen::Vector3d v = Eigen::Vector3d::Zero();
  if (c >= dim_) return v;
  const Matrix& g = frames_.at(i).matrix();
  for (int r = 0; r < std::min(dim_, 3); ++r) v(r) = g(r, c);
  return v;
}

}  // namespace frenetbv
