#include <string>

#include "frenetbv/error.hpp"
#include "frenetbv/solver.hpp"

namespace frenetbv {

TruncationStudy solve_bv_general(const CountableSkewPath& omega, const RotationMatrix& initial,
                                 const SolverConfig& cfg, int n_max, TruncationSchedule schedule) {
  if (n_max < 1) throw DomainError("solve_bv_general: n_max must be >= 1");
  const bool increasing = omega.base().theta().strictly_increasing();
  TruncationStudy study;
  study.total_jump_mass = omega.total_jump_mass();

  for (int n = 1; n <= n_max; ++n) {
    auto cut = schedule == TruncationSchedule::Threshold ? omega.truncate_by_mass(1.0 / n)
                                                         : omega.truncate_by_prefix(n);
    TruncationLevel level;
    level.level = n;
    level.atoms = cut.atoms_kept;
    level.discarded_mass = cut.discarded_mass;
    level.path = std::make_shared<const FramePath>(solve_bv(cut.path, initial, cfg));
    level.curve = integrate_tangent(level.path, increasing && cut.path.theta().strictly_increasing());
    if (!study.levels.empty()) {
      const auto& prev = study.levels.back();
      level.added_mass = prev.discarded_mass - level.discarded_mass;
      level.frechet_to_previous = discrete_frechet(prev.curve, level.curve);
    } else {
      level.added_mass = study.total_jump_mass - level.discarded_mass;
    }
    study.levels.push_back(std::move(level));
  }
  return study;
}

}  // namespace frenetbv
