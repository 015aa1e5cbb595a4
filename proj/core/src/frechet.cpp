#include <algorithm>
#include <vector>

#include "frenetbv/curvegeom.hpp"
#include "frenetbv/error.hpp"

namespace frenetbv {

// Coupling-distance recursion of Eiter and Mannila, one row at a time.
double discrete_frechet(const Curve& a, const Curve& b) {
  const auto& p = a.points;
  const auto& q = b.points;
  if (p.empty() || q.empty()) throw DomainError("discrete_frechet: empty curve");
  const std::size_t m = q.size();
  std::vector<double> prev(m), cur(m);

  prev[0] = (p[0] - q[0]).norm();
  for (std::size_t j = 1; j < m; ++j) prev[j] = std::max(prev[j - 1], (p[0] - q[j]).norm());
  for (std::size_t i = 1; i < p.size(); ++i) {
    cur[0] = std::max(prev[0], (p[i] - q[0]).norm());
    for (std::size_t j = 1; j < m; ++j) {
      const double reach = std::min({prev[j], prev[j - 1], cur[j - 1]});
      cur[j] = std::max(reach, (p[i] - q[j]).norm());
    }
    std::swap(prev, cur);
  }
  return prev[m - 1];
}

}  // namespace frenetbv
