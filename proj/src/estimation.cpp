#include "estimation.hpp"

#include <algorithm>
#include <vector>

namespace climbsim {

ObstacleEstimate estimate(const SensorHistory& history) {
  ObstacleEstimate est;
  est.window_ticks = static_cast<int>(history.hits().size());
  std::vector<double> pos, neg;
  const auto& hits = history.hits();
  const auto& zs = history.tip_z();
  for (size_t k = 0; k < hits.size(); ++k) {
    if (!hits[k]) continue;
    const double z = zs[k];
    if (z > 0.0)
      pos.push_back(z);
    else if (z < 0.0)
      neg.push_back(z);
    // Hits at exactly z = 0 contribute to neither side.
  }
  auto mean_of = [](std::vector<double>& v, size_t count, bool largest) {
    if (largest)
      std::sort(v.begin(), v.end(), std::greater<double>());
    else
      std::sort(v.begin(), v.end());
    const size_t m = std::min(count, v.size());
    double s = 0.0;
    for (size_t k = 0; k < m; ++k) s += v[k];
    return s / static_cast<double>(m);
  };
  if (!pos.empty()) est.z_max = mean_of(pos, 3, true);
  if (!neg.empty()) est.z_min = mean_of(neg, 3, false);
  return est;
}

}  // namespace climbsim
