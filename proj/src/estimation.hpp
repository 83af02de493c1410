#pragma once

#include <optional>

#include "sensing.hpp"

namespace climbsim {

/// Obstacle extremes extracted from the hit/Z window. z_max averages the
/// three highest positive-z hits, z_min the three lowest negative-z hits;
/// each is absent when no hit falls on that side of zero.
struct ObstacleEstimate {
  std::optional<double> z_max;
  std::optional<double> z_min;
  int window_ticks = 0;
};

ObstacleEstimate estimate(const SensorHistory& history);

}  // namespace climbsim
