#pragma once

#include "common.hpp"
#include "gait.hpp"
#include "terrain.hpp"

namespace climbsim {

/// Inputs for the analytic climbing-capacity bounds.
struct CapacityInput {
  double h0 = 0.07;  // max head-joint ground clearance over a gait cycle
  double Lc = 0.15;
  double Lh = 0.17;
  double mu = 0.5;
  double L = 0.95;

  static CapacityInput from_robot(const RobotConfig& r, double h0 = 0.07) {
    return {h0, r.Lc, r.Lh, r.mu, r.L};
  }
};

// Geometric hooking bound: h0 + max(Lc, Lh).
double bound_geometry(const CapacityInput& in);

// Friction bound from the backbone-slope stall condition at 80% of the
// friction angle: sin(0.8 * atan(mu)) * L.
double bound_friction(const CapacityInput& in);

// Combined limit: the smaller of the two bounds.
double max_climb_height(const CapacityInput& in);

// Inclined faces let the head rest on the slope before hooking, raising the
// effective h0 by the belly reach projected on the face. Heuristic
// extrapolation; slope_deg in (0, 90].
double bound_geometry_sloped(const CapacityInput& in, double slope_deg);

// h0 derived from standing geometry plus the vertical-wave arch lift, for
// cross-checking the constant input (equal at A_v = 0).
double h0_from_geometry(const RobotConfig& robot, double A_v);

}  // namespace climbsim
