#include "bounds.hpp"

#include <stdexcept>

namespace climbsim {

double bound_geometry(const CapacityInput& in) {
  return in.h0 + std::max(in.Lc, in.Lh);
}

double bound_friction(const CapacityInput& in) {
  return std::sin(0.8 * std::atan(in.mu)) * in.L;
}

double max_climb_height(const CapacityInput& in) {
  return std::min(bound_geometry(in), bound_friction(in));
}

double bound_geometry_sloped(const CapacityInput& in, double slope_deg) {
  if (!(slope_deg > 0.0 && slope_deg <= 90.0))
    throw std::invalid_argument("slope_deg must be in (0, 90]");
  const double slope = deg_to_rad(slope_deg);
  // Belly rests on the incline over reach Lc: horizontal extent Lc*cos(s)
  // times the face gradient adds Lc*sin(s) of effective clearance.
  const double h0_eff = in.h0 + in.Lc * std::cos(slope) * std::tan(slope);
  return h0_eff + std::max(in.Lc, in.Lh);
}

double h0_from_geometry(const RobotConfig& robot, double A_v) {
  // Standing head-joint height plus the tent lift of the alternating
  // vertical wave (adjacent joints in antiphase give segment pitches A_v/2).
  return robot.leg_radius + 0.5 * robot.segment_length * std::sin(0.5 * A_v);
}

}  // namespace climbsim
