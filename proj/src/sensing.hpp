#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "common.hpp"
#include "terrain.hpp"

namespace climbsim {

// Geometric contact tolerance shared by antenna tip and foot sensing.
inline constexpr double kContactTol = 0.005;

/// Antenna sweep parameters. The force threshold is informational only;
/// contact detection here is geometric.
struct AntennaConfig {
  double A_a = 5.0 * kPi / 18.0;     // sweep amplitude
  double w_a = 4.0;                  // sweeps per gait cycle (phase multiplier)
  double hit_force_threshold = 1.0;  // newtons, from the hardware binarization
  double La = 0.10;                  // antenna length
};

// Commanded antenna joint angle at body phase tau_b.
double antenna_angle(double tau_b, const AntennaConfig& cfg);

// Antenna tip height relative to the head joint from the two-link rigid
// transformation of head segment and antenna.
double tip_z_local(double theta_v1, double theta_a, const RobotConfig& robot);

// Raw geometric hit predicate for a tip position against the terrain.
inline bool hit_test(Vec2 tip_world, const TerrainProfile& terrain,
                     double tol = kContactTol) {
  return tip_world.z <= terrain.height_at(tip_world.x) + tol;
}

struct Pose2 {
  double x = 0.0;
  double z = 0.0;
  double pitch = 0.0;  // world pitch of the head segment
};

struct ProbeResult {
  bool hit = false;
  double tip_z_local = 0.0;  // head-joint-frame z, from the rigid transform
  double theta_a_eff = 0.0;  // commanded angle, backed off to rest at contact
  Vec2 tip_world;
};

// Sweeps the antenna to the commanded angle, letting the sprung tip rest on
// the terrain instead of penetrating it. `head_joint` is the head joint pose
// in the world frame; `theta_v1` is the head vertical joint angle used for
// the local-frame estimate.
ProbeResult probe(const Pose2& head_joint, double theta_v1, double theta_a,
                  const AntennaConfig& cfg, const RobotConfig& robot,
                  const TerrainProfile& terrain);

// Binary foot contact: toe at or below ground level within tolerance.
bool foot_contact(double leg_world_toe_z, double terrain_z);

/// Rolling hit/Z buffers over the estimation window plus per-leg contact
/// traces over one full gait cycle. Owned by a single simulation instance.
class SensorHistory {
 public:
  SensorHistory(size_t window_ticks, size_t trace_ticks, int n_legs);

  void push(bool hit, double z_local, const std::vector<uint8_t>& leg_contacts);

  const std::deque<uint8_t>& hits() const { return hits_; }
  const std::deque<double>& tip_z() const { return tip_z_; }
  const std::deque<uint8_t>& contact_trace(int leg) const {
    return traces_.at(static_cast<size_t>(leg));
  }
  size_t window_ticks() const { return window_; }
  size_t trace_ticks() const { return trace_window_; }
  int n_legs() const { return static_cast<int>(traces_.size()); }
  bool trace_full() const {
    return !traces_.empty() && traces_.front().size() >= trace_window_;
  }

 private:
  size_t window_;
  size_t trace_window_;
  std::deque<uint8_t> hits_;
  std::deque<double> tip_z_;
  std::vector<std::deque<uint8_t>> traces_;
};

// Appends one aligned sample, evicting beyond the windows.
void push_sample(SensorHistory& history, bool hit, double z,
                 const std::vector<uint8_t>& leg_contacts);

}  // namespace climbsim
