#include "sensing.hpp"

#include <stdexcept>

namespace climbsim {

double antenna_angle(double tau_b, const AntennaConfig& cfg) {
  return cfg.A_a * std::sin(cfg.w_a * tau_b);
}

double tip_z_local(double theta_v1, double theta_a, const RobotConfig& robot) {
  return robot.L1 * std::sin(theta_v1) +
         robot.La * std::sin(theta_v1 + theta_a);
}

namespace {

Vec2 tip_world_at(const Pose2& head, double theta_a, const AntennaConfig& cfg,
                  const RobotConfig& robot) {
  const Vec2 base = Vec2{head.x, head.z} + robot.L1 * dir(head.pitch);
  return base + cfg.La * dir(head.pitch + theta_a);
}

double tip_clearance(const Pose2& head, double theta_a,
                     const AntennaConfig& cfg, const RobotConfig& robot,
                     const TerrainProfile& terrain) {
  const Vec2 tip = tip_world_at(head, theta_a, cfg, robot);
  return tip.z - terrain.height_at(tip.x);
}

}  // namespace

ProbeResult probe(const Pose2& head_joint, double theta_v1, double theta_a,
                  const AntennaConfig& cfg, const RobotConfig& robot,
                  const TerrainProfile& terrain) {
  ProbeResult r;
  double eff = theta_a;
  double clear_cmd = tip_clearance(head_joint, eff, cfg, robot, terrain);
  if (clear_cmd < 0.0) {
    // The sprung tip stops at the surface: back the angle off toward the
    // raised end of the sweep until the tip just touches.
    double lo = theta_a;         // penetrating
    double hi = cfg.A_a;         // raised end
    if (tip_clearance(head_joint, hi, cfg, robot, terrain) < 0.0) {
      eff = theta_a;  // even fully raised it penetrates; keep the command
    } else {
      for (int k = 0; k < 40; ++k) {
        const double mid = 0.5 * (lo + hi);
        if (tip_clearance(head_joint, mid, cfg, robot, terrain) < 0.0)
          lo = mid;
        else
          hi = mid;
      }
      eff = hi;
    }
  }
  r.theta_a_eff = eff;
  r.tip_world = tip_world_at(head_joint, eff, cfg, robot);
  r.hit = hit_test(r.tip_world, terrain);
  r.tip_z_local = tip_z_local(theta_v1, eff, robot);
  return r;
}

bool foot_contact(double leg_world_toe_z, double terrain_z) {
  return leg_world_toe_z <= terrain_z + kContactTol;
}

SensorHistory::SensorHistory(size_t window_ticks, size_t trace_ticks,
                             int n_legs)
    : window_(window_ticks),
      trace_window_(trace_ticks),
      traces_(static_cast<size_t>(n_legs)) {
  if (window_ticks == 0 || trace_ticks == 0 || n_legs <= 0)
    throw std::invalid_argument("sensor history windows must be positive");
}

void SensorHistory::push(bool hit, double z_local,
                         const std::vector<uint8_t>& leg_contacts) {
  if (leg_contacts.size() != traces_.size())
    throw std::invalid_argument("leg contact count mismatch");
  hits_.push_back(hit ? 1 : 0);
  tip_z_.push_back(z_local);
  while (hits_.size() > window_) {
    hits_.pop_front();
    tip_z_.pop_front();
  }
  for (size_t k = 0; k < traces_.size(); ++k) {
    traces_[k].push_back(leg_contacts[k]);
    while (traces_[k].size() > trace_window_) traces_[k].pop_front();
  }
}

void push_sample(SensorHistory& history, bool hit, double z,
                 const std::vector<uint8_t>& leg_contacts) {
  history.push(hit, z, leg_contacts);
}

}  // namespace climbsim
