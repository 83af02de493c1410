#pragma once

#include <optional>
#include <vector>

#include "estimation.hpp"

namespace climbsim {

/// Head pitch controller gains. Distances are meters, gains radians/meter,
/// `a` is the head-joint ground clearance in the initial stance.
struct HeadControllerParams {
  double Kp1 = 2.0;
  double Kp2 = 1.0;
  double a = 0.06;
  double theta0 = 2.0 * kPi / 9.0;  // constant no-hit descent pitch
  double joint_limit = kPi / 2;
};

struct PitchDownParams {
  double A_p = kPi / 12;      // periodic pitch amplitude
  double theta_p = -kPi / 6;  // negative bias pulling the joint down
  double duty_threshold = 0.2;
};

enum class ControlMode { RaiseUp, Drag, Descend };

struct HeadDecision {
  double angle = 0.0;
  ControlMode mode = ControlMode::Descend;
};

// Head vertical joint command from the obstacle estimate. Positive pitches
// the head up. Raise branch when the positive evidence dominates, drag
// branch follows the contour below, constant descent when nothing is hit.
HeadDecision head_command(const ObstacleEstimate& est,
                          const HeadControllerParams& params);

struct DutyReport {
  std::vector<double> per_segment;  // index 0 = segment 1
  bool partial_window = false;      // traces shorter than one gait cycle
};

// Per-segment duty factors averaged over each segment's two legs. Legs are
// laid out [left 1..n, right 1..n] in the history traces.
DutyReport duty_factors(const SensorHistory& history);

// Smallest segment index >= 2 whose duty is below threshold; returns the
// vertical joint immediately ahead of it (joint = segment - 1).
std::optional<int> select_floating_joint(const std::vector<double>& duties,
                                         const PitchDownParams& params);

// Pitch-down joint command at time t (seconds).
double pitch_down_command(double t, const PitchDownParams& params);

struct ControlOutput {
  std::vector<double> theta_v;  // command per vertical joint, index 0 = joint 1
  std::vector<uint8_t> wave_follow;  // joints left to the vertical wave
  std::optional<int> active_pitch_joint;
  ControlMode mode = ControlMode::Descend;
};

// Composes the per-joint command vector. The pitch-down controller takes
// priority over the head controller when both target joint 1; all joints not
// claimed by a controller follow the supplied wave template angles.
ControlOutput arbitrate(double head_cmd, std::optional<int> pitch_joint,
                        double pitch_cmd, const std::vector<double>& wave,
                        ControlMode mode, double joint_limit);

}  // namespace climbsim
