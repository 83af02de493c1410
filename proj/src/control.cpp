#include "control.hpp"

namespace climbsim {

HeadDecision head_command(const ObstacleEstimate& est,
                          const HeadControllerParams& p) {
  HeadDecision d;
  const bool has_max = est.z_max.has_value();
  const bool has_min = est.z_min.has_value();
  if (!has_max && !has_min) {
    d.mode = ControlMode::Descend;
    d.angle = -p.theta0;
  } else if (has_max && (!has_min || *est.z_max >= std::abs(*est.z_min))) {
    // Only positive evidence, or the high side dominates (ties raise).
    d.mode = ControlMode::RaiseUp;
    d.angle = p.Kp1 * (*est.z_max + p.a);
  } else {
    d.mode = ControlMode::Drag;
    d.angle = -p.Kp2 * (std::abs(*est.z_min) - p.a);
  }
  d.angle = clamp(d.angle, -p.joint_limit, p.joint_limit);
  return d;
}

DutyReport duty_factors(const SensorHistory& history) {
  DutyReport r;
  const int n = history.n_legs() / 2;
  r.partial_window = !history.trace_full();
  r.per_segment.resize(static_cast<size_t>(n), 0.0);
  for (int s = 0; s < n; ++s) {
    double duty = 0.0;
    for (int side = 0; side < 2; ++side) {
      const auto& trace = history.contact_trace(side * n + s);
      if (trace.empty()) continue;
      double hits = 0.0;
      for (uint8_t c : trace) hits += c ? 1.0 : 0.0;
      duty += hits / static_cast<double>(trace.size());
    }
    r.per_segment[static_cast<size_t>(s)] = duty / 2.0;
  }
  return r;
}

std::optional<int> select_floating_joint(const std::vector<double>& duties,
                                         const PitchDownParams& params) {
  // duties[k] is segment k+1; there is no vertical joint ahead of segment 1.
  for (size_t k = 1; k < duties.size(); ++k) {
    if (duties[k] < params.duty_threshold) return static_cast<int>(k);
  }
  return std::nullopt;
}

double pitch_down_command(double t, const PitchDownParams& params) {
  return params.A_p * std::sin(4.0 * t) + params.theta_p;
}

ControlOutput arbitrate(double head_cmd, std::optional<int> pitch_joint,
                        double pitch_cmd, const std::vector<double>& wave,
                        ControlMode mode, double joint_limit) {
  ControlOutput out;
  out.mode = mode;
  out.active_pitch_joint = pitch_joint;
  out.theta_v.resize(wave.size());
  out.wave_follow.assign(wave.size(), 1);
  for (size_t j = 0; j < wave.size(); ++j)
    out.theta_v[j] = clamp(wave[j], -joint_limit, joint_limit);
  if (!wave.empty()) {
    out.theta_v[0] = clamp(head_cmd, -joint_limit, joint_limit);
    out.wave_follow[0] = 0;
  }
  if (pitch_joint && *pitch_joint >= 1 &&
      *pitch_joint <= static_cast<int>(wave.size())) {
    // Pitch-down has priority, including over the head controller at joint 1.
    out.theta_v[static_cast<size_t>(*pitch_joint - 1)] =
        clamp(pitch_cmd, -joint_limit, joint_limit);
    out.wave_follow[static_cast<size_t>(*pitch_joint - 1)] = 0;
  }
  return out;
}

}  // namespace climbsim
