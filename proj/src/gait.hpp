#pragma once

#include <string>
#include <vector>

#include "common.hpp"

namespace climbsim {

// Hard stability limit on the vertical wave amplitude.
inline constexpr double kMaxVerticalAmplitude = 2.0 * kPi / 9.0;

/// Open-loop wave template parameters. Angles in radians.
struct GaitParams {
  double Theta_leg = kPi / 6;   // leg stepping amplitude
  double Theta_body = kPi / 18; // horizontal body wave amplitude
  double A_v = kPi / 9;         // vertical body wave amplitude
  double D = 0.5;               // duty cycle fraction spent in stance
  double xi = 1.5;              // spatial wavenumber (body wave uses the same)
  int n = 6;                    // leg-pair count
  double cycle_period = 3.0;    // seconds per gait cycle

  std::vector<std::string> check() const;
  void validate() const;
};

/// Body phase and the contact phase derived by the coordination rule.
struct GaitPhase {
  double tau_b = 0.0;
  double tau_c = 0.0;

  static GaitPhase from_body_phase(double tau_b, const GaitParams& g) {
    GaitPhase p;
    p.tau_b = tau_b;
    p.tau_c = tau_b - (g.xi / g.n + 0.5) * kPi;
    return p;
  }
};

enum class Side { Left, Right };

// Shoulder angle of the i-th left leg at contact phase tau_c. Piecewise
// cosine: stance sweeps the angle from +Theta_leg to -Theta_leg over the
// first 2*pi*D of the (per-leg shifted) cycle, swing returns it.
double leg_angle_left(double tau_c, int i, const GaitParams& g);
// Right legs run in antiphase with the left.
double leg_angle_right(double tau_c, int i, const GaitParams& g);

// Horizontal body joint wave.
double body_angle(double tau_b, int i, const GaitParams& g);

// Vertical body joint wave; twice the temporal and spatial frequency of the
// horizontal wave.
double vertical_angle(double tau_b, int i, const GaitParams& g);

// True while the (shifted) leg phase is in the stance branch.
bool stance_flag(double tau_c, int i, Side side, const GaitParams& g);

// Linear time-to-phase map: 2*pi per cycle_period seconds.
double body_phase_at(double t_seconds, const GaitParams& g);

}  // namespace climbsim
