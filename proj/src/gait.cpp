#include "gait.hpp"

#include <sstream>
#include <stdexcept>

namespace climbsim {

std::vector<std::string> GaitParams::check() const {
  std::vector<std::string> bad;
  if (!(D > 0.0 && D < 1.0)) bad.push_back("D must be in (0, 1)");
  if (Theta_leg < 0.0) bad.push_back("Theta_leg must be >= 0");
  if (Theta_body < 0.0) bad.push_back("Theta_body must be >= 0");
  if (A_v < 0.0) bad.push_back("A_v must be >= 0");
  if (A_v > kMaxVerticalAmplitude + 1e-12)
    bad.push_back("A_v exceeds the stable-forward-motion limit 2*pi/9");
  if (!(xi > 0.0)) bad.push_back("xi must be > 0");
  if (n < 2) bad.push_back("n must be >= 2");
  if (!(cycle_period > 0.0)) bad.push_back("cycle_period must be > 0");
  return bad;
}

void GaitParams::validate() const {
  auto bad = check();
  if (bad.empty()) return;
  std::ostringstream os;
  os << "invalid gait params:";
  for (const auto& m : bad) os << " " << m << ";";
  throw std::invalid_argument(os.str());
}

namespace {

void check_leg_index(int i, const GaitParams& g) {
  if (i < 1 || i > g.n) throw std::out_of_range("leg index out of range");
}

double leg_shift(int i, const GaitParams& g) {
  return 2.0 * kPi * (g.xi / g.n) * (i - 1);
}

}  // namespace

double leg_angle_left(double tau_c, int i, const GaitParams& g) {
  check_leg_index(i, g);
  const double m = wrap_2pi(tau_c - leg_shift(i, g));
  if (m < 2.0 * kPi * g.D) return g.Theta_leg * std::cos(m / (2.0 * g.D));
  return -g.Theta_leg * std::cos((m - 2.0 * kPi * g.D) / (2.0 * (1.0 - g.D)));
}

double leg_angle_right(double tau_c, int i, const GaitParams& g) {
  return leg_angle_left(tau_c + kPi, i, g);
}

double body_angle(double tau_b, int i, const GaitParams& g) {
  check_leg_index(i, g);
  return g.Theta_body * std::cos(tau_b - leg_shift(i, g));
}

double vertical_angle(double tau_b, int i, const GaitParams& g) {
  check_leg_index(i, g);
  return g.A_v * std::cos(2.0 * tau_b - 2.0 * leg_shift(i, g));
}

bool stance_flag(double tau_c, int i, Side side, const GaitParams& g) {
  check_leg_index(i, g);
  const double offset = side == Side::Right ? kPi : 0.0;
  const double m = wrap_2pi(tau_c + offset - leg_shift(i, g));
  return m < 2.0 * kPi * g.D;
}

double body_phase_at(double t_seconds, const GaitParams& g) {
  return 2.0 * kPi * t_seconds / g.cycle_period;
}

}  // namespace climbsim
