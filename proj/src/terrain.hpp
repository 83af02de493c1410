#pragma once

#include <optional>
#include <string>
#include <vector>

#include "common.hpp"

namespace climbsim {

/// Physical description of the robot chain. Lengths in meters, angles in
/// radians. Field names mirror the JSON config keys.
struct RobotConfig {
  int n_segments = 6;
  double segment_length = 0.15;  // body segments behind the head
  double L1 = 0.15;              // head segment length
  double La = 0.10;              // antenna length
  double h_belly = 0.05;         // belly clearance when standing
  double leg_radius = 0.07;      // shoulder-to-toe leg reach
  double Lc = 0.15;              // head joint to front-mechanism center of mass
  double Lh = 0.17;              // head joint to farthest front-leg hook point
  double L = 0.95;               // head-leg to tail-leg span
  double mu = 0.5;               // ground friction coefficient
  double v_nom = 0.10;           // nominal flat-ground advance per gait cycle
  double joint_limit = kPi / 2;  // max |vertical joint angle|

  // Distance from the segment axis down to the belly underside.
  double belly_drop() const { return leg_radius - h_belly; }

  // Returns a list of violated invariants, empty when valid.
  std::vector<std::string> check() const;
  void validate() const;  // throws std::invalid_argument listing all problems
};

/// Piecewise-linear ground height profile in the sagittal plane.
/// Immutable after construction; vertices have strictly increasing x.
class TerrainProfile {
 public:
  explicit TerrainProfile(std::vector<Vec2> vertices);

  // Ground height g(x), clamped to the end heights outside the x-range.
  double height_at(double x) const;

  const std::vector<Vec2>& vertices() const { return verts_; }
  double min_x() const { return verts_.front().x; }
  double max_x() const { return verts_.back().x; }
  double min_z() const;
  double max_z() const;

  // x of the first ascending vertex, if the profile ever rises.
  std::optional<double> first_rise_x() const;
  // x just past the last elevated vertex: the base of the far side of the
  // final obstacle. Empty for flat profiles.
  std::optional<double> far_edge_x() const;
  // Tops of steep ascents (grade above `min_grade`): hookable edges.
  std::vector<Vec2> riser_tops(double min_grade) const;

 private:
  std::vector<Vec2> verts_;
};

double ground_height(const TerrainProfile& terrain, double x);

// Flat approach, steep rise (horizontal run `face_run`), flat top of `width`,
// steep drop, flat exit. `exit_len` < 0 mirrors the approach length.
TerrainProfile make_box_course(double height, double width, double approach,
                               double exit_len = -1.0,
                               double face_run = 1e-3);

// Two boxes in sequence separated by `gap` of flat ground.
TerrainProfile make_two_box_course(double h1, double w1, double gap, double h2,
                                   double w2, double approach,
                                   double exit_len = -1.0,
                                   double face_run = 1e-3);

// Trapezoidal stack profile with inclined faces at `slope_deg` and scalloped
// bumps carved into the faces to mimic stacked-cylinder curvature.
TerrainProfile make_cylinder_stack_course(double base_height, double slope_deg,
                                          double top_height,
                                          double approach = 1.0,
                                          double top_width = 0.09,
                                          double bump_amplitude = 0.015);

}  // namespace climbsim
