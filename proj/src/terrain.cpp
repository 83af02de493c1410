#include "terrain.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace climbsim {

std::vector<std::string> RobotConfig::check() const {
  std::vector<std::string> bad;
  auto positive = [&](double v, const char* name) {
    if (!(v > 0.0)) bad.push_back(std::string(name) + " must be > 0");
  };
  if (n_segments < 3) bad.push_back("n_segments must be >= 3");
  positive(segment_length, "segment_length");
  positive(L1, "L1");
  positive(La, "La");
  positive(h_belly, "h_belly");
  positive(leg_radius, "leg_radius");
  positive(Lc, "Lc");
  positive(Lh, "Lh");
  positive(L, "L");
  positive(mu, "mu");
  positive(v_nom, "v_nom");
  positive(joint_limit, "joint_limit");
  if (Lc > L1 + La + 1e-12) bad.push_back("Lc must not exceed L1 + La");
  if (h_belly >= leg_radius) bad.push_back("h_belly must be < leg_radius");
  return bad;
}

void RobotConfig::validate() const {
  auto bad = check();
  if (bad.empty()) return;
  std::ostringstream os;
  os << "invalid robot config:";
  for (const auto& m : bad) os << " " << m << ";";
  throw std::invalid_argument(os.str());
}

TerrainProfile::TerrainProfile(std::vector<Vec2> vertices)
    : verts_(std::move(vertices)) {
  if (verts_.size() < 2)
    throw std::invalid_argument("terrain needs at least 2 vertices");
  for (size_t i = 1; i < verts_.size(); ++i) {
    if (!(verts_[i].x > verts_[i - 1].x))
      throw std::invalid_argument("terrain x must be strictly increasing");
  }
}

double TerrainProfile::height_at(double x) const {
  if (x <= verts_.front().x) return verts_.front().z;
  if (x >= verts_.back().x) return verts_.back().z;
  // Binary search for the segment containing x.
  size_t lo = 0, hi = verts_.size() - 1;
  while (hi - lo > 1) {
    size_t mid = (lo + hi) / 2;
    if (verts_[mid].x <= x)
      lo = mid;
    else
      hi = mid;
  }
  const Vec2& a = verts_[lo];
  const Vec2& b = verts_[hi];
  const double t = (x - a.x) / (b.x - a.x);
  return a.z + t * (b.z - a.z);
}

double TerrainProfile::min_z() const {
  double m = verts_.front().z;
  for (const auto& v : verts_) m = std::min(m, v.z);
  return m;
}

double TerrainProfile::max_z() const {
  double m = verts_.front().z;
  for (const auto& v : verts_) m = std::max(m, v.z);
  return m;
}

std::optional<double> TerrainProfile::first_rise_x() const {
  for (size_t i = 1; i < verts_.size(); ++i) {
    if (verts_[i].z > verts_[i - 1].z + 1e-9) return verts_[i - 1].x;
  }
  return std::nullopt;
}

std::optional<double> TerrainProfile::far_edge_x() const {
  const double base = min_z();
  size_t last_elev = verts_.size();
  for (size_t i = 0; i < verts_.size(); ++i) {
    if (verts_[i].z > base + 1e-9) last_elev = i;
  }
  if (last_elev == verts_.size()) return std::nullopt;
  if (last_elev + 1 < verts_.size()) return verts_[last_elev + 1].x;
  return verts_[last_elev].x;
}

std::vector<Vec2> TerrainProfile::riser_tops(double min_grade) const {
  std::vector<Vec2> tops;
  for (size_t i = 1; i < verts_.size(); ++i) {
    const double dz = verts_[i].z - verts_[i - 1].z;
    const double dx = verts_[i].x - verts_[i - 1].x;
    if (dz > 1e-9 && dz / dx >= min_grade) tops.push_back(verts_[i]);
  }
  return tops;
}

double ground_height(const TerrainProfile& terrain, double x) {
  return terrain.height_at(x);
}

TerrainProfile make_box_course(double height, double width, double approach,
                               double exit_len, double face_run) {
  if (!(width > 0.0)) throw std::invalid_argument("box width must be > 0");
  if (height < 0.0) throw std::invalid_argument("box height must be >= 0");
  if (exit_len < 0.0) exit_len = approach;
  std::vector<Vec2> v;
  double x = 0.0;
  v.push_back({x, 0.0});
  x += approach;
  v.push_back({x, 0.0});
  x += face_run;
  v.push_back({x, height});
  x += width;
  v.push_back({x, height});
  x += face_run;
  v.push_back({x, 0.0});
  x += exit_len;
  v.push_back({x, 0.0});
  return TerrainProfile(std::move(v));
}

TerrainProfile make_two_box_course(double h1, double w1, double gap, double h2,
                                   double w2, double approach, double exit_len,
                                   double face_run) {
  if (!(w1 > 0.0) || !(w2 > 0.0))
    throw std::invalid_argument("box width must be > 0");
  if (exit_len < 0.0) exit_len = approach;
  std::vector<Vec2> v;
  double x = 0.0;
  v.push_back({x, 0.0});
  x += approach;
  v.push_back({x, 0.0});
  x += face_run;
  v.push_back({x, h1});
  x += w1;
  v.push_back({x, h1});
  x += face_run;
  v.push_back({x, 0.0});
  x += gap;
  v.push_back({x, 0.0});
  x += face_run;
  v.push_back({x, h2});
  x += w2;
  v.push_back({x, h2});
  x += face_run;
  v.push_back({x, 0.0});
  x += exit_len;
  v.push_back({x, 0.0});
  return TerrainProfile(std::move(v));
}

TerrainProfile make_cylinder_stack_course(double base_height, double slope_deg,
                                          double top_height, double approach,
                                          double top_width,
                                          double bump_amplitude) {
  if (!(slope_deg > 0.0 && slope_deg < 90.0))
    throw std::invalid_argument("slope_deg must be in (0, 90)");
  const double rise = top_height - base_height;
  std::vector<Vec2> v;
  v.push_back({0.0, base_height});
  v.push_back({approach, base_height});
  if (rise <= 1e-12) {
    // Degenerate: flat course.
    v.push_back({approach + std::max(top_width, 0.1), base_height});
    v.push_back({approach + std::max(top_width, 0.1) + approach, base_height});
    return TerrainProfile(std::move(v));
  }
  const double grade = std::tan(deg_to_rad(slope_deg));
  const double run = rise / grade;
  // Scallops: carve pockets into the nominal face line, keeping the
  // endpoints on the nominal corners so the overall grade is preserved.
  const int kFaceSamples = 7;
  auto add_face = [&](double x0, double z0, double x1, double z1) {
    for (int k = 1; k < kFaceSamples; ++k) {
      const double t = static_cast<double>(k) / kFaceSamples;
      const double x = x0 + t * (x1 - x0);
      const double z = z0 + t * (z1 - z0);
      const double pocket =
          bump_amplitude * std::abs(std::sin(t * kPi * 3.0));
      v.push_back({x, z - pocket});
    }
    v.push_back({x1, z1});
  };
  add_face(approach, base_height, approach + run, top_height);
  v.push_back({approach + run + top_width, top_height});
  add_face(approach + run + top_width, top_height,
           approach + 2 * run + top_width, base_height);
  v.push_back({approach + 2 * run + top_width + approach, base_height});
  return TerrainProfile(std::move(v));
}

}  // namespace climbsim
