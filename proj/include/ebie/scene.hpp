#pragma once
#include <string>
#include <vector>

#include "ebie/curve.hpp"
#include "ebie/grid.hpp"
#include "ebie/types.hpp"

namespace ebie {

struct Lattice {
  double x0, x1, y0, y1;
  int nx, ny;
  std::vector<Vec2> points() const;  // row-major, iy outer
};

struct SceneConfig {
  std::vector<Curve> curves;  // closed obstacles
  int points_per_curve = 200;
  Material mat{5.0, 3.0, 2.5};
  Vec2 direction{1.0, 1.0};  // pulse travel direction, normalized on use
  double t0 = 2.3, width = 1.0;
  double T = 28.0;
  int M = 1200;
  Lattice lattice{-1.0, 6.0, -1.0, 5.0, 40, 32};
  int frame_stride = 10;
  std::string outdir;  // empty: compute only, write nothing
};

struct SceneResult {
  std::vector<double> frame_times;
  std::vector<std::string> frame_files;
  std::string manifest_file;
  double peak = 0;             // max lattice |U| over all frames
  double pre_arrival_max = 0;  // max |U| at points the wave cannot have reached
};

SceneConfig scene_three_disks();
SceneConfig scene_from_json(const std::string& path);

// sound-soft scattering of the plane pulse off the scene obstacles, run as
// one frequency sweep; writes |U| frames as CSV plus a JSON manifest
SceneResult run_scattering_scene(const SceneConfig& cfg);

}  // namespace ebie
