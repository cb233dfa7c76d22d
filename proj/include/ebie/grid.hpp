#pragma once
#include <vector>
#include "ebie/curve.hpp"

namespace ebie {

// The three staggered samplings of a curve: midpoints m, breakpoints b,
// h-scaled normals n, plus the +-h/6 companion grids of each. Multi-curve
// scenes concatenate the arrays and record per-curve index ranges in
// offsets (size ncurves+1); all cyclic index arithmetic stays per-curve.
struct GridData {
  int N = 0;
  double h = 0;
  bool arc = false;
  std::vector<int> offsets;  // [0, N1, N1+N2, ..., N]
  std::vector<Vec2> m, b, n;
  std::vector<Vec2> mP, mM, bP, bM, nP, nM;
};

GridData sample_closed(const Curve& curve, int N);
GridData sample_arc(const Curve& curve, int N);
GridData concat_scenes(const std::vector<GridData>& grids);

}  // namespace ebie
