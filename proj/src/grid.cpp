#include "ebie/grid.hpp"
#include <cmath>
#include <stdexcept>

namespace ebie {

static Vec2 perp_scaled(const Curve& c, double t, double h) {
  Vec2 d = c.der(t);
  return h * Vec2(d.y(), -d.x());
}

GridData sample_closed(const Curve& curve, int N) {
  if (curve.kind != Curve::Kind::closed)
    throw std::invalid_argument("sample_closed needs a closed curve");
  if (N < 4) throw std::invalid_argument("N >= 4 required");
  GridData g;
  g.N = N;
  g.h = 1.0 / N;
  g.offsets = {0, N};
  auto res = [&](std::vector<Vec2>& v) { v.resize(N); };
  res(g.m), res(g.b), res(g.n);
  res(g.mP), res(g.mM), res(g.bP), res(g.bM), res(g.nP), res(g.nM);
  const double sixth = 1.0 / 6.0;
  for (int j = 0; j < N; ++j) {
    double t = j * g.h;
    if (curve.der(t).norm() == 0)
      throw std::invalid_argument("degenerate parametrization (|x'| = 0)");
    g.m[j] = curve.pos(t);
    g.b[j] = curve.pos(t - 0.5 * g.h);
    g.n[j] = perp_scaled(curve, t, g.h);
    g.mP[j] = curve.pos(t + sixth * g.h);
    g.mM[j] = curve.pos(t - sixth * g.h);
    g.bP[j] = curve.pos(t - 0.5 * g.h + sixth * g.h);
    g.bM[j] = curve.pos(t - 0.5 * g.h - sixth * g.h);
    g.nP[j] = perp_scaled(curve, t + sixth * g.h, g.h);
    g.nM[j] = perp_scaled(curve, t - sixth * g.h, g.h);
  }
  return g;
}

GridData sample_arc(const Curve& curve, int N) {
  if (curve.kind != Curve::Kind::arc)
    throw std::invalid_argument("sample_arc needs an arc");
  if (N < 4 || N % 2 != 0) throw std::invalid_argument("even N >= 4 required");
  // cosine change of variables a(t) = x(phi(t)), phi(t) = 1/2 + cos(pi(2t-1))/2,
  // covering the arc twice per period with the tips at breakpoints
  auto phi = [](double t) { return 0.5 + 0.5 * std::cos(M_PI * (2 * t - 1)); };
  auto dphi = [](double t) { return -M_PI * std::sin(M_PI * (2 * t - 1)); };
  auto a = [&](double t) { return curve.pos(phi(t)); };
  auto an = [&](double t, double h) {
    Vec2 d = dphi(t) * curve.der(phi(t));
    return h * Vec2(d.y(), -d.x());
  };
  GridData g;
  g.N = N;
  g.h = 1.0 / N;
  g.arc = true;
  g.offsets = {0, N};
  auto res = [&](std::vector<Vec2>& v) { v.resize(N); };
  res(g.m), res(g.b), res(g.n);
  res(g.mP), res(g.mM), res(g.bP), res(g.bM), res(g.nP), res(g.nM);
  const double sixth = 1.0 / 6.0;
  for (int j = 0; j < N; ++j) {
    // staggered against the closed case: m_j = a((j+1/2)h), b_j = a(jh)
    double t = (j + 0.5) * g.h;
    g.m[j] = a(t);
    g.b[j] = a(j * g.h);
    g.n[j] = an(t, g.h);
    g.mP[j] = a(t + sixth * g.h);
    g.mM[j] = a(t - sixth * g.h);
    g.bP[j] = a(j * g.h + sixth * g.h);
    g.bM[j] = a(j * g.h - sixth * g.h);
    g.nP[j] = an(t + sixth * g.h, g.h);
    g.nM[j] = an(t - sixth * g.h, g.h);
  }
  return g;
}

GridData concat_scenes(const std::vector<GridData>& grids) {
  if (grids.empty()) throw std::invalid_argument("empty scene");
  if (grids.size() == 1) return grids[0];
  GridData g;
  g.offsets = {0};
  for (const auto& part : grids) {
    if (part.arc)
      throw std::invalid_argument("scenes must consist of closed curves");
    if (part.offsets.size() != 2)
      throw std::invalid_argument("concat expects single-curve grids");
    g.N += part.N;
    g.offsets.push_back(g.N);
    auto app = [](std::vector<Vec2>& dst, const std::vector<Vec2>& src) {
      dst.insert(dst.end(), src.begin(), src.end());
    };
    app(g.m, part.m), app(g.b, part.b), app(g.n, part.n);
    app(g.mP, part.mP), app(g.mM, part.mM);
    app(g.bP, part.bP), app(g.bM, part.bM);
    app(g.nP, part.nP), app(g.nM, part.nM);
  }
  // h is per-curve in principle; scenes in this code always use equal N
  // per curve, so keep the first one's value
  g.h = grids[0].h;
  return g;
}

}  // namespace ebie
