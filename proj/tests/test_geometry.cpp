#include <doctest.h>

#include <cmath>

#include "ebie/grid.hpp"

using namespace ebie;

TEST_CASE("closed sampling of the ellipse") {
  const double a = 4, b = 3;
  const Curve ell = curve_ellipse(a, b);
  const int N = 40;
  const GridData g = sample_closed(ell, N);

  CHECK(g.N == N);
  CHECK(g.h == doctest::Approx(1.0 / N));
  CHECK(!g.arc);
  REQUIRE(g.offsets == std::vector<int>{0, N});

  const double tp = 2 * M_PI;
  for (int j = 0; j < N; ++j) {
    const double t = j * g.h;
    const Vec2 m_ref(a * std::cos(tp * t), b * std::sin(tp * t));
    const Vec2 b_ref(a * std::cos(tp * (t - 0.5 * g.h)),
                     b * std::sin(tp * (t - 0.5 * g.h)));
    // n = h (x2', -x1'), outward for positive orientation
    const Vec2 n_ref(g.h * tp * b * std::cos(tp * t),
                     g.h * tp * a * std::sin(tp * t));
    CHECK((g.m[j] - m_ref).norm() == doctest::Approx(0).epsilon(1e-14));
    CHECK((g.b[j] - b_ref).norm() == doctest::Approx(0).epsilon(1e-14));
    CHECK((g.n[j] - n_ref).norm() < 1e-13);
    // outward: n points away from the center
    CHECK(g.n[j].dot(g.m[j]) > 0);
    // companions straddle the main node at distance h/6 in parameter
    const Vec2 mp_ref(a * std::cos(tp * (t + g.h / 6)),
                      b * std::sin(tp * (t + g.h / 6)));
    CHECK((g.mP[j] - mp_ref).norm() < 1e-14);
    const Vec2 mm_ref(a * std::cos(tp * (t - g.h / 6)),
                      b * std::sin(tp * (t - g.h / 6)));
    CHECK((g.mM[j] - mm_ref).norm() < 1e-14);
  }

  // normals scale like 1/N
  const GridData g2 = sample_closed(ell, 2 * N);
  CHECK(g2.n[0].norm() == doctest::Approx(0.5 * g.n[0].norm()));
}

TEST_CASE("circle and kite are positively oriented closed curves") {
  for (const Curve& c : {curve_circle(Vec2(1, 2), 0.5), curve_kite()}) {
    const GridData g = sample_closed(c, 64);
    // signed area via the shoelace rule with the parametric normal:
    // integral of x . n over the curve equals 2 |area| when n is outward
    double area2 = 0;
    for (int j = 0; j < g.N; ++j) area2 += g.m[j].dot(g.n[j]);
    CHECK(area2 > 0);
  }
}

TEST_CASE("arc sampling symmetry on the half circle") {
  const Curve arc = curve_half_circle();
  const int N = 64;
  const GridData g = sample_arc(arc, N);
  CHECK(g.arc);

  // cosine reparametrization traverses the arc there and back, so the grid
  // is symmetric under j -> N-1-j with reversed normals
  for (int j = 0; j < N; ++j) {
    CHECK((g.m[j] - g.m[N - 1 - j]).norm() < 1e-13);
    CHECK((g.n[j] + g.n[N - 1 - j]).norm() < 1e-13);
    CHECK((g.b[j] - g.b[(N - j) % N]).norm() < 1e-13);
  }
  // the companion grids swap roles under the flip
  for (int j = 0; j < N; ++j) {
    CHECK((g.mP[j] - g.mM[N - 1 - j]).norm() < 1e-13);
    CHECK((g.nP[j] + g.nM[N - 1 - j]).norm() < 1e-13);
  }
  // b_0 sits at the arc tip x(0): phi(0) = 1/2 + cos(-pi)/2 = 0
  CHECK((g.b[0] - arc.pos(0.0)).norm() < 1e-14);
}

TEST_CASE("scene concatenation keeps per-curve offsets") {
  const GridData g1 = sample_closed(curve_circle(Vec2(0, 0), 1), 16);
  const GridData g2 = sample_closed(curve_circle(Vec2(3, 0), 1), 24);
  const GridData g = concat_scenes({g1, g2});
  CHECK(g.N == 40);
  REQUIRE(g.offsets == std::vector<int>{0, 16, 40});
  CHECK((g.m[0] - g1.m[0]).norm() == 0);
  CHECK((g.m[16] - g2.m[0]).norm() == 0);
  CHECK((g.n[39] - g2.n[23]).norm() == 0);
}

TEST_CASE("sampling rejects bad input") {
  CHECK_THROWS(sample_closed(curve_half_circle(), 16));
  CHECK_THROWS(sample_arc(curve_ellipse(4, 3), 16));
  CHECK_THROWS(sample_arc(curve_half_circle(), 15));  // odd
  CHECK_THROWS(sample_closed(curve_ellipse(4, 3), 2));
  CHECK_THROWS(concat_scenes({}));
  CHECK_THROWS(concat_scenes({sample_arc(curve_half_circle(), 8),
                              sample_arc(curve_half_circle(), 8)}));
}

TEST_CASE("curves from JSON") {
  const Curve c1 = curve_from_json(R"({"kind":"ellipse","a":4,"b":3})");
  CHECK((c1.pos(0.0) - Vec2(4, 0)).norm() < 1e-15);
  const Curve c2 = curve_from_json(R"({"kind":"circle","center":[1,1],"r":2})");
  CHECK((c2.pos(0.25) - Vec2(1, 3)).norm() < 1e-13);
  const Curve c3 = curve_from_json(R"({"kind":"half-circle"})");
  CHECK(c3.kind == Curve::Kind::arc);
  CHECK_THROWS(curve_from_json(R"({"kind":"triangle"})"));
}
