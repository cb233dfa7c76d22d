#include <doctest.h>

#include <cmath>

#include "ebie/waves.hpp"
#include "golden_data.hpp"

using namespace ebie;

namespace {

// numerical traction from central differences of the displacement field
CVec2 traction_fd(const AnalyticWave& w, const Vec2& z, const Vec2& n,
                  double lam, double mu) {
  const double h = 1e-6;
  Mat2c du;  // du(i,j) = d u_i / d z_j
  for (int j = 0; j < 2; ++j) {
    Vec2 e = Vec2::Zero();
    e[j] = h;
    const CVec2 diff = (w.U(z + e) - w.U(z - e)) / (2 * h);
    du(0, j) = diff.x();
    du(1, j) = diff.y();
  }
  const cplx divU = du(0, 0) + du(1, 1);
  Mat2c sig = mu * (du + du.transpose());
  sig(0, 0) += lam * divU;
  sig(1, 1) += lam * divU;
  return sig * n.cast<cplx>();
}

}  // namespace

TEST_CASE("combined plane wave matches the frozen trace samples") {
  const Material mat(golden::mat0[0], golden::mat0[1], golden::mat0[2]);
  const AnalyticWave w = plane_wave_ps(3.0, mat);
  for (int c = 0; c < golden::n_wave; ++c) {
    const auto* row = golden::wave_cases[c];
    const Vec2 z(row[0].real(), row[0].imag());
    const Vec2 n(row[1].real(), row[1].imag());
    const CVec2 U = w.U(z);
    CHECK(std::abs(U.x() - row[2]) < 1e-12);
    CHECK(std::abs(U.y() - row[3]) < 1e-12);
    const CVec2 t = w.traction(z, n);
    const double scale = std::abs(row[4]) + std::abs(row[5]);
    CHECK(std::abs(t.x() - row[4]) < 1e-10 * scale);
    CHECK(std::abs(t.y() - row[5]) < 1e-10 * scale);
  }
}

TEST_CASE("analytic tractions differentiate the displacement fields") {
  const Material mat(5, 3, 2.5);
  const Vec2 z(1.3, -0.7), n(0.4, 1.1);
  for (const AnalyticWave& w :
       {plane_wave_ps(3.0, mat), p_wave_incident(2.0, mat, Vec2(1, 1)),
        p_wave_incident(3.0, mat, Vec2(0.3, -0.8))}) {
    const CVec2 ref = traction_fd(w, z, n, mat.lam, mat.mu);
    const CVec2 got = w.traction(z, n);
    CHECK((got - ref).norm() < 1e-6 * ref.norm());
  }
}

TEST_CASE("traction is linear in the normal") {
  const Material mat(2, 1, 1);
  const AnalyticWave w = plane_wave_ps(3.0, mat);
  const Vec2 z(0.2, 0.9), n1(1, 0), n2(0, 1);
  const CVec2 sum = w.traction(z, n1) + w.traction(z, n2);
  CHECK((w.traction(z, n1 + n2) - sum).norm() < 1e-14 * sum.norm());
  CHECK((w.traction(z, 3 * n1) - 3 * w.traction(z, n1)).norm() <
        1e-14 * sum.norm());
}

TEST_CASE("pressure wave displaces along its travel direction") {
  const Material mat(5, 3, 2.5);
  const Vec2 d = Vec2(1, 1).normalized();
  const AnalyticWave w = p_wave_incident(3.0, mat, Vec2(1, 1));
  const Vec2 z(0.4, -2.2);
  const CVec2 U = w.U(z);
  CHECK(std::abs(U.x() - U.y()) < 1e-15);
  CHECK(std::abs(U.x() - std::exp(cplx(0, 3.0 / mat.cL * z.dot(d))) *
                             d.x()) < 1e-15);
}

TEST_CASE("pulse step is a C4 ramp") {
  PlanePulse p = smoothed_plane_pulse(Material(5, 3, 2.5),
                                      Vec2(1, 1), 2.3, 0.8);
  CHECK(p.step(-0.1) == 0.0);
  CHECK(p.step(0.0) == 0.0);
  CHECK(p.step(0.8) == 1.0);
  CHECK(p.step(5.0) == 1.0);
  CHECK(p.step(0.4) == doctest::Approx(0.5));  // odd symmetry about midpoint
  // quintic touchdown: Hs(y) ~ 126 (y/width)^5 near zero
  const double y = 1e-2 * 0.8;
  CHECK(p.step(y) == doctest::Approx(126 * std::pow(1e-2, 5)).epsilon(0.05));
  // derivative consistency across the ramp
  for (double yy : {0.1, 0.35, 0.62}) {
    const double fd = (p.step(yy + 1e-6) - p.step(yy - 1e-6)) / 2e-6;
    CHECK(p.step_deriv(yy) == doctest::Approx(fd).epsilon(1e-7));
    const double pfd = (p.profile(yy + 1e-6) - p.profile(yy - 1e-6)) / 2e-6;
    CHECK(p.profile_deriv(yy) == doctest::Approx(pfd).epsilon(1e-7));
  }
  CHECK(p.step_deriv(0.0) == 0.0);
  CHECK(p.step_deriv(0.8) == 0.0);
}

TEST_CASE("pulse displacement and traction") {
  const Material mat(5, 3, 2.5);
  const Vec2 d = Vec2(1, 0);
  const PlanePulse p = smoothed_plane_pulse(mat, d, 2.3, 1.0);

  // causal: nothing before the arrival front
  CHECK(p.displacement(Vec2(0, 0), 2.3).norm() == 0.0);
  CHECK(p.displacement(Vec2(1, 0), 2.3 + 0.9 / mat.cL).norm() == 0.0);
  CHECK(p.displacement(Vec2(1, 0), 2.3 + 1.5 / mat.cL).norm() > 0.0);

  // traction equals the stress of the displacement, via spatial differences
  const double t = 3.1;
  const Vec2 z(0.3, 0.2), n(0.5, -1.0);
  AnalyticWave frozen;
  frozen.U = [&](const Vec2& zz) -> CVec2 {
    return p.displacement(zz, t).cast<cplx>();
  };
  const CVec2 ref = traction_fd(frozen, z, n, mat.lam, mat.mu);
  const Vec2 got = p.traction(z, t, n);
  CHECK((got.cast<cplx>() - ref).norm() < 1e-6 * (ref.norm() + 1));
}
