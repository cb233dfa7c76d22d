#include <doctest.h>

#include <cmath>

#include "ebie/mixing.hpp"
#include "ebie/solvers.hpp"

using namespace ebie;

namespace {

const Material MAT(5, 3, 2.5);
const cplx S3(0, -3);

Eigen::VectorXcd exact_traces(const GridData& g, const AnalyticWave& w,
                              bool traction) {
  const int N = g.N;
  Eigen::VectorXcd v(2 * N);
  for (int j = 0; j < N; ++j) {
    const CVec2 a = traction ? w.traction(g.m[j], g.n[j]) : w.U(g.m[j]);
    v[j] = a.x(), v[N + j] = a.y();
  }
  return v;
}

AnalyticWave doubled(const AnalyticWave& w) {
  AnalyticWave d;
  d.U = [w](const Vec2& z) { return CVec2(2.0 * w.U(z)); };
  d.traction = [w](const Vec2& z, const Vec2& n) {
    return CVec2(2.0 * w.traction(z, n));
  };
  return d;
}

}  // namespace

TEST_CASE("observation points are reproducible and on the circle") {
  const auto a = observation_circle(2.0, 10, 1);
  const auto b = observation_circle(2.0, 10, 1);
  const auto c = observation_circle(2.0, 10, 2);
  REQUIRE(a.size() == 10);
  double moved = 0;
  for (int p = 0; p < 10; ++p) {
    CHECK((a[p] - b[p]).norm() == 0);
    CHECK(a[p].norm() == doctest::Approx(2.0));
    moved = std::max(moved, (a[p] - c[p]).norm());
  }
  CHECK(moved > 1e-3);  // different seed, different points
  const auto d = observation_circle(1.0, 4, 3, Vec2(5, 5));
  for (const auto& p : d) CHECK((p - Vec2(5, 5)).norm() == doctest::Approx(1.0));
}

TEST_CASE("error metric and three grid rate helpers") {
  Eigen::VectorXcd ex(2), ap(2);
  ex << cplx(1, 0), cplx(0, 2);
  ap << cplx(1.1, 0), cplx(0, 2);
  CHECK(error_metrics(ap, ex) == doctest::Approx(0.05));

  Eigen::VectorXcd u(1), u2(1), u4(1);
  u << cplx(5.0, 0);
  u2 << cplx(5.0 + 4e-3, 0);
  u4 << cplx(5.0 + 5e-3, 0);
  CHECK(three_grid_ecr(u, u2, u4) == doctest::Approx(2.0));
}

TEST_CASE("mass solve inverts the dense mass matrix, also on scenes") {
  const GridData single = sample_closed(curve_ellipse(4, 3), 20);
  const GridData scene =
      concat_scenes({sample_closed(curve_circle(Vec2(0, 0), 1), 12),
                     sample_closed(curve_circle(Vec2(3, 0), 1), 20)});
  for (const GridData& g : {single, scene}) {
    Eigen::VectorXcd rhs(2 * g.N);
    for (int i = 0; i < 2 * g.N; ++i)
      rhs[i] = cplx(std::sin(0.7 * i + 0.2), std::cos(1.3 * i));
    const Eigen::VectorXcd phi = mass_solve(g, rhs);
    const Eigen::VectorXcd back = mass_matrix(g).cast<cplx>() * phi;
    CHECK((back - rhs).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("discrete Calderon identity residual decays with the grid") {
  const Curve ell = curve_ellipse(4, 3);
  const AnalyticWave wave = plane_wave_ps(3.0, MAT);
  std::vector<double> resid;
  for (int N : {60, 120, 240}) {
    const GridData g = sample_closed(ell, N);
    const auto [beta0, beta1] = sample_incident(g, wave);
    const Eigen::VectorXcd phi = mass_solve(g, beta0);
    const Eigen::VectorXcd lam = exact_traces(g, wave, true);
    const Operators ops = assemble_ops(g, S3, MAT, OP_V | OP_K);
    const Eigen::VectorXcd r = ops.V * lam - 0.5 * beta0 - ops.K * phi;
    resid.push_back(r.cwiseAbs().maxCoeff() / lam.cwiseAbs().maxCoeff());
  }
  CHECK(resid[0] / resid[1] > 4.5);
  CHECK(resid[1] / resid[2] > 4.5);
  CHECK(resid[2] < 5e-4);
}

TEST_CASE("first kind solve converges at the expected pace") {
  const Curve ell = curve_ellipse(4, 3);
  const AnalyticWave wave = plane_wave_ps(3.0, MAT);
  double prevL = 0, prevP = 0;
  for (int N : {60, 120}) {
    const GridData g = sample_closed(ell, N);
    const TraceSolution sol = solve_dirichlet_first_kind(g, S3, MAT, wave);
    const double EL = error_metrics(sol.lambda, exact_traces(g, wave, true));
    const double EP = error_metrics(sol.phi_eff, exact_traces(g, wave, false));
    if (N == 120) {
      CHECK(EL < 5e-3);
      CHECK(EP < 5e-5);
      CHECK(prevL / EL > 5.0);   // third order in h
      CHECK(prevP / EP > 10.0);  // fourth order in h
    }
    prevL = EL, prevP = EP;
  }
}

TEST_CASE("second kind solve agrees with the first kind solve") {
  const Curve ell = curve_ellipse(4, 3);
  const AnalyticWave wave = plane_wave_ps(3.0, MAT);
  std::vector<double> gap;
  for (int N : {48, 96}) {
    const GridData g = sample_closed(ell, N);
    const TraceSolution s1 = solve_dirichlet_first_kind(g, S3, MAT, wave);
    const TraceSolution s2 = solve_dirichlet_second_kind(g, S3, MAT, wave);
    gap.push_back((s1.lambda - s2.lambda).cwiseAbs().maxCoeff() /
                  s1.lambda.cwiseAbs().maxCoeff());
    // both solve the same Dirichlet problem
    CHECK(error_metrics(s2.lambda, exact_traces(g, wave, true)) < 0.2);
  }
  CHECK(std::log2(gap[0] / gap[1]) > 2.2);
}

TEST_CASE("solves are linear in the data") {
  const GridData g = sample_closed(curve_ellipse(4, 3), 40);
  const AnalyticWave wave = plane_wave_ps(3.0, MAT);
  const TraceSolution one = solve_dirichlet_first_kind(g, S3, MAT, wave);
  const TraceSolution two =
      solve_dirichlet_first_kind(g, S3, MAT, doubled(wave));
  CHECK((two.lambda - 2.0 * one.lambda).cwiseAbs().maxCoeff() <
        1e-14 * one.lambda.cwiseAbs().maxCoeff());
  CHECK((two.phi - 2.0 * one.phi).cwiseAbs().maxCoeff() <
        1e-14 * one.phi.cwiseAbs().maxCoeff());

  const auto obs = observation_circle(2.0, 5, 1);
  const Eigen::VectorXcd u1 =
      represent_field(g, S3, MAT, one.lambda, one.phi_eff, obs);
  const Eigen::VectorXcd u2 =
      represent_field(g, S3, MAT, two.lambda, two.phi_eff, obs);
  CHECK((u2 - 2.0 * u1).cwiseAbs().maxCoeff() <
        1e-13 * u1.cwiseAbs().maxCoeff());
}

TEST_CASE("crack densities inherit the arc symmetry") {
  const GridData g = sample_arc(curve_half_circle(), 32);
  const AnalyticWave inc = p_wave_incident(3.0, MAT, Vec2(1, 1));
  const Eigen::VectorXcd eta = solve_crack_dirichlet(g, S3, MAT, inc);
  const Eigen::VectorXcd psi = solve_crack_neumann(g, S3, MAT, inc);
  const int N = g.N;
  const double se = eta.cwiseAbs().maxCoeff(), sp = psi.cwiseAbs().maxCoeff();
  for (int c = 0; c < 2; ++c)
    for (int j = 0; j < N; ++j) {
      // the two traversals of the arc see the same jump, with the normal
      // flip turning the Neumann density odd
      CHECK(std::abs(eta[c * N + j] - eta[c * N + N - 1 - j]) < 1e-12 * se);
      CHECK(std::abs(psi[c * N + j] + psi[c * N + N - 1 - j]) < 1e-12 * sp);
    }
  // scattered fields are nonzero where the incident wave hits
  const auto obs = observation_circle(5.0, 4, 1);
  CHECK(crack_field_dirichlet(g, S3, MAT, eta, obs).cwiseAbs().maxCoeff() >
        1e-4);
  CHECK(crack_field_neumann(g, S3, MAT, psi, obs).cwiseAbs().maxCoeff() >
        1e-4);
}
