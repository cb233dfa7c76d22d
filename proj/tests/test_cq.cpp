#include <doctest.h>

#include <cmath>

#include "ebie/cq.hpp"
#include "ebie/mixing.hpp"
#include "ebie/operators.hpp"

using namespace ebie;

namespace {

TransferFunction scalar_tf(std::function<cplx(cplx)> f) {
  return {1, 1, [f = std::move(f)](cplx s) {
            return Eigen::MatrixXcd::Constant(1, 1, f(s)).eval();
          }};
}

const TransferFunction SHIFT = scalar_tf([](cplx s) { return s + 2.0; });

}  // namespace

TEST_CASE("contour radius balances damping and roundoff") {
  CHECK(cq_radius(41) == doctest::Approx(std::pow(1e-12, 1.0 / 82.0)));
  CHECK(cq_radius(10) < 1.0);
  CHECK(cq_radius(10) > cq_radius(5));
}

TEST_CASE("scaled transforms invert each other") {
  for (int L : {9, 10}) {
    Eigen::MatrixXd X(3, L);
    for (int i = 0; i < 3; ++i)
      for (int n = 0; n < L; ++n) X(i, n) = std::sin(1.1 * i + 0.37 * n);
    const double lamR = cq_radius(L);
    Eigen::MatrixXcd Z = cq_scaled_dft(X, lamR);
    const Eigen::MatrixXd back = cq_scaled_idft(Z, lamR);
    CHECK((back - X).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("differentiation symbol reproduces the multistep stencil") {
  const int M = 40;
  const double k = 0.05;
  Eigen::MatrixXd X = Eigen::MatrixXd::Zero(1, M + 1);
  X(0, 0) = 1.0;
  const Eigen::MatrixXd Y =
      cq_forward(scalar_tf([](cplx s) { return s; }), X, k);
  CHECK(std::abs(Y(0, 0) - 1.5 / k) < 1e-11 / k);
  CHECK(std::abs(Y(0, 1) + 2.0 / k) < 1e-11 / k);
  CHECK(std::abs(Y(0, 2) - 0.5 / k) < 1e-11 / k);
  for (int n = 3; n <= M; ++n) CHECK(std::abs(Y(0, n)) < 3e-9 / k);
}

TEST_CASE("differentiating a smooth history is second order accurate") {
  const int M = 80;
  const double k = 2.0 / M;
  Eigen::MatrixXd X(1, M + 1);
  for (int n = 0; n <= M; ++n) X(0, n) = std::sin(n * k);
  const Eigen::MatrixXd Y =
      cq_forward(scalar_tf([](cplx s) { return s; }), X, k);
  double worst = 0;
  for (int n = 2; n <= M; ++n)
    worst = std::max(worst, std::abs(Y(0, n) - std::cos(n * k)));
  CHECK(worst < 5e-4);
}

TEST_CASE("integration error shrinks at second order") {
  auto exact = [](double t) {
    return 6.0 - std::exp(-t) * (t * t * t + 3 * t * t + 6 * t + 6);
  };
  const TransferFunction inv = scalar_tf([](cplx s) { return 1.0 / s; });
  std::vector<double> errs;
  for (int M : {40, 80}) {
    const double k = 2.0 / M;
    Eigen::MatrixXd X(1, M + 1);
    for (int n = 0; n <= M; ++n) {
      const double t = n * k;
      X(0, n) = t * t * t * std::exp(-t);
    }
    const Eigen::MatrixXd Y = cq_forward(inv, X, k);
    double worst = 0;
    for (int n = 0; n <= M; ++n)
      worst = std::max(worst, std::abs(Y(0, n) - exact(n * k)));
    errs.push_back(worst);
  }
  CHECK(errs[1] < 1e-3);
  CHECK(errs[0] / errs[1] > 3.0);
}

TEST_CASE("convolution output stays quiet before the input starts") {
  const int M = 50, n0 = 15;
  const double k = 0.05;
  Eigen::MatrixXd X = Eigen::MatrixXd::Zero(1, M + 1);
  for (int n = n0; n <= M; ++n) {
    const double u = (n - n0) * k;
    X(0, n) = u * u;
  }
  const Eigen::MatrixXd Y = cq_forward(SHIFT, X, k);
  const double scale = Y.cwiseAbs().maxCoeff();
  for (int n = 0; n < n0; ++n) CHECK(std::abs(Y(0, n)) < 1e-7 * scale);
}

TEST_CASE("solve undoes forward, scalar and matrix valued") {
  const int M = 48;
  const double k = 0.04;
  Eigen::MatrixXd X(1, M + 1);
  for (int n = 0; n <= M; ++n) X(0, n) = std::sin(0.9 * n * k);
  Eigen::MatrixXd back = cq_solve(SHIFT, cq_forward(SHIFT, X, k), k);
  CHECK((back - X).cwiseAbs().maxCoeff() < 1e-8);

  const TransferFunction mtf{2, 2, [](cplx s) {
                               Eigen::MatrixXcd A(2, 2);
                               A << s + 2.0, 1.0, 0.5, s + 3.0;
                               return A;
                             }};
  Eigen::MatrixXd X2(2, M + 1);
  for (int n = 0; n <= M; ++n) {
    X2(0, n) = std::sin(0.9 * n * k);
    X2(1, n) = std::cos(1.3 * n * k) - 1.0;
  }
  back = cq_solve(mtf, cq_forward(mtf, X2, k), k);
  CHECK((back - X2).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("boundary transfer functions expose operator shapes") {
  const Material mat(5, 3, 2.5);
  const GridData g = sample_closed(curve_ellipse(4, 3), 8);
  const std::vector<Vec2> obs{Vec2(2.5, 0.3), Vec2(-1.8, 2.2),
                              Vec2(0.4, -2.9)};
  const TransferFunction tv = transfer_V(g, mat);
  const TransferFunction tw = transfer_W(g, mat);
  const TransferFunction ts = transfer_S(g, mat, obs);
  const TransferFunction td = transfer_D(g, mat, obs);
  CHECK(tv.n_out == 16);
  CHECK(tv.n_in == 16);
  CHECK(tw.n_out == 16);
  CHECK(ts.n_out == 2 * (int)obs.size());
  CHECK(ts.n_in == 16);
  const cplx s(1.5, 0.7);
  CHECK(tv.assemble(s).rows() == 16);
  CHECK(tv.assemble(s).cols() == 16);
  CHECK(ts.assemble(s).rows() == ts.n_out);
  // the double layer transfer folds the trace average into its columns
  Eigen::MatrixXcd Dm = potential_D(g, obs, s, mat);
  mix_cols(Dm, matrix_Q(g.N), extended_offsets(g));
  CHECK((td.assemble(s) - Dm).cwiseAbs().maxCoeff() == 0);
}

TEST_CASE("pulse sampling is causal and tracks the wave") {
  const GridData g = sample_closed(curve_ellipse(4, 3), 32);
  const PlanePulse p = smoothed_plane_pulse(Material(5, 3, 2.5),
                                            Vec2(1, 1).normalized(), 2.3, 1.0);
  const int M = 30;
  const double k = 0.1;
  const Eigen::MatrixXd B0 = sample_pulse_dirichlet(g, p, k, M);
  const Eigen::MatrixXd B1 = sample_pulse_neumann(g, p, k, M);
  REQUIRE(B0.rows() == 64);
  REQUIRE(B0.cols() == M + 1);
  REQUIRE(B1.rows() == 64);
  // nothing has reached the obstacle in the first few steps
  CHECK(B0.leftCols(3).cwiseAbs().maxCoeff() == 0);
  CHECK(B1.leftCols(3).cwiseAbs().maxCoeff() == 0);
  CHECK(B0.cwiseAbs().maxCoeff() > 0.1);
  // the averaged samples stay close to the nodal displacement
  const int nn = M;
  double worst = 0;
  for (int j = 0; j < g.N; ++j) {
    const Vec2 u = p.displacement(g.m[j], nn * k);
    worst = std::max(worst, std::abs(B0(j, nn) - u.x()));
    worst = std::max(worst, std::abs(B0(g.N + j, nn) - u.y()));
  }
  CHECK(worst < 0.05);
}
