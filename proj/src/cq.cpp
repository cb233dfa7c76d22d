#include "ebie/cq.hpp"

#include <fftw3.h>

#include <numbers>

#include "ebie/mixing.hpp"
#include "ebie/operators.hpp"

namespace ebie {

double cq_radius(int L) { return std::pow(1e-12, 1.0 / (2.0 * L)); }

cplx cq_frequency(int l, int L, double lamR, double k) {
  const cplx zeta =
      lamR * std::exp(cplx(0, -2 * std::numbers::pi * l / (double)L));
  const cplx d = (1.0 - zeta) + 0.5 * (1.0 - zeta) * (1.0 - zeta);
  return d / k;
}

namespace {
void fft_time_axis(Eigen::MatrixXcd& Z, int sign) {
  const int R = (int)Z.rows(), L = (int)Z.cols();
  const int n = L;
  fftw_plan plan = fftw_plan_many_dft(
      1, &n, R, reinterpret_cast<fftw_complex*>(Z.data()), nullptr, R, 1,
      reinterpret_cast<fftw_complex*>(Z.data()), nullptr, R, 1, sign,
      FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
}
}  // namespace

Eigen::MatrixXcd cq_scaled_dft(const Eigen::MatrixXd& X, double lamR) {
  const int L = (int)X.cols();
  Eigen::MatrixXcd Z(X.rows(), L);
  double sc = 1.0;
  for (int nn = 0; nn < L; ++nn, sc *= lamR)
    Z.col(nn) = (X.col(nn) * sc).cast<cplx>();
  fft_time_axis(Z, FFTW_FORWARD);
  return Z;
}

Eigen::MatrixXd cq_scaled_idft(Eigen::MatrixXcd& Yhat, double lamR) {
  const int L = (int)Yhat.cols();
  for (int l = 1; l < L - l; ++l) Yhat.col(L - l) = Yhat.col(l).conjugate();
  fft_time_axis(Yhat, FFTW_BACKWARD);
  Eigen::MatrixXd out(Yhat.rows(), L);
  double sc = 1.0;
  for (int nn = 0; nn < L; ++nn, sc *= lamR)
    out.col(nn) = Yhat.col(nn).real() / (sc * L);
  return out;
}

Eigen::MatrixXd cq_forward(const TransferFunction& A, const Eigen::MatrixXd& X,
                           double k) {
  const int L = (int)X.cols();
  const double lamR = cq_radius(L);
  const Eigen::MatrixXcd Z = cq_scaled_dft(X, lamR);
  Eigen::MatrixXcd Yh(A.n_out, L);
  for (int l = 0; l <= L / 2; ++l) {
    const cplx s = cq_frequency(l, L, lamR, k);
    Yh.col(l) = A.assemble(s) * Z.col(l);
  }
  return cq_scaled_idft(Yh, lamR);
}

Eigen::MatrixXd cq_solve(const TransferFunction& A, const Eigen::MatrixXd& B,
                         double k) {
  const int L = (int)B.cols();
  const double lamR = cq_radius(L);
  const Eigen::MatrixXcd Z = cq_scaled_dft(B, lamR);
  Eigen::MatrixXcd Yh(A.n_in, L);
  for (int l = 0; l <= L / 2; ++l) {
    const cplx s = cq_frequency(l, L, lamR, k);
    Yh.col(l) =
        Eigen::PartialPivLU<Eigen::MatrixXcd>(A.assemble(s)).solve(Z.col(l));
  }
  return cq_scaled_idft(Yh, lamR);
}

TransferFunction transfer_V(const GridData& g, const Material& mat) {
  return {2 * g.N, 2 * g.N,
          [g, mat](cplx s) { return assemble_V(g, s, mat); }};
}

TransferFunction transfer_W(const GridData& g, const Material& mat) {
  return {2 * g.N, 2 * g.N,
          [g, mat](cplx s) { return assemble_W(g, s, mat); }};
}

TransferFunction transfer_S(const GridData& g, const Material& mat,
                            std::vector<Vec2> obs) {
  const int P = (int)obs.size();
  return {2 * P, 2 * g.N, [g, mat, obs = std::move(obs)](cplx s) {
            return potential_S(g, obs, s, mat);
          }};
}

TransferFunction transfer_D(const GridData& g, const Material& mat,
                            std::vector<Vec2> obs) {
  const int P = (int)obs.size();
  return {2 * P, 2 * g.N, [g, mat, obs = std::move(obs)](cplx s) {
            Eigen::MatrixXcd A = potential_D(g, obs, s, mat);
            mix_cols(A, matrix_Q(g.N), extended_offsets(g));
            return A;
          }};
}

Eigen::MatrixXd sample_pulse_dirichlet(const GridData& g, const PlanePulse& p,
                                       double k, int M) {
  const int N = g.N;
  const auto [Pp, Pm] = matrix_Ppm(N);
  Eigen::MatrixXd B(2 * N, M + 1);
  Eigen::VectorXd up(2 * N), um(2 * N);
  for (int nn = 0; nn <= M; ++nn) {
    const double t = nn * k;
    for (int j = 0; j < N; ++j) {
      const Vec2 a = p.displacement(g.mP[j], t), b = p.displacement(g.mM[j], t);
      up[j] = a.x(), up[N + j] = a.y();
      um[j] = b.x(), um[N + j] = b.y();
    }
    B.col(nn) = apply_real(Pp, up, g.offsets) + apply_real(Pm, um, g.offsets);
  }
  return B;
}

Eigen::MatrixXd sample_pulse_neumann(const GridData& g, const PlanePulse& p,
                                     double k, int M) {
  const int N = g.N;
  const auto [Pp, Pm] = matrix_Ppm(N);
  const BlockCirculant Q = matrix_Q(N);
  Eigen::MatrixXd B(2 * N, M + 1);
  Eigen::VectorXd tp(2 * N), tm(2 * N);
  for (int nn = 0; nn <= M; ++nn) {
    const double t = nn * k;
    for (int j = 0; j < N; ++j) {
      const Vec2 a = p.traction(g.mP[j], t, g.nP[j]),
                 b = p.traction(g.mM[j], t, g.nM[j]);
      tp[j] = a.x(), tp[N + j] = a.y();
      tm[j] = b.x(), tm[N + j] = b.y();
    }
    B.col(nn) = apply_real(
        Q, apply_real(Pp, tp, g.offsets) + apply_real(Pm, tm, g.offsets),
        g.offsets);
  }
  return B;
}

Eigen::MatrixXd run_transient_dirichlet(const GridData& g, const Material& mat,
                                        const PlanePulse& p, double T, int M,
                                        const std::vector<Vec2>& obs) {
  const double k = T / M;
  const Eigen::MatrixXd B0 = sample_pulse_dirichlet(g, p, k, M);
  const Eigen::MatrixXd eta = cq_solve(transfer_V(g, mat), B0, k);
  return cq_forward(transfer_S(g, mat, obs), eta, k);
}

Eigen::MatrixXd run_transient_neumann(const GridData& g, const Material& mat,
                                      const PlanePulse& p, double T, int M,
                                      const std::vector<Vec2>& obs) {
  const double k = T / M;
  const Eigen::MatrixXd B1 = sample_pulse_neumann(g, p, k, M);
  const Eigen::MatrixXd psi = -cq_solve(transfer_W(g, mat), B1, k);
  return cq_forward(transfer_D(g, mat, obs), psi, k);
}

}  // namespace ebie
