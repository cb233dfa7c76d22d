#include "ebie/solvers.hpp"

#include <fftw3.h>

#include <numbers>
#include <random>
#include <stdexcept>

namespace ebie {

std::vector<Vec2> observation_circle(double radius, int count, unsigned seed,
                                     const Vec2& center) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> ang(0.0, 2 * std::numbers::pi);
  std::vector<Vec2> z(count);
  for (auto& p : z) {
    const double th = ang(gen);
    p = center + radius * Vec2(std::cos(th), std::sin(th));
  }
  return z;
}

double error_metrics(const Eigen::VectorXcd& approx,
                     const Eigen::VectorXcd& exact) {
  return (approx - exact).cwiseAbs().maxCoeff() / exact.cwiseAbs().maxCoeff();
}

double three_grid_ecr(const Eigen::VectorXcd& uN, const Eigen::VectorXcd& u2N,
                      const Eigen::VectorXcd& u4N) {
  return std::log2((uN - u2N).cwiseAbs().maxCoeff() /
                   (u2N - u4N).cwiseAbs().maxCoeff());
}

Eigen::VectorXcd mass_solve(const GridData& g, const Eigen::VectorXcd& rhs) {
  const int N = g.N;
  if (rhs.size() != 2 * N) throw std::invalid_argument("mass_solve: size");
  Eigen::VectorXcd out(2 * N);
  for (size_t seg = 0; seg + 1 < g.offsets.size(); ++seg) {
    const int lo = g.offsets[seg], n = g.offsets[seg + 1] - lo;
    std::vector<std::complex<double>> buf(n);
    fftw_plan fwd = fftw_plan_dft_1d(
        n, reinterpret_cast<fftw_complex*>(buf.data()),
        reinterpret_cast<fftw_complex*>(buf.data()), FFTW_FORWARD,
        FFTW_ESTIMATE);
    fftw_plan bwd = fftw_plan_dft_1d(
        n, reinterpret_cast<fftw_complex*>(buf.data()),
        reinterpret_cast<fftw_complex*>(buf.data()), FFTW_BACKWARD,
        FFTW_ESTIMATE);
    for (int c = 0; c < 2; ++c) {
      const int base = c * N + lo;
      for (int i = 0; i < n; ++i) buf[i] = rhs[base + i];
      fftw_execute(fwd);
      for (int l = 0; l < n; ++l) {
        const double sym =
            7.0 / 9 + (2.0 / 9) * std::cos(2 * std::numbers::pi * l / n);
        buf[l] /= sym;
      }
      fftw_execute(bwd);
      for (int i = 0; i < n; ++i) out[base + i] = buf[i] / (double)n;
    }
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
  }
  return out;
}

TraceSolution solve_dirichlet_first_kind(const GridData& g, cplx s,
                                         const Material& mat,
                                         const AnalyticWave& wave) {
  TraceSolution sol;
  std::tie(sol.beta0, sol.beta1) = sample_incident(g, wave);
  sol.phi = mass_solve(g, sol.beta0);
  sol.phi_eff = apply(matrix_Q(g.N), sol.phi, g.offsets);
  const Operators ops = assemble_ops(g, s, mat, OP_V | OP_K);
  const Eigen::VectorXcd rhs = 0.5 * sol.beta0 + ops.K * sol.phi;
  sol.lambda = Eigen::PartialPivLU<Eigen::MatrixXcd>(ops.V).solve(rhs);
  return sol;
}

TraceSolution solve_dirichlet_second_kind(const GridData& g, cplx s,
                                          const Material& mat,
                                          const AnalyticWave& wave) {
  TraceSolution sol;
  std::tie(sol.beta0, sol.beta1) = sample_incident(g, wave);
  sol.phi = mass_solve(g, sol.beta0);
  sol.phi_eff = apply(matrix_Q(g.N), sol.phi, g.offsets);
  const Operators ops = assemble_ops(g, s, mat, OP_J | OP_W);
  const Eigen::MatrixXd Mbig = mass_matrix(g);
  const Eigen::MatrixXcd A = ops.J - 0.5 * Mbig.cast<cplx>();
  const Eigen::VectorXcd rhs = -(ops.W * sol.phi);
  sol.lambda = Eigen::PartialPivLU<Eigen::MatrixXcd>(A).solve(rhs);
  return sol;
}

Eigen::VectorXcd represent_field(const GridData& g, cplx s, const Material& mat,
                                 const Eigen::VectorXcd& lambda,
                                 const Eigen::VectorXcd& phi_eff,
                                 const std::vector<Vec2>& obs) {
  const auto [S, D] = potential_SD(g, obs, s, mat, true, true);
  return S * lambda - D * phi_eff;
}

Eigen::VectorXcd solve_crack_dirichlet(const GridData& g, cplx s,
                                       const Material& mat,
                                       const AnalyticWave& inc) {
  const auto [beta0, beta1] = sample_incident(g, inc);
  Eigen::MatrixXcd A = assemble_V(g, s, mat);
  A += matrix_H(g).cast<cplx>();
  return Eigen::PartialPivLU<Eigen::MatrixXcd>(A).solve((-beta0).eval());
}

Eigen::VectorXcd solve_crack_neumann(const GridData& g, cplx s,
                                     const Material& mat,
                                     const AnalyticWave& inc) {
  const auto [beta0, beta1] = sample_incident(g, inc);
  Eigen::MatrixXcd A = assemble_W(g, s, mat);
  A += matrix_absH(g).cast<cplx>();
  return Eigen::PartialPivLU<Eigen::MatrixXcd>(A).solve(beta1);
}

Eigen::VectorXcd crack_field_dirichlet(const GridData& g, cplx s,
                                       const Material& mat,
                                       const Eigen::VectorXcd& eta,
                                       const std::vector<Vec2>& obs) {
  return potential_S(g, obs, s, mat) * eta;
}

Eigen::VectorXcd crack_field_neumann(const GridData& g, cplx s,
                                     const Material& mat,
                                     const Eigen::VectorXcd& psi,
                                     const std::vector<Vec2>& obs) {
  const Eigen::VectorXcd psi_eff = apply(matrix_Q(g.N), psi, g.offsets);
  return potential_D(g, obs, s, mat) * psi_eff;
}

}  // namespace ebie
