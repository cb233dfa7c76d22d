#pragma once
#include <functional>
#include <vector>

#include "ebie/grid.hpp"
#include "ebie/types.hpp"
#include "ebie/waves.hpp"

namespace ebie {

// Multistep (BDF2) convolution quadrature, realized all-at-once: scale the
// history by lambda_R^n, DFT in time, apply or invert the transfer function
// at s_l = delta(lambda_R zeta_l) / k on half the circle, mirror by
// conjugation, transform back and unscale. Columns are time steps t_n = n k,
// rows are stacked output/input components.

struct TransferFunction {
  int n_out, n_in;
  std::function<Eigen::MatrixXcd(cplx)> assemble;
};

double cq_radius(int L);  // lambda_R for history length L
cplx cq_frequency(int l, int L, double lamR, double k);

Eigen::MatrixXcd cq_scaled_dft(const Eigen::MatrixXd& X, double lamR);
// expects columns 0..L/2 filled; fills the conjugate mirror itself
Eigen::MatrixXd cq_scaled_idft(Eigen::MatrixXcd& Yhat, double lamR);

Eigen::MatrixXd cq_forward(const TransferFunction& A, const Eigen::MatrixXd& X,
                           double k);
Eigen::MatrixXd cq_solve(const TransferFunction& A, const Eigen::MatrixXd& B,
                         double k);

// transfer functions of the assembled boundary operators and potentials;
// the double layer includes the Q smoothing of its density
TransferFunction transfer_V(const GridData& g, const Material& mat);
TransferFunction transfer_W(const GridData& g, const Material& mat);
TransferFunction transfer_S(const GridData& g, const Material& mat,
                            std::vector<Vec2> obs);
TransferFunction transfer_D(const GridData& g, const Material& mat,
                            std::vector<Vec2> obs);

// boundary data of a plane pulse at t_n = n k, n = 0..M, one column per step
Eigen::MatrixXd sample_pulse_dirichlet(const GridData& g, const PlanePulse& p,
                                       double k, int M);
Eigen::MatrixXd sample_pulse_neumann(const GridData& g, const PlanePulse& p,
                                     double k, int M);

// interior transient problems; returns the field history at the observation
// points, 2P x (M+1)
Eigen::MatrixXd run_transient_dirichlet(const GridData& g, const Material& mat,
                                        const PlanePulse& p, double T, int M,
                                        const std::vector<Vec2>& obs);
Eigen::MatrixXd run_transient_neumann(const GridData& g, const Material& mat,
                                      const PlanePulse& p, double T, int M,
                                      const std::vector<Vec2>& obs);

}  // namespace ebie
