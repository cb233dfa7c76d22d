#pragma once
#include <vector>

#include "ebie/operators.hpp"

namespace ebie {

// randomized observation points on a circle; the seed is part of the
// experiment definition so runs are reproducible
std::vector<Vec2> observation_circle(double radius, int count, unsigned seed,
                                     const Vec2& center = Vec2::Zero());

// relative max-norm error over the stacked components
double error_metrics(const Eigen::VectorXcd& approx,
                     const Eigen::VectorXcd& exact);

// log2 of the ratio of successive differences on three nested grids
double three_grid_ecr(const Eigen::VectorXcd& uN, const Eigen::VectorXcd& u2N,
                      const Eigen::VectorXcd& u4N);

// mass system M phi = rhs, solved per segment and component with the FFT
// diagonalization of the circulant stencil
Eigen::VectorXcd mass_solve(const GridData& g, const Eigen::VectorXcd& rhs);

struct TraceSolution {
  Eigen::VectorXcd beta0, beta1;  // sampled boundary data
  Eigen::VectorXcd phi, phi_eff;  // nodal Dirichlet density and its Q image
  Eigen::VectorXcd lambda;        // nodal traction density
};

// Dirichlet problem via the single layer equation V lambda = (1/2) beta0 + K phi
TraceSolution solve_dirichlet_first_kind(const GridData& g, cplx s,
                                         const Material& mat,
                                         const AnalyticWave& wave);

// Dirichlet problem via (-1/2 M + J) lambda = -W phi
TraceSolution solve_dirichlet_second_kind(const GridData& g, cplx s,
                                          const Material& mat,
                                          const AnalyticWave& wave);

// field reconstruction S lambda - D phi_eff at the observation points
Eigen::VectorXcd represent_field(const GridData& g, cplx s, const Material& mat,
                                 const Eigen::VectorXcd& lambda,
                                 const Eigen::VectorXcd& phi_eff,
                                 const std::vector<Vec2>& obs);

// crack (open arc) scattering of an incident wave: solve for the jump
// density and evaluate the scattered field
Eigen::VectorXcd solve_crack_dirichlet(const GridData& g, cplx s,
                                       const Material& mat,
                                       const AnalyticWave& inc);
Eigen::VectorXcd solve_crack_neumann(const GridData& g, cplx s,
                                     const Material& mat,
                                     const AnalyticWave& inc);
Eigen::VectorXcd crack_field_dirichlet(const GridData& g, cplx s,
                                       const Material& mat,
                                       const Eigen::VectorXcd& eta,
                                       const std::vector<Vec2>& obs);
Eigen::VectorXcd crack_field_neumann(const GridData& g, cplx s,
                                     const Material& mat,
                                     const Eigen::VectorXcd& psi,
                                     const std::vector<Vec2>& obs);

}  // namespace ebie
