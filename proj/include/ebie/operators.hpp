#pragma once
#include <utility>
#include <vector>

#include "ebie/grid.hpp"
#include "ebie/kernels.hpp"
#include "ebie/types.hpp"
#include "ebie/waves.hpp"

namespace ebie {

// Dense component-blocked 2N x 2N boundary operators. Every kernel is
// evaluated on the two companion grids and averaged back to the main grid
// with the P+/P- stencils; K, J and W pick up the extra Q and D mixings of
// the method. Entries with Re(s|r|) past the underflow horizon are skipped
// by the kernel layer, which makes high-frequency assemblies cheap.
struct Operators {
  Eigen::MatrixXcd V, K, J, W;
};

enum : unsigned { OP_V = 1, OP_K = 2, OP_J = 4, OP_W = 8 };

Operators assemble_ops(const GridData& g, cplx s, const Material& mat,
                       unsigned mask);

Eigen::MatrixXcd assemble_V(const GridData& g, cplx s, const Material& mat);
Eigen::MatrixXcd assemble_K(const GridData& g, cplx s, const Material& mat);
Eigen::MatrixXcd assemble_J(const GridData& g, cplx s, const Material& mat);
Eigen::MatrixXcd assemble_W(const GridData& g, cplx s, const Material& mat);

// potential evaluation matrices, 2P x 2N for P observation points; the
// paired version shares the kernel scalar evaluations between both layers
Eigen::MatrixXcd potential_S(const GridData& g, const std::vector<Vec2>& obs,
                             cplx s, const Material& mat);
Eigen::MatrixXcd potential_D(const GridData& g, const std::vector<Vec2>& obs,
                             cplx s, const Material& mat);
std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> potential_SD(
    const GridData& g, const std::vector<Vec2>& obs, cplx s,
    const Material& mat, bool wantS, bool wantD);

// Dirichlet and Neumann data of a wave sampled the way the scheme wants
// them: beta0 = P+ u(m+) + P- u(m-), beta1 = Q (P+ t(m+) + P- t(m-)).
// Tractions are evaluated against the h-scaled normals, so beta1 carries
// the same length factor as the assembled W.
std::pair<Eigen::VectorXcd, Eigen::VectorXcd> sample_incident(
    const GridData& g, const AnalyticWave& wave);

}  // namespace ebie
