#pragma once
#include "ebie/grid.hpp"
#include "ebie/types.hpp"

namespace ebie {

// All the coupling matrices of the method are circulant with bandwidth <= 1
// per scalar component, so they are stored as a three-entry stencil and
// applied matrix-free. first_row() materializes the defining row for tests.
struct BlockCirculant {
  int N;
  double diag, sup, sub;  // entries (i,i), (i,i+1), (i,i-1) cyclically
  Eigen::VectorXd first_row() const {
    Eigen::VectorXd r = Eigen::VectorXd::Zero(N);
    r[0] = diag;
    if (N > 1) r[1] = sup, r[N - 1] = sub;
    return r;
  }
};

BlockCirculant matrix_Q(int N);                           // (1/24) TC(22,1,0,...,0,1)
std::pair<BlockCirculant, BlockCirculant> matrix_Ppm(int N);  // (1/12) TC(5,0,...,0,1), transpose
BlockCirculant matrix_M(int N);                           // (1/9) TC(7,1,0,...,0,1)
BlockCirculant matrix_D(int N);                           // TC(-1,1,0,...,0)

// arc symmetrizers: block-diagonal pair of I -+ flip; defined for a single
// arc only (throws on scenes)
Eigen::MatrixXd matrix_H(const GridData& g);
Eigen::MatrixXd matrix_absH(const GridData& g);

// dense component-blocked 2N x 2N form of the mass stencil
Eigen::MatrixXd mass_matrix(const GridData& g);

// y = BC x on a component-blocked density vector, cyclic per curve segment
Eigen::VectorXcd apply(const BlockCirculant& bc, const Eigen::VectorXcd& v,
                       const std::vector<int>& offsets);

// in-place stencil application on one N x N scalar block of an operator,
// cyclic per segment: rows (A <- BC A) and columns (A <- A BC)
void mix_rows(Eigen::Ref<Eigen::MatrixXcd> A, const BlockCirculant& bc,
              const std::vector<int>& offsets);
void mix_cols(Eigen::Ref<Eigen::MatrixXcd> A, const BlockCirculant& bc,
              const std::vector<int>& offsets);

// real-valued convenience for sampled data stored one column per component
Eigen::VectorXd apply_real(const BlockCirculant& bc, const Eigen::VectorXd& v,
                           const std::vector<int>& offsets);

// the stencils act on the point index of each component separately; on the
// blocked 2N x 2N matrices this is the same as acting on 2N rows/cols with
// the segment list repeated at offset N
std::vector<int> extended_offsets(const GridData& g);

}  // namespace ebie
