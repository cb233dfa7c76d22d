#include "ebie/mixing.hpp"

#include <stdexcept>

namespace ebie {

BlockCirculant matrix_Q(int N) { return {N, 22.0 / 24, 1.0 / 24, 1.0 / 24}; }

std::pair<BlockCirculant, BlockCirculant> matrix_Ppm(int N) {
  // P+ averages towards the preceding node, P- is its transpose
  return {{N, 5.0 / 12, 0.0, 1.0 / 12}, {N, 5.0 / 12, 1.0 / 12, 0.0}};
}

BlockCirculant matrix_M(int N) { return {N, 7.0 / 9, 1.0 / 9, 1.0 / 9}; }

BlockCirculant matrix_D(int N) { return {N, -1.0, 1.0, 0.0}; }

namespace {

// antidiagonal flip acting on the point index of one component
Eigen::MatrixXd flip_block(int N) {
  Eigen::MatrixXd F = Eigen::MatrixXd::Zero(N, N);
  for (int i = 0; i < N; ++i) F(i, N - 1 - i) = 1.0;
  return F;
}

Eigen::MatrixXd arc_symmetrizer(const GridData& g, double sign) {
  if (!g.arc) throw std::invalid_argument("symmetrizer: grid is not an arc");
  if ((int)g.offsets.size() != 2)
    throw std::invalid_argument("symmetrizer: single arc expected");
  const int N = g.N;
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(2 * N, 2 * N);
  Eigen::MatrixXd B =
      Eigen::MatrixXd::Identity(N, N) + sign * flip_block(N);
  H.topLeftCorner(N, N) = B;
  H.bottomRightCorner(N, N) = B;
  return H;
}

}  // namespace

Eigen::MatrixXd matrix_H(const GridData& g) { return arc_symmetrizer(g, -1.0); }
Eigen::MatrixXd matrix_absH(const GridData& g) { return arc_symmetrizer(g, 1.0); }

template <class Vec>
static Vec apply_impl(const BlockCirculant& bc, const Vec& v,
                      const std::vector<int>& offsets) {
  const int N = bc.N;
  if (v.size() != 2 * N) throw std::invalid_argument("apply: size mismatch");
  Vec out(2 * N);
  for (int c = 0; c < 2; ++c) {
    const int base = c * N;
    for (size_t s = 0; s + 1 < offsets.size(); ++s) {
      const int lo = offsets[s], n = offsets[s + 1] - lo;
      for (int i = 0; i < n; ++i) {
        const int ip = (i + 1) % n, im = (i + n - 1) % n;
        out[base + lo + i] = bc.diag * v[base + lo + i] +
                             bc.sup * v[base + lo + ip] +
                             bc.sub * v[base + lo + im];
      }
    }
  }
  return out;
}

Eigen::VectorXcd apply(const BlockCirculant& bc, const Eigen::VectorXcd& v,
                       const std::vector<int>& offsets) {
  return apply_impl(bc, v, offsets);
}

Eigen::VectorXd apply_real(const BlockCirculant& bc, const Eigen::VectorXd& v,
                           const std::vector<int>& offsets) {
  return apply_impl(bc, v, offsets);
}

Eigen::MatrixXd mass_matrix(const GridData& g) {
  const BlockCirculant M = matrix_M(g.N);
  const int N = g.N;
  Eigen::MatrixXd big = Eigen::MatrixXd::Zero(2 * N, 2 * N);
  for (size_t seg = 0; seg + 1 < g.offsets.size(); ++seg) {
    const int lo = g.offsets[seg], n = g.offsets[seg + 1] - lo;
    for (int i = 0; i < n; ++i) {
      const int ip = lo + (i + 1) % n, im = lo + (i + n - 1) % n;
      for (int c = 0; c < 2; ++c) {
        const int b = c * N;
        big(b + lo + i, b + lo + i) += M.diag;
        big(b + lo + i, b + ip) += M.sup;
        big(b + lo + i, b + im) += M.sub;
      }
    }
  }
  return big;
}

std::vector<int> extended_offsets(const GridData& g) {
  std::vector<int> ext(g.offsets);
  for (size_t k = 1; k < g.offsets.size(); ++k) ext.push_back(g.N + g.offsets[k]);
  return ext;
}

void mix_rows(Eigen::Ref<Eigen::MatrixXcd> A, const BlockCirculant& bc,
              const std::vector<int>& offsets) {
  for (size_t s = 0; s + 1 < offsets.size(); ++s) {
    const int lo = offsets[s], n = offsets[s + 1] - lo;
    Eigen::MatrixXcd block = A.middleRows(lo, n);
    for (int i = 0; i < n; ++i) {
      const int ip = (i + 1) % n, im = (i + n - 1) % n;
      A.row(lo + i) = bc.diag * block.row(i) + bc.sup * block.row(ip) +
                      bc.sub * block.row(im);
    }
  }
}

void mix_cols(Eigen::Ref<Eigen::MatrixXcd> A, const BlockCirculant& bc,
              const std::vector<int>& offsets) {
  // (A BC)_ij = diag A_ij + sup A_{i,j-1} + sub A_{i,j+1}
  for (size_t s = 0; s + 1 < offsets.size(); ++s) {
    const int lo = offsets[s], n = offsets[s + 1] - lo;
    Eigen::MatrixXcd block = A.middleCols(lo, n);
    for (int j = 0; j < n; ++j) {
      const int jp = (j + 1) % n, jm = (j + n - 1) % n;
      A.col(lo + j) = bc.diag * block.col(j) + bc.sup * block.col(jm) +
                      bc.sub * block.col(jp);
    }
  }
}

}  // namespace ebie
