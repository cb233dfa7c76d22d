#include "ebie/operators.hpp"

#include <array>

namespace ebie {

namespace {

// Entries with Re(s)|r| beyond this many transversal wavelengths carry
// kernel values below e^{-60} ~ 1e-26 relative to the near field and are
// left at zero. Exact for harmonic runs (Re s = 0); for CQ frequencies it
// prunes most of the matrix at the strongly damped nodes.
inline bool negligible(cplx s, double dist, const Material& mat) {
  return s.real() * dist > 60.0 * mat.cT;
}

inline void put_block(Eigen::MatrixXcd& A, int N, int i, int j, const Mat2c& B) {
  A(i, j) = B(0, 0);
  A(i, j + N) = B(0, 1);
  A(i + N, j) = B(1, 0);
  A(i + N, j + N) = B(1, 1);
}

BlockCirculant transposed(const BlockCirculant& bc) {
  return {bc.N, bc.diag, bc.sub, bc.sup};
}

}  // namespace

Operators assemble_ops(const GridData& g, cplx s, const Material& mat,
                       unsigned mask) {
  const int N = g.N;
  const bool wV = mask & OP_V, wK = mask & OP_K, wJ = mask & OP_J,
             wW = mask & OP_W;
  auto alloc = [&](bool want) {
    return want ? Eigen::MatrixXcd::Zero(2 * N, 2 * N).eval()
                : Eigen::MatrixXcd();
  };
  std::array<Eigen::MatrixXcd, 2> Vs{alloc(wV), alloc(wV)},
      Ks{alloc(wK), alloc(wK)}, Js{alloc(wJ), alloc(wJ)},
      W0s{alloc(wW), alloc(wW)}, W1s{alloc(wW), alloc(wW)};

  for (int side = 0; side < 2; ++side) {
    const auto& ms = side == 0 ? g.mP : g.mM;
    const auto& ns = side == 0 ? g.nP : g.nM;
    const auto& bs = side == 0 ? g.bP : g.bM;
#pragma omp parallel for schedule(static)
    for (int j = 0; j < N; ++j) {
      for (int i = 0; i < N; ++i) {
        if (wV || wK || wJ || wW) {
          const Vec2 r = ms[i] - g.m[j];
          const double d = r.norm();
          if (!negligible(s, d, mat)) {
            const KernelScalars ks = kernel_scalars(s * d, mat);
            if (wV) put_block(Vs[side], N, i, j, fundamental_E(ks, r, mat));
            if (wK)
              put_block(Ks[side], N, i, j, traction_T(ks, r, g.n[j], s, mat));
            if (wJ)
              put_block(Js[side], N, i, j,
                        traction_T(ks, -r, ns[i], s, mat).transpose().eval());
            if (wW)
              put_block(W1s[side], N, i, j,
                        hyp_W1(ks, r, ns[i], g.n[j], s, mat));
          }
        }
        if (wW) {
          const Vec2 r0 = bs[i] - g.b[j];
          const double d0 = r0.norm();
          if (!negligible(s, d0, mat)) {
            const KernelScalars ks0 = kernel_scalars(s * d0, mat);
            put_block(W0s[side], N, i, j, hyp_W0(ks0, r0, s, mat));
          }
        }
      }
    }
  }

  const auto ext = extended_offsets(g);
  const auto [Pp, Pm] = matrix_Ppm(N);
  const BlockCirculant Q = matrix_Q(N), D = matrix_D(N);
  auto average = [&](std::array<Eigen::MatrixXcd, 2>& S) {
    mix_rows(S[0], Pp, ext);
    mix_rows(S[1], Pm, ext);
    S[0] += S[1];
    S[1].resize(0, 0);
  };

  Operators out;
  if (wV) {
    average(Vs);
    out.V = std::move(Vs[0]);
  }
  if (wK) {
    average(Ks);
    mix_cols(Ks[0], Q, ext);
    out.K = std::move(Ks[0]);
  }
  if (wJ) {
    average(Js);
    mix_rows(Js[0], Q, ext);
    out.J = std::move(Js[0]);
  }
  if (wW) {
    average(W0s);
    mix_rows(W0s[0], D, ext);
    mix_cols(W0s[0], transposed(D), ext);
    average(W1s);
    mix_rows(W1s[0], Q, ext);
    mix_cols(W1s[0], Q, ext);
    out.W = W0s[0] + W1s[0];
  }
  return out;
}

Eigen::MatrixXcd assemble_V(const GridData& g, cplx s, const Material& mat) {
  return assemble_ops(g, s, mat, OP_V).V;
}
Eigen::MatrixXcd assemble_K(const GridData& g, cplx s, const Material& mat) {
  return assemble_ops(g, s, mat, OP_K).K;
}
Eigen::MatrixXcd assemble_J(const GridData& g, cplx s, const Material& mat) {
  return assemble_ops(g, s, mat, OP_J).J;
}
Eigen::MatrixXcd assemble_W(const GridData& g, cplx s, const Material& mat) {
  return assemble_ops(g, s, mat, OP_W).W;
}

std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> potential_SD(
    const GridData& g, const std::vector<Vec2>& obs, cplx s,
    const Material& mat, bool wantS, bool wantD) {
  const int N = g.N, P = (int)obs.size();
  auto alloc = [&](bool want) {
    return want ? Eigen::MatrixXcd::Zero(2 * P, 2 * N).eval()
                : Eigen::MatrixXcd();
  };
  std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> out{alloc(wantS), alloc(wantD)};
  auto put = [&](Eigen::MatrixXcd& A, int p, int j, const Mat2c& B) {
    A(p, j) = B(0, 0);
    A(p, j + N) = B(0, 1);
    A(p + P, j) = B(1, 0);
    A(p + P, j + N) = B(1, 1);
  };
#pragma omp parallel for schedule(static)
  for (int j = 0; j < N; ++j)
    for (int p = 0; p < P; ++p) {
      const Vec2 r = obs[p] - g.m[j];
      const double d = r.norm();
      if (negligible(s, d, mat)) continue;
      const KernelScalars ks = kernel_scalars(s * d, mat);
      if (wantS) put(out.first, p, j, fundamental_E(ks, r, mat));
      if (wantD) put(out.second, p, j, traction_T(ks, r, g.n[j], s, mat));
    }
  return out;
}

Eigen::MatrixXcd potential_S(const GridData& g, const std::vector<Vec2>& obs,
                             cplx s, const Material& mat) {
  return potential_SD(g, obs, s, mat, true, false).first;
}

Eigen::MatrixXcd potential_D(const GridData& g, const std::vector<Vec2>& obs,
                             cplx s, const Material& mat) {
  return potential_SD(g, obs, s, mat, false, true).second;
}

std::pair<Eigen::VectorXcd, Eigen::VectorXcd> sample_incident(
    const GridData& g, const AnalyticWave& wave) {
  const int N = g.N;
  Eigen::VectorXcd up(2 * N), um(2 * N), tp(2 * N), tm(2 * N);
  for (int j = 0; j < N; ++j) {
    const CVec2 a = wave.U(g.mP[j]), b = wave.U(g.mM[j]);
    const CVec2 c = wave.traction(g.mP[j], g.nP[j]),
                d = wave.traction(g.mM[j], g.nM[j]);
    up[j] = a.x(), up[N + j] = a.y();
    um[j] = b.x(), um[N + j] = b.y();
    tp[j] = c.x(), tp[N + j] = c.y();
    tm[j] = d.x(), tm[N + j] = d.y();
  }
  const auto [Pp, Pm] = matrix_Ppm(N);
  const BlockCirculant Q = matrix_Q(N);
  Eigen::VectorXcd beta0 =
      apply(Pp, up, g.offsets) + apply(Pm, um, g.offsets);
  Eigen::VectorXcd beta1 =
      apply(Q, apply(Pp, tp, g.offsets) + apply(Pm, tm, g.offsets), g.offsets);
  return {beta0, beta1};
}

}  // namespace ebie
