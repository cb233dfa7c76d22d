#include "ebie/kernels.hpp"

#include <numbers>

namespace ebie {

namespace {
constexpr double two_pi = 2 * std::numbers::pi;

inline Eigen::Matrix2d outer(const Vec2& a, const Vec2& b) {
  return a * b.transpose();
}
}  // namespace

Mat2c fundamental_E(const KernelScalars& ks, const Vec2& r, const Material& mat) {
  const double rr = r.squaredNorm();
  Mat2c E = ks.psi * Mat2c::Identity();
  E -= (ks.chi / rr) * outer(r, r);
  return E / (two_pi * mat.mu);
}

Mat2c fundamental_E(const Vec2& r, cplx s, const Material& mat) {
  return fundamental_E(kernel_scalars(s * r.norm(), mat), r, mat);
}

Mat2c traction_T(const KernelScalars& ks, const Vec2& r, const Vec2& n, cplx s,
                 const Material& mat) {
  const double rr = r.squaredNorm(), ar = std::sqrt(rr);
  const double rn = r.dot(n);
  const double lm = mat.lam / mat.mu;
  const Eigen::Matrix2d I = Eigen::Matrix2d::Identity();
  const Eigen::Matrix2d RR = outer(r, r), NR = outer(n, r), RN = outer(r, n);

  Mat2c T = (-s * ks.psi_p / ar) * (rn * I + NR + lm * RN);
  T += ks.chi * (-4 * rn / (rr * rr) * RR + NR / rr + rn / rr * I +
                 RN / (mat.xi * mat.xi * rr));
  T += (s * ks.chi_p) * (2 * rn / (rr * ar) * RR + lm / ar * RN);
  return T / two_pi;
}

Mat2c traction_T(const Vec2& r, const Vec2& n, cplx s, const Material& mat) {
  return traction_T(kernel_scalars(s * r.norm(), mat), r, n, s, mat);
}

namespace {
// H(r;s) = s^2 A r x r + B I, the tensor part shared by W0 and W1
inline Mat2c tensor_H(const KernelScalars& ks, const Vec2& r, cplx s) {
  return (s * s * ks.A) * outer(r, r).cast<cplx>() +
         ks.B * Mat2c::Identity();
}
}  // namespace

Mat2c hyp_W0(const KernelScalars& ks, const Vec2& r, cplx s, const Material& mat) {
  const double mu2 = mat.mu * mat.mu;
  return 4 * mu2 * (ks.G1 * Mat2c::Identity() - tensor_H(ks, r, s));
}

Mat2c hyp_W0(const Vec2& r, cplx s, const Material& mat) {
  return hyp_W0(kernel_scalars(s * r.norm(), mat), r, s, mat);
}

std::pair<double, Eigen::Matrix2d> scalar_M_and_matrix_M(const Vec2& r,
                                                         const Vec2& n,
                                                         const Vec2& nt) {
  const Eigen::Matrix2d RR = outer(r, r), TN = outer(nt, n);
  return {nt.dot(r) * n.dot(r), TN * RR + RR * TN};
}

Mat2c hyp_W1(const KernelScalars& ks, const Vec2& r, const Vec2& n,
             const Vec2& nt, cplx s, const Material& mat) {
  const double lam = mat.lam, mu = mat.mu;
  const double mu2 = mu * mu;
  const Eigen::Matrix2d I = Eigen::Matrix2d::Identity();
  const Eigen::Matrix2d TN = outer(nt, n);  // source x observation
  const Eigen::Matrix2d NT = outer(n, nt);
  const double ndot = nt.dot(n);
  const auto [Msc, Mmat] = scalar_M_and_matrix_M(r, n, nt);
  const Eigen::Matrix2d Mswap = scalar_M_and_matrix_M(r, nt, n).second;

  Mat2c lead = mu * ks.G2 * (mu * TN + lam * NT + mu * ndot * I);

  Mat2c inner = (mu2 - 2 * lam * mu) * ks.G1 * TN.cast<cplx>();
  inner += (lam * lam + 2 * lam * mu - mu2) * ks.G1 * NT.cast<cplx>();
  inner += (s * s * ks.A) *
           (2 * lam * mu * Mmat + mu2 * Msc * I + mu2 * Mswap).cast<cplx>();
  inner += ks.B * (4 * lam * mu * TN + mu2 * ndot * I + 2 * mu2 * NT).cast<cplx>();
  inner += mu2 * ndot * tensor_H(ks, r, s);

  const double pref = (lam + 2 * mu) / (lam + mu);
  return pref * s * s * (lead - inner / (mat.cL * mat.cL));
}

Mat2c hyp_W1(const Vec2& r, const Vec2& n, const Vec2& nt, cplx s,
             const Material& mat) {
  return hyp_W1(kernel_scalars(s * r.norm(), mat), r, n, nt, s, mat);
}

}  // namespace ebie
