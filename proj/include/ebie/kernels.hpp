#pragma once
#include "ebie/grid.hpp"
#include "ebie/mixing.hpp"
#include "ebie/specfun.hpp"
#include "ebie/types.hpp"

namespace ebie {

// 2x2 kernel matrices of the elastic single layer (E), its traction (T) and
// the two pieces of the hypersingular operator, W = D W0 D^T + Q W1 Q after
// discretization. All take the Laplace parameter s with Re s >= 0 (lossless
// time-harmonic runs use s = -i k). The overloads with a KernelScalars
// argument let assembly reuse one Bessel evaluation at w = s|r| for every
// kernel sharing the same source/observation distance.

Mat2c fundamental_E(const KernelScalars& ks, const Vec2& r, const Material& mat);
Mat2c fundamental_E(const Vec2& r, cplx s, const Material& mat);

// traction at the observation point in direction n of the field radiated by a
// point source at the origin; r = observation - source
Mat2c traction_T(const KernelScalars& ks, const Vec2& r, const Vec2& n, cplx s,
                 const Material& mat);
Mat2c traction_T(const Vec2& r, const Vec2& n, cplx s, const Material& mat);

Mat2c hyp_W0(const KernelScalars& ks, const Vec2& r, cplx s, const Material& mat);
Mat2c hyp_W0(const Vec2& r, cplx s, const Material& mat);

// n is the observation normal, nt the source normal; even under r -> -r
Mat2c hyp_W1(const KernelScalars& ks, const Vec2& r, const Vec2& n,
             const Vec2& nt, cplx s, const Material& mat);
Mat2c hyp_W1(const Vec2& r, const Vec2& n, const Vec2& nt, cplx s,
             const Material& mat);

// the two normal-pair ingredients of W1: the scalar contraction
// (nt.r)(n.r) and the anticommutator of the outer products nt n^T and r r^T
std::pair<double, Eigen::Matrix2d> scalar_M_and_matrix_M(const Vec2& r,
                                                         const Vec2& n,
                                                         const Vec2& nt);

}  // namespace ebie
