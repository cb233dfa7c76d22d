#pragma once
#include <array>
#include "ebie/types.hpp"

namespace ebie {

// Modified Bessel functions K_0..K_3 of complex argument, Re z >= 0, z != 0.
// Accurate to >= 12 significant digits over |z| in [1e-6, 1e3].
std::array<cplx, 4> bessel_k03(cplx z);
cplx bessel_k(int n, cplx z);

// scalar kernel functions of w = s r (all material-dependent)
cplx psi(cplx w, const Material& mat);
cplx chi(cplx w, const Material& mat);
cplx psi_prime(cplx w, const Material& mat);
cplx chi_prime(cplx w, const Material& mat);

// G(w) = (K0(w/cT) - K0(w/cL)) / (2 pi rho) and its first four derivatives
std::array<cplx, 5> G_derivs(cplx w, const Material& mat);

// (G1, G2, A, B): the radial-Laplacian iterates of G and the H-matrix
// coefficients, A = G''/w^2 - G'/w^3, B = G'/w
std::array<cplx, 4> regularizer_funcs(cplx w, const Material& mat);

// everything the four kernels need at one argument, computed with a single
// pair of Bessel evaluations; switches to extended precision below |w| = 0.05
// where the combinations lose digits to cancellation
struct KernelScalars {
  cplx psi, chi, psi_p, chi_p, G1, G2, A, B;
};
KernelScalars kernel_scalars(cplx w, const Material& mat);

}  // namespace ebie
