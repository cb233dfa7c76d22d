#pragma once
#include <complex>
#include <Eigen/Dense>

// Conventions used throughout:
//  - densities live in C^{2N} with component-blocked layout: entries [0,N)
//    are the x-components, [N,2N) the y-components, so block j of a vector
//    is (v[j], v[j+N]);
//  - operator matrices are (2M)x(2N) with block (i,j) at entries
//    (i,j), (i,j+N), (i+M,j), (i+M,j+N);
//  - normals carry the length-h weight of the parametrization, i.e.
//    n_j = h (x2'(t_j), -x1'(t_j)).

namespace ebie {

using cplx = std::complex<double>;
using Vec2 = Eigen::Vector2d;
using CVec2 = Eigen::Vector2cd;
using Mat2c = Eigen::Matrix2cd;

struct Material {
  double lam, mu, rho;  // Lame parameters and density
  double cL, cT, xi;    // pressure/shear speeds, xi = cT/cL < 1

  Material(double lam_, double mu_, double rho_)
      : lam(lam_), mu(mu_), rho(rho_),
        cL(std::sqrt((lam_ + 2 * mu_) / rho_)),
        cT(std::sqrt(mu_ / rho_)), xi(cT / cL) {
    if (!(lam > 0 && mu > 0 && rho > 0))
      throw std::invalid_argument("material parameters must be positive");
  }
};

}  // namespace ebie
