#pragma once
#include <functional>
#include <vector>

#include "ebie/types.hpp"

namespace ebie {

// Discrete periodic Hilbert transform laboratory. Everything lives on the
// unit period with nodes t_j = j h, h = 1/N, and trigonometric monomials
// e_n(t) = exp(2 pi i n t).

double log_sharp(double t);  // log(4 sin^2(pi t))
double cot_kernel(double t); // cot(pi t)

// residual of sum_{j=1..N} log#(t - t_j) = log#(t N)
double verify_log_identity(int N, double t);

// residual of h sum_{j=1..upper} cot(pi(t - t_j)) = cot(pi t N); exact only
// when the sum runs over a full period (upper = N)
double verify_cot_identity(int N, double t, int upper);

// exact transform of e_n: -i sgn(n) e_n(t)
cplx hilbert_exact(int n, double t);

// h sum_j cot(pi(t - t_j)) vals_j with vals_j given at t_j = (j+1) h
cplx discrete_cot_sum(int N, const Eigen::VectorXcd& vals, double t);

// cyclic averaging (1/24, 11/12, 1/24)
Eigen::VectorXcd averaging_delta(const Eigen::VectorXcd& v);

// node values of the piecewise constant function whose n-th Fourier
// coefficient matches e_n: e_n(t_j) / sinc(n h)
Eigen::VectorXcd fourier_projection_Dh(int n, int N);

// two-sided averaged point evaluation around t_i = i h with weight a on the
// inner pair t_i -+ h/6 and 1-a on the outer pair t_{i-+1} +- h/6
cplx fork_functional(const std::function<cplx(double)>& f, int i, int N,
                     double a);

// worst-case fork error of the discretized transform against the exact one
// on e_n over a sequence of grids, with the log-log slope of the decay
struct OrderStudy {
  std::vector<double> errors;
  double slope;
};
OrderStudy consistency_order_study(double a, const std::vector<int>& Ns,
                                   int n_test);

}  // namespace ebie
