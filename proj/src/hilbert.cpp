#include "ebie/hilbert.hpp"

#include <cmath>
#include <numbers>

namespace ebie {

namespace {
constexpr double pi = std::numbers::pi;

double sinc(double x) {
  if (x == 0.0) return 1.0;
  return std::sin(pi * x) / (pi * x);
}
}  // namespace

double log_sharp(double t) {
  const double s = 2 * std::sin(pi * t);
  return std::log(s * s);
}

double cot_kernel(double t) { return 1.0 / std::tan(pi * t); }

double verify_log_identity(int N, double t) {
  double acc = 0;
  for (int j = 1; j <= N; ++j) acc += log_sharp(t - (double)j / N);
  return std::abs(acc - log_sharp(t * N));
}

double verify_cot_identity(int N, double t, int upper) {
  double acc = 0;
  for (int j = 1; j <= upper; ++j) acc += cot_kernel(t - (double)j / N);
  return std::abs(acc / N - cot_kernel(t * N));
}

cplx hilbert_exact(int n, double t) {
  const double sgn = n > 0 ? 1.0 : n < 0 ? -1.0 : 0.0;
  return cplx(0, -sgn) * std::exp(cplx(0, 2 * pi * n * t));
}

cplx discrete_cot_sum(int N, const Eigen::VectorXcd& vals, double t) {
  cplx acc = 0;
  for (int j = 0; j < N; ++j)
    acc += cot_kernel(t - (double)(j + 1) / N) * vals[j];
  return acc / (double)N;
}

Eigen::VectorXcd averaging_delta(const Eigen::VectorXcd& v) {
  const int N = (int)v.size();
  Eigen::VectorXcd out(N);
  for (int j = 0; j < N; ++j)
    out[j] = v[(j + N - 1) % N] / 24.0 + 11.0 * v[j] / 12.0 +
             v[(j + 1) % N] / 24.0;
  return out;
}

Eigen::VectorXcd fourier_projection_Dh(int n, int N) {
  const double h = 1.0 / N;
  Eigen::VectorXcd v(N);
  for (int j = 0; j < N; ++j)
    v[j] = std::exp(cplx(0, 2 * pi * n * (j + 1) * h)) / sinc(n * h);
  return v;
}

cplx fork_functional(const std::function<cplx(double)>& f, int i, int N,
                     double a) {
  const double h = 1.0 / N;
  const double tm = (i - 1.0 / 6) * h, tp = (i + 1.0 / 6) * h;
  const double tmm = (i - 1 + 1.0 / 6) * h, tpp = (i + 1 - 1.0 / 6) * h;
  return 0.5 * a * (f(tm) + f(tp)) + 0.5 * (1 - a) * (f(tmm) + f(tpp));
}

OrderStudy consistency_order_study(double a, const std::vector<int>& Ns,
                                   int n_test) {
  OrderStudy st;
  for (int N : Ns) {
    const Eigen::VectorXcd dv = averaging_delta(fourier_projection_Dh(n_test, N));
    auto approx = [&](double t) { return discrete_cot_sum(N, dv, t); };
    auto exact = [&](double t) { return hilbert_exact(n_test, t); };
    double worst = 0;
    for (int i = 0; i < N; ++i)
      worst = std::max(worst, std::abs(fork_functional(approx, i, N, a) -
                                       fork_functional(exact, i, N, a)));
    st.errors.push_back(worst);
  }
  // least-squares slope of log(err) against log(h)
  const int m = (int)Ns.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int q = 0; q < m; ++q) {
    const double x = std::log(1.0 / Ns[q]), y = std::log(st.errors[q]);
    sx += x, sy += y, sxx += x * x, sxy += x * y;
  }
  st.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return st;
}

}  // namespace ebie
