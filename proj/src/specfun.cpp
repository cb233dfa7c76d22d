#include "ebie/specfun.hpp"
#include <cmath>
#include <stdexcept>
#include <quadmath.h>

namespace ebie {

static constexpr double GAMMA = 0.5772156649015328606065120900824;

// ---------------------------------------------------------------------------
// K_0..K_3, Re z >= 0. Ascending series for |z| <= 2; for |z| > 2 a Miller
// backward recurrence on the confluent series of K_{1/2}-type ratios with
// normalization sum (iteration count estimate tuned for double precision,
// valid up to the imaginary axis). Orders 2,3 by the forward-stable upward
// recurrence K_{n+1} = K_{n-1} + (2n/z) K_n.

static void k01_series(cplx z, cplx& K0, cplx& K1) {
  cplx q = 0.25 * z * z;
  cplx lz = std::log(0.5 * z);
  cplx f0 = -(lz + GAMMA);
  cplx c = 1.0;        // q^k / (k!)^2
  cplx d = 1.0;        // q^k / (k! (k+1)!)
  double Hk = 0.0, Hk1 = 1.0;
  K0 = f0;
  cplx I1s = 1.0;
  cplx S1 = (Hk + Hk1 - 2 * GAMMA);
  for (int k = 1; k <= 40; ++k) {
    c *= q / double(k * k);
    Hk += 1.0 / k;
    cplx t0 = c * (f0 + Hk);
    K0 += t0;
    d *= q / double(k * (k + 1));
    Hk1 += 1.0 / (k + 1);
    I1s += d;
    S1 += d * (Hk + Hk1 - 2 * GAMMA);
    if (std::abs(t0) < 1e-18 * std::abs(K0) && k > 3) break;
  }
  K1 = 1.0 / z + lz * (0.5 * z * I1s) - 0.25 * z * S1;
}

static void k01_miller(cplx z, cplx& K0, cplx& K1) {
  double R = std::abs(z), th = std::arg(z);
  double A = 3.0 / (1.0 + R), B = 14.7 / (28.0 + R);
  double C = 2.0 * M_2_SQRTPI / (2.2e-16 * std::pow(2.0 * R, 0.25));
  int M = (int)std::ceil(
      0.485 / R *
          std::pow((std::log(C) + R * std::cos(A * th) / (1.0 + 0.008 * R)) /
                       (2.0 * std::cos(B * th)),
                   2) +
      1.5);
  cplx k0 = 0.0, k1 = 1e-30, S = 0.0;
  for (int n = M - 1; n >= 1; --n) {
    S += k1;
    k0 = double(n) * (2.0 * (z + double(n)) * k1 - double(n + 1) * k0) /
         ((n - 0.5) * (n - 0.5));
    std::swap(k0, k1);
  }
  cplx r = z + 0.5 - k0 / k1;
  K0 = std::exp(-z) * std::sqrt(M_PI_4 * 2.0 / z) * k1 / (S + k1);
  K1 = K0 * r / z;
}

std::array<cplx, 4> bessel_k03(cplx z) {
  double R = std::abs(z);
  if (R < 1e-14) throw std::domain_error("bessel_k03: |z| too small");
  if (z.real() < -1e-13 * R)
    throw std::domain_error("bessel_k03: Re z < 0 unsupported");
  if (z.real() > 746.0) return {0.0, 0.0, 0.0, 0.0};  // below DBL_MIN
  cplx K0, K1;
  if (R <= 2.0)
    k01_series(z, K0, K1);
  else
    k01_miller(z, K0, K1);
  cplx K2 = K0 + (2.0 / z) * K1;
  cplx K3 = K1 + (4.0 / z) * K2;
  return {K0, K1, K2, K3};
}

cplx bessel_k(int n, cplx z) {
  if (n < 0 || n > 3) throw std::domain_error("bessel_k: order 0..3 only");
  return bessel_k03(z)[n];
}

// ---------------------------------------------------------------------------
// scalar kernel functions (double path)

cplx psi(cplx w, const Material& m) { return kernel_scalars(w, m).psi; }
cplx chi(cplx w, const Material& m) { return kernel_scalars(w, m).chi; }
cplx psi_prime(cplx w, const Material& m) { return kernel_scalars(w, m).psi_p; }
cplx chi_prime(cplx w, const Material& m) { return kernel_scalars(w, m).chi_p; }

std::array<cplx, 5> G_derivs(cplx w, const Material& m) {
  auto KT = bessel_k03(w / m.cT);
  auto KL = bessel_k03(w / m.cL);
  double pr = 2 * M_PI * m.rho;
  double x2 = m.xi * m.xi, x3 = x2 * m.xi, x4 = x2 * x2;
  cplx G = (KT[0] - KL[0]) / pr;
  cplx G1 = -(KT[1] - m.xi * KL[1]) / (pr * m.cT);
  cplx G2 = (KT[0] + KT[2] - x2 * (KL[0] + KL[2])) / (2 * pr * m.cT * m.cT);
  cplx G3 = -(3.0 * KT[1] + KT[3] - x3 * (3.0 * KL[1] + KL[3])) /
            (4 * pr * m.cT * m.cT * m.cT);
  cplx w2 = w * w;
  cplx G4 = ((3.0 * m.cT * m.cT / w2 + 1.0) * KT[2] -
             x4 * (3.0 * m.cL * m.cL / w2 + 1.0) * KL[2]) /
            (pr * m.cT * m.cT * m.cT * m.cT);
  return {G, G1, G2, G3, G4};
}

std::array<cplx, 4> regularizer_funcs(cplx w, const Material& m) {
  auto ks = kernel_scalars(w, m);
  return {ks.G1, ks.G2, ks.A, ks.B};
}

// ---------------------------------------------------------------------------
// extended-precision path: below |w| = 0.05 the combinations psi, A, ... lose
// most of their digits to cancellation (the 1/w^2 poles of the two wave
// families cancel exactly), so evaluate them in __float128 from the ascending
// series and round once at the end.

using qreal = __float128;
using qcplx = __complex128;

static inline qcplx qc(cplx z) {
  qcplx r;
  __real__ r = (qreal)z.real();
  __imag__ r = (qreal)z.imag();
  return r;
}
static inline cplx dc(qcplx z) {
  return {(double)__real__ z, (double)__imag__ z};
}

static void k03_series_q(qcplx z, qcplx K[4]) {
  static const qreal GAMMA_Q =
      strtoflt128("0.57721566490153286060651209008240243104", nullptr);
  qcplx q = 0.25Q * z * z;
  qcplx lz = clogq(0.5Q * z);
  qcplx f0 = -(lz + GAMMA_Q);
  qcplx c = 1.0Q, d = 1.0Q;
  qreal Hk = 0.0Q, Hk1 = 1.0Q;
  qcplx K0 = f0, I1s = 1.0Q, S1 = (Hk + Hk1 - 2.0Q * GAMMA_Q);
  for (int k = 1; k <= 16; ++k) {
    c *= q / (qreal)(k * k);
    Hk += 1.0Q / (qreal)k;
    K0 += c * (f0 + Hk);
    d *= q / (qreal)(k * (k + 1));
    Hk1 += 1.0Q / (qreal)(k + 1);
    I1s += d;
    S1 += d * (Hk + Hk1 - 2.0Q * GAMMA_Q);
  }
  qcplx K1 = 1.0Q / z + lz * (0.5Q * z * I1s) - 0.25Q * z * S1;
  K[0] = K0;
  K[1] = K1;
  K[2] = K0 + (2.0Q / z) * K1;
  K[3] = K1 + (4.0Q / z) * K[2];
}

static KernelScalars kernel_scalars_q(cplx wd, const Material& m) {
  qcplx w = qc(wd);
  qreal cT = (qreal)m.cT, cL = (qreal)m.cL, xi = cT / cL,
        rho = (qreal)m.rho;
  qreal pr = 2.0Q * M_PIq * rho;
  qcplx KT[4], KL[4];
  k03_series_q(w / cT, KT);
  k03_series_q(w / cL, KL);
  qreal x2 = xi * xi, x3 = x2 * xi;
  qcplx psi = KT[0] + (cT / w) * (KT[1] - xi * KL[1]);
  qcplx chi = KT[2] - x2 * KL[2];
  qcplx psip = -KT[1] / cT - (2.0Q * cT / (w * w)) * (KT[1] - xi * KL[1]) -
               (KT[0] - x2 * KL[0]) / w;
  qcplx chip = -(KT[1] + KT[3] - x3 * (KL[1] + KL[3])) / (2.0Q * cT);
  qcplx G1 = (KT[0] / (cT * cT) - KL[0] / (cL * cL)) / pr;
  qcplx G2 = (KT[0] / (cT * cT * cT * cT) - KL[0] / (cL * cL * cL * cL)) / pr;
  qcplx Gp = -(KT[1] - xi * KL[1]) / (pr * cT);
  qcplx Gpp = (KT[0] + KT[2] - x2 * (KL[0] + KL[2])) / (2.0Q * pr * cT * cT);
  qcplx A = Gpp / (w * w) - Gp / (w * w * w);
  qcplx B = Gp / w;
  return {dc(psi), dc(chi), dc(psip), dc(chip), dc(G1), dc(G2), dc(A), dc(B)};
}

KernelScalars kernel_scalars(cplx w, const Material& m) {
  if (std::abs(w) < 0.05) return kernel_scalars_q(w, m);
  auto KT = bessel_k03(w / m.cT);
  auto KL = bessel_k03(w / m.cL);
  double cT = m.cT, cL = m.cL, xi = m.xi;
  double pr = 2 * M_PI * m.rho;
  double x2 = xi * xi, x3 = x2 * xi;
  KernelScalars o;
  o.psi = KT[0] + (cT / w) * (KT[1] - xi * KL[1]);
  o.chi = KT[2] - x2 * KL[2];
  o.psi_p = -KT[1] / cT - (2.0 * cT / (w * w)) * (KT[1] - xi * KL[1]) -
            (KT[0] - x2 * KL[0]) / w;
  o.chi_p = -(KT[1] + KT[3] - x3 * (KL[1] + KL[3])) / (2 * cT);
  o.G1 = (KT[0] / (cT * cT) - KL[0] / (cL * cL)) / pr;
  o.G2 = (KT[0] / (cT * cT * cT * cT) - KL[0] / (cL * cL * cL * cL)) / pr;
  cplx Gp = -(KT[1] - xi * KL[1]) / (pr * cT);
  cplx Gpp = (KT[0] + KT[2] - x2 * (KL[0] + KL[2])) / (2 * pr * cT * cT);
  o.A = Gpp / (w * w) - Gp / (w * w * w);
  o.B = Gp / w;
  return o;
}

}  // namespace ebie
