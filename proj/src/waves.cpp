#include "ebie/waves.hpp"

#include <cmath>

namespace ebie {

namespace {
const cplx iu(0.0, 1.0);
}

AnalyticWave plane_wave_ps(double k, const Material& mat) {
  const Vec2 d(1 / std::sqrt(2.0), 1 / std::sqrt(2.0));
  const Vec2 dp(-d.y(), d.x());
  const double cL = mat.cL, cT = mat.cT, lam = mat.lam, mu = mat.mu;
  AnalyticWave w;
  w.U = [=](const Vec2& z) -> CVec2 {
    const cplx a = std::exp(iu * k * z.dot(d) / cL) +
                   std::exp(iu * k * z.dot(dp) / cT);
    return a * d;
  };
  // for u(z) = f(z.a) c: sigma(u) n = f'(z.a) (lam (c.a) n + mu ((a.n) c + (c.n) a))
  w.traction = [=](const Vec2& z, const Vec2& n) -> CVec2 {
    const cplx fP = (iu * k / cL) * std::exp(iu * k * z.dot(d) / cL);
    const cplx fS = (iu * k / cT) * std::exp(iu * k * z.dot(dp) / cT);
    CVec2 t = fP * (lam * n + 2 * mu * d.dot(n) * d);
    t += fS * mu * (dp.dot(n) * d + d.dot(n) * dp);
    return t;
  };
  return w;
}

AnalyticWave p_wave_incident(double k, const Material& mat, const Vec2& d0) {
  const Vec2 d = d0.normalized();
  const double kappa = k / mat.cL;
  const double lam = mat.lam, mu = mat.mu;
  AnalyticWave w;
  w.U = [=](const Vec2& z) -> CVec2 {
    return std::exp(iu * kappa * z.dot(d)) * d;
  };
  w.traction = [=](const Vec2& z, const Vec2& n) -> CVec2 {
    return iu * kappa * std::exp(iu * kappa * z.dot(d)) *
           (lam * n + 2 * mu * d.dot(n) * d);
  };
  return w;
}

double PlanePulse::step(double y) const {
  const double x = y / width;
  if (x <= 0) return 0.0;
  if (x >= 1) return 1.0;
  return ((((70 * x - 315) * x + 540) * x - 420) * x + 126) * x * x * x * x * x;
}

double PlanePulse::step_deriv(double y) const {
  const double x = y / width;
  if (x <= 0 || x >= 1) return 0.0;
  const double a = x * (1 - x);
  return 630 * a * a * a * a / width;
}

Vec2 PlanePulse::displacement(const Vec2& z, double t) const {
  return profile(cL * (t - t0) - z.dot(d)) * d;
}

Vec2 PlanePulse::traction(const Vec2& z, double t, const Vec2& n) const {
  const double fp = profile_deriv(cL * (t - t0) - z.dot(d));
  return -fp * (lam * n + 2 * mu * d.dot(n) * d);
}

PlanePulse smoothed_plane_pulse(const Material& mat, const Vec2& d, double t0,
                                double width) {
  PlanePulse p;
  p.d = d.normalized();
  p.cL = mat.cL;
  p.lam = mat.lam;
  p.mu = mat.mu;
  p.t0 = t0;
  p.width = width;
  return p;
}

}  // namespace ebie
