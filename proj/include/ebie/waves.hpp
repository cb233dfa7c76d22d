#pragma once
#include <functional>

#include "ebie/types.hpp"

namespace ebie {

// a time-harmonic displacement field and its traction against a given
// (not necessarily unit) normal
struct AnalyticWave {
  std::function<CVec2(const Vec2&)> U;
  std::function<CVec2(const Vec2&, const Vec2&)> traction;
};

// superposition of a pressure and a shear plane wave, both displacing along
// d = (1,1)/sqrt(2); smooth exact solution used by the convergence studies
AnalyticWave plane_wave_ps(double k, const Material& mat);

// pure pressure plane wave travelling along d with unit amplitude
AnalyticWave p_wave_incident(double k, const Material& mat, const Vec2& d);

// causal plane pressure pulse: U(z,t) = f(c_L (t - t0) - z.d) d with
// f(y) = Hs(y) sin(2y) and Hs a C^4 polynomial step of the given width
struct PlanePulse {
  Vec2 d;
  double cL, lam, mu;
  double t0 = 2.3, width = 1.0;

  double step(double y) const;        // Hs
  double step_deriv(double y) const;  // Hs'
  double profile(double y) const { return step(y) * std::sin(2 * y); }
  double profile_deriv(double y) const {
    return step_deriv(y) * std::sin(2 * y) + 2 * step(y) * std::cos(2 * y);
  }

  Vec2 displacement(const Vec2& z, double t) const;
  Vec2 traction(const Vec2& z, double t, const Vec2& n) const;
};

PlanePulse smoothed_plane_pulse(const Material& mat, const Vec2& d, double t0,
                                double width);

}  // namespace ebie
