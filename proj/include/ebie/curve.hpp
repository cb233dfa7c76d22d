#pragma once
#include <functional>
#include <string>
#include "ebie/types.hpp"

namespace ebie {

// Parametrized curve with analytic derivative. Closed curves are 1-periodic
// and positively oriented (outward normal (x2', -x1')); arcs are defined on
// [0,1] and get the cosine reparametrization at sampling time.
struct Curve {
  enum class Kind { closed, arc };
  Kind kind;
  std::function<Vec2(double)> pos;
  std::function<Vec2(double)> der;
};

Curve curve_ellipse(double a, double b);
Curve curve_circle(Vec2 center, double radius);
Curve curve_kite();
Curve curve_half_circle();
// trig polynomial x(t) = c0 + sum_k (ck_cos cos(2 pi k t) + ck_sin sin(2 pi k t))
// per component; closed only
Curve curve_fourier(const std::vector<std::array<double, 2>>& cos_xy,
                    const std::vector<std::array<double, 2>>& sin_xy,
                    const std::array<double, 2>& center);
// JSON: {"kind":"ellipse","a":4,"b":3} | {"kind":"circle","center":[x,y],"r":1}
//       | {"kind":"kite"} | {"kind":"half-circle"}
//       | {"kind":"fourier","center":[..],"cos":[[..],..],"sin":[[..],..]}
Curve curve_from_json(const std::string& json_text);

}  // namespace ebie
