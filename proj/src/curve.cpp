#include "ebie/curve.hpp"
#include <cmath>
#include <json.hpp>

namespace ebie {

static constexpr double two_pi = 2 * M_PI;

Curve curve_ellipse(double a, double b) {
  return {Curve::Kind::closed,
          [a, b](double t) {
            return Vec2(a * std::cos(two_pi * t), b * std::sin(two_pi * t));
          },
          [a, b](double t) {
            return Vec2(-a * two_pi * std::sin(two_pi * t),
                        b * two_pi * std::cos(two_pi * t));
          }};
}

Curve curve_circle(Vec2 c, double r) {
  return {Curve::Kind::closed,
          [c, r](double t) {
            return Vec2(c.x() + r * std::cos(two_pi * t),
                        c.y() + r * std::sin(two_pi * t));
          },
          [c, r](double t) {
            return Vec2(-r * two_pi * std::sin(two_pi * t),
                        r * two_pi * std::cos(two_pi * t));
          }};
}

Curve curve_kite() {
  return {Curve::Kind::closed,
          [](double t) {
            double u = two_pi * t;
            return Vec2(std::cos(u) + 0.65 * std::cos(2 * u) - 0.65,
                        1.5 * std::sin(u));
          },
          [](double t) {
            double u = two_pi * t;
            return Vec2(two_pi * (-std::sin(u) - 1.3 * std::sin(2 * u)),
                        two_pi * 1.5 * std::cos(u));
          }};
}

Curve curve_half_circle() {
  return {Curve::Kind::arc,
          [](double u) { return Vec2(std::cos(M_PI * u), std::sin(M_PI * u)); },
          [](double u) {
            return Vec2(-M_PI * std::sin(M_PI * u), M_PI * std::cos(M_PI * u));
          }};
}

Curve curve_fourier(const std::vector<std::array<double, 2>>& cs,
                    const std::vector<std::array<double, 2>>& sn,
                    const std::array<double, 2>& c0) {
  size_t K = std::max(cs.size(), sn.size());
  return {Curve::Kind::closed,
          [cs, sn, c0, K](double t) {
            Vec2 p(c0[0], c0[1]);
            for (size_t k = 1; k <= K; ++k) {
              double a = two_pi * k * t;
              if (k <= cs.size())
                p += std::cos(a) * Vec2(cs[k - 1][0], cs[k - 1][1]);
              if (k <= sn.size())
                p += std::sin(a) * Vec2(sn[k - 1][0], sn[k - 1][1]);
            }
            return p;
          },
          [cs, sn, K](double t) {
            Vec2 p(0, 0);
            for (size_t k = 1; k <= K; ++k) {
              double a = two_pi * k * t, w = two_pi * k;
              if (k <= cs.size())
                p += -w * std::sin(a) * Vec2(cs[k - 1][0], cs[k - 1][1]);
              if (k <= sn.size())
                p += w * std::cos(a) * Vec2(sn[k - 1][0], sn[k - 1][1]);
            }
            return p;
          }};
}

Curve curve_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::string kind = j.at("kind");
  if (kind == "ellipse") return curve_ellipse(j.at("a"), j.at("b"));
  if (kind == "circle") {
    auto c = j.at("center");
    return curve_circle(Vec2(c[0], c[1]), j.at("r"));
  }
  if (kind == "kite") return curve_kite();
  if (kind == "half-circle") return curve_half_circle();
  if (kind == "fourier") {
    std::vector<std::array<double, 2>> cs, sn;
    for (auto& v : j.value("cos", nlohmann::json::array()))
      cs.push_back({v[0], v[1]});
    for (auto& v : j.value("sin", nlohmann::json::array()))
      sn.push_back({v[0], v[1]});
    std::array<double, 2> c0{0, 0};
    if (j.contains("center")) c0 = {j["center"][0], j["center"][1]};
    return curve_fourier(cs, sn, c0);
  }
  throw std::invalid_argument("unknown curve kind: " + kind);
}

}  // namespace ebie
