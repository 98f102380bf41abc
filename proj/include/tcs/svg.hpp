#pragma once

// Deterministic SVG rendering of the Farey tessellation restricted to
// numerators/denominators up to a bound, with an optional highlighted
// slope path. Coordinates come from the rational circle parametrization
// (q^2 - p^2, 2pq) / (p^2 + q^2), so the output is a pure function of the
// input (no floating point, golden-file friendly).

#include "tcs/farey.hpp"
#include "tcs/rational.hpp"

#include <string>
#include <vector>

namespace tcs {
namespace detail {

// num/den rounded to two decimals, emitted as a fixed-point string.
inline std::string fixed2(const Int& num, const Int& den) {
  Int n = num * 100, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Int r = floor_div(2 * n + d, 2 * d);  // round half up
  std::string digits = tcs::abs(r).str();
  while (digits.size() < 3) digits.insert(digits.begin(), '0');
  std::string out = (r < 0) ? "-" : "";
  out += digits.substr(0, digits.size() - 2) + "." + digits.substr(digits.size() - 2);
  return out;
}

struct CirclePoint {
  Int xn, yn, den;  // exact coordinates xn/den, yn/den on the unit circle
};

inline CirclePoint circle_point(const ExtSlope& s) {
  return {s.q * s.q - s.p * s.p, 2 * s.p * s.q, s.p * s.p + s.q * s.q};
}

// SVG y grows downward; flipping y keeps positive slopes on the visual
// upper semicircle.
inline void svg_line(std::string& out, const ExtSlope& a, const ExtSlope& b,
                     const char* style) {
  const Int cx = 320, cy = 320, radius = 300;
  CirclePoint ca = circle_point(a), cb = circle_point(b);
  out += "  <line x1=\"" + fixed2(cx * ca.den + radius * ca.xn, ca.den) +
         "\" y1=\"" + fixed2(cy * ca.den - radius * ca.yn, ca.den) +
         "\" x2=\"" + fixed2(cx * cb.den + radius * cb.xn, cb.den) +
         "\" y2=\"" + fixed2(cy * cb.den - radius * cb.yn, cb.den) + "\" " +
         style + "/>\n";
}

}  // namespace detail

inline std::string emit_farey_svg(int max_den,
                                  const std::vector<ExtSlope>& path = {}) {
  if (max_den < 1) throw std::invalid_argument("svg: need max denominator >= 1");
  std::vector<ExtSlope> vertices{ExtSlope::infinity()};
  for (int q = 1; q <= max_den; ++q)
    for (int p = -max_den; p <= max_den; ++p)
      if (gcd(Int(tcs::abs(Int(p))), Int(q)) == 1) vertices.emplace_back(p, q);

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
         "viewBox=\"0 0 640 640\">\n";
  out += "  <circle cx=\"320\" cy=\"320\" r=\"300\" fill=\"none\" "
         "stroke=\"#333333\" stroke-width=\"1\"/>\n";
  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = i + 1; j < vertices.size(); ++j)
      if (edge_det(vertices[i], vertices[j]) == 1)
        detail::svg_line(out, vertices[i], vertices[j],
                         "stroke=\"#99aacc\" stroke-width=\"0.6\"");
  for (size_t i = 0; i + 1 < path.size(); ++i)
    detail::svg_line(out, path[i], path[i + 1],
                     "stroke=\"#cc2222\" stroke-width=\"2\"");
  for (const ExtSlope& v : vertices) {
    detail::CirclePoint c = detail::circle_point(v);
    out += "  <circle cx=\"" + detail::fixed2(320 * c.den + 300 * c.xn, c.den) +
           "\" cy=\"" + detail::fixed2(320 * c.den - 300 * c.yn, c.den) +
           "\" r=\"2\" fill=\"#222222\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace tcs
