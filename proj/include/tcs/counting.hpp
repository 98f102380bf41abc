#pragma once

// Counting and enumeration for the basic blocks: tight structures on solid
// tori (negative continued fraction product formula), thickened tori (sign
// assignments modulo shuffles within continued-fraction blocks, relative
// Euler classes) and discs (colored non-crossing chord diagrams with
// rotation numbers).

#include "tcs/farey.hpp"
#include "tcs/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace tcs {

// One sign per basic slice of a decomposition.
using SignAssignment = std::vector<int>;

// Relative Euler class coordinates in the fixed torus homology basis,
// accumulated as a signed sum of (v1 - v0) over the slices.
struct EulerVector {
  Int h{0};
  Int v{0};

  friend bool operator==(const EulerVector& a, const EulerVector& b) {
    return a.h == b.h && a.v == b.v;
  }
  friend bool operator!=(const EulerVector& a, const EulerVector& b) {
    return !(a == b);
  }
  friend bool operator<(const EulerVector& a, const EulerVector& b) {
    if (a.h != b.h) return a.h < b.h;
    return a.v < b.v;
  }
};

// Meridian-fixing twists act on a boundary slope as s -> s/(1+as); the
// canonical representative has the form -p/q with 1 <= q <= p, the slope -1
// (standard neighborhood) being the terminal case.
inline ExtSlope solid_torus_normal_form(const ExtSlope& s) {
  if (s.p == 0)
    throw std::invalid_argument("solid torus: meridional boundary slope");
  Int P = tcs::abs(s.p);
  Int r = s.q % P;  // s.q >= 0, so r is already in [0, P)
  if (r == 0) return ExtSlope(-1, 1);
  Int qn = (s.p > 0) ? Int(P - r) : r;
  return ExtSlope(-P, qn);
}

// |(r0+1)(r1+1)...(r_{k-1}+1) rk| on the expansion of the normal form.
inline Int count_solid_torus(const ExtSlope& s) {
  ExtSlope n = solid_torus_normal_form(s);
  if (n == ExtSlope(-1, 1)) return 1;
  NegCF cf = neg_cf(n);
  Int prod = 1;
  for (size_t i = 0; i + 1 < cf.size(); ++i) prod *= -(cf[i] + 1);
  prod *= -cf.back();
  return prod;
}

inline Int count_t2i(const SliceDecomposition& d) {
  Int prod = 1;
  for (const CFBlock& b : d.blocks) prod *= Int(b.end - b.begin) + 1;
  return prod;
}

inline Int count_t2i(const ExtSlope& s0, const ExtSlope& s1) {
  return count_t2i(decompose(s0, s1));
}

// One canonical representative per shuffle class: within every block the
// plus signs come first.
inline std::vector<SignAssignment> sign_classes(const SliceDecomposition& d) {
  std::vector<SignAssignment> out{SignAssignment{}};
  for (const CFBlock& b : d.blocks) {
    size_t len = b.end - b.begin;
    std::vector<SignAssignment> next;
    for (const SignAssignment& prefix : out) {
      for (size_t plus = 0; plus <= len; ++plus) {
        SignAssignment a = prefix;
        for (size_t i = 0; i < len; ++i)
          a.push_back(i < len - plus ? +1 : -1);
        next.push_back(std::move(a));
      }
    }
    out = std::move(next);
  }
  return out;
}

// Sum of sign_i * (v1 - v0) over the slices, with (v1, v0) the shortest
// vectors of the slice boundary slopes oriented to a positive basis.
inline EulerVector relative_euler(const SliceDecomposition& d,
                                  const SignAssignment& signs) {
  if (signs.size() != d.slice_count())
    throw std::invalid_argument("relative_euler: sign count mismatch");
  // Pick one vector per slope, consistently along the chain: the s1 end is
  // canonical and each next vector is signed so that (v1, v0) of every slice
  // is a positively oriented basis. Per-slice normalization would flip signs
  // independently and break the shuffle invariance within blocks.
  std::vector<std::pair<Int, Int>> vecs;  // (x, y) = (q, p)
  vecs.emplace_back(d.slopes.front().q, d.slopes.front().p);
  for (size_t i = 1; i < d.slopes.size(); ++i) {
    Int x = d.slopes[i].q, y = d.slopes[i].p;
    Int det = vecs.back().first * y - vecs.back().second * x;
    if (det == -1) {
      x = -x;
      y = -y;
    } else if (det != 1) {
      throw std::invalid_argument("relative_euler: slopes not a Farey edge");
    }
    vecs.emplace_back(std::move(x), std::move(y));
  }
  EulerVector e;
  for (size_t i = 0; i < signs.size(); ++i) {
    e.h += signs[i] * (vecs[i].first - vecs[i + 1].first);
    e.v += signs[i] * (vecs[i].second - vecs[i + 1].second);
  }
  return e;
}

// Dividing-set constellation on a disc with boundary twisting -n: a
// non-crossing perfect matching of the 2n boundary points together with an
// alternating ±1 coloring of the complementary regions, recorded by the
// sign of the region touching the boundary arc before point 0.
struct DiscConfig {
  std::vector<std::pair<int, int>> matching;
  int outer_sign;
};

namespace detail {

inline void noncrossing_matchings(const std::vector<int>& points,
                                  std::vector<std::vector<std::pair<int, int>>>& out) {
  if (points.empty()) {
    out.push_back({});
    return;
  }
  int first = points.front();
  for (size_t j = 1; j < points.size(); j += 2) {
    std::vector<int> inside(points.begin() + 1, points.begin() + j);
    std::vector<int> outside(points.begin() + j + 1, points.end());
    std::vector<std::vector<std::pair<int, int>>> inner, outer;
    noncrossing_matchings(inside, inner);
    noncrossing_matchings(outside, outer);
    for (const auto& in_m : inner)
      for (const auto& out_m : outer) {
        std::vector<std::pair<int, int>> m{{first, points[j]}};
        m.insert(m.end(), in_m.begin(), in_m.end());
        m.insert(m.end(), out_m.begin(), out_m.end());
        out.push_back(std::move(m));
      }
  }
}

// Number of chords strictly enclosing chord (a, b) in a non-crossing set.
inline int chord_depth(const std::vector<std::pair<int, int>>& m, size_t idx) {
  int depth = 0;
  auto [a, b] = m[idx];
  for (size_t j = 0; j < m.size(); ++j) {
    if (j == idx) continue;
    if (m[j].first < a && b < m[j].second) ++depth;
  }
  return depth;
}

}  // namespace detail

inline std::vector<DiscConfig> enumerate_disc_configs(int n) {
  if (n < 1) throw std::invalid_argument("disc: need n >= 1");
  std::vector<int> points(2 * n);
  for (int i = 0; i < 2 * n; ++i) points[i] = i;
  std::vector<std::vector<std::pair<int, int>>> matchings;
  detail::noncrossing_matchings(points, matchings);
  std::vector<DiscConfig> out;
  for (const auto& m : matchings)
    for (int sign : {+1, -1}) out.push_back({m, sign});
  return out;
}

// χ(positive regions) - χ(negative regions); every complementary region of
// a chord set in a disc is a disc, so this counts regions with signs. The
// region inside a chord of nesting depth d has sign outer * (-1)^(d+1).
inline Int rotation_number(const DiscConfig& c) {
  Int r = c.outer_sign;
  for (size_t i = 0; i < c.matching.size(); ++i) {
    int depth = detail::chord_depth(c.matching, i);
    r += (depth % 2 == 0) ? Int(-c.outer_sign) : Int(c.outer_sign);
  }
  return r;
}

}  // namespace tcs
