#pragma once

// The Farey tessellation as a combinatorial structure: the edge relation,
// mediants, the circular order on Q ∪ {∞}, bypass attachment, basic-slice
// decompositions and their continued-fraction blocks.
//
// Circle embedding: 0 sits at (1,0), ∞ at (-1,0), positive slopes on the
// upper semicircle ordered by value, negative slopes on the lower one.
// Counterclockwise is the direction 0 -> 1 -> ∞ -> -1 -> 0.

#include "tcs/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace tcs {

// |p_a q_b - p_b q_a|: 1 exactly when the shortest vectors form a basis.
inline Int edge_det(const ExtSlope& a, const ExtSlope& b) {
  return tcs::abs(a.p * b.q - b.p * a.q);
}

inline bool is_edge(const ExtSlope& a, const ExtSlope& b) {
  if (a == b) throw std::invalid_argument("is_edge: equal slopes");
  return edge_det(a, b) == 1;
}

inline ExtSlope mediant(const ExtSlope& a, const ExtSlope& b) {
  if (!is_edge(a, b)) throw std::invalid_argument("mediant: not a Farey edge");
  return ExtSlope(a.p + b.p, a.q + b.q);
}

namespace detail {

// Rank of the circle quadrant starting at 0 and walking counterclockwise:
// 0, then positives, then ∞, then negatives.
inline int circ_class(const ExtSlope& s) {
  if (s.is_infinite()) return 2;
  if (s.p == 0) return 0;
  return s.p > 0 ? 1 : 3;
}

// Strict "a before b" in the counterclockwise walk starting at 0.
inline bool ccw_before(const ExtSlope& a, const ExtSlope& b) {
  int ca = circ_class(a), cb = circ_class(b);
  if (ca != cb) return ca < cb;
  // Same open semicircle: counterclockwise means increasing value.
  return a.p * b.q < b.p * a.q;
}

}  // namespace detail

// True iff x lies strictly inside the counterclockwise arc from -> to.
inline bool ccw_in_arc(const ExtSlope& x, const ExtSlope& from,
                       const ExtSlope& to) {
  if (from == to) throw std::invalid_argument("ccw_in_arc: degenerate arc");
  if (x == from || x == to) return false;
  using detail::ccw_before;
  if (ccw_before(from, to)) return ccw_before(from, x) && ccw_before(x, to);
  return ccw_before(from, x) || ccw_before(x, to);
}

// Membership in the counterclockwise arc lo -> hi with chosen endpoint
// inclusivity. lo == hi is read as the full circle (wrap-around interval).
inline bool arc_contains(const ExtSlope& s, const ExtSlope& lo,
                         const ExtSlope& hi, bool include_lo = true,
                         bool include_hi = true) {
  if (lo == hi) return true;
  if (s == lo) return include_lo;
  if (s == hi) return include_hi;
  return ccw_in_arc(s, lo, hi);
}

// A convex torus in the combinatorial shadow: division number and the
// slope of its dividing curves.
struct TorusDividing {
  Int division_number;
  ExtSlope slope;

  TorusDividing(Int n, ExtSlope s) : division_number(std::move(n)), slope(std::move(s)) {
    if (division_number < 1)
      throw std::invalid_argument("torus: division number must be >= 1");
  }
};

namespace detail {

// Orientation-preserving matrix sending vec(s) = (q, p) to (0, 1).
inline Mat2Z to_infinity(const ExtSlope& s) {
  // Rows (p, -q) and (c, d) with c*q + d*p = 1; det = p*d + q*c = 1.
  ExtGcd e = ext_gcd(s.q, s.p);
  return Mat2Z(s.p, -s.q, e.x, e.y);
}

}  // namespace detail

// Attaches a bypass along a ruling curve of slope r. With division number
// n > 1 only the division number drops; with n = 1 the slope moves to the
// point of the counterclockwise arc [r, s] closest to r that carries a
// Farey edge to s.
inline TorusDividing bypass_attach(const TorusDividing& t, const ExtSlope& r) {
  if (r == t.slope)
    throw std::invalid_argument("bypass_attach: attaching slope equals dividing slope");
  if (t.division_number > 1)
    return TorusDividing(t.division_number - 1, t.slope);
  // Send s to ∞; the Farey neighbours of ∞ are the integers, and the arc
  // [r', ∞] counterclockwise sweeps the integers upward from r', so the
  // closest one is the ceiling of r'.
  Mat2Z m = detail::to_infinity(t.slope);
  ExtSlope r2 = apply_matrix(m, r);
  ExtSlope s2(ceil_div(r2.p, r2.q), 1);
  return TorusDividing(1, apply_matrix(invert(m), s2));
}

// Indices [begin, end) into the slice list, plus one common Farey neighbour.
struct CFBlock {
  size_t begin;
  size_t end;
  ExtSlope witness;
};

// Ordered slopes [s1 = t0, t1, ..., tk = s0] of a basic-slice decomposition,
// partitioned into maximal continued-fraction blocks.
struct SliceDecomposition {
  std::vector<ExtSlope> slopes;
  std::vector<CFBlock> blocks;

  size_t slice_count() const { return slopes.size() - 1; }
};

namespace detail {

// The two common Farey neighbours of an edge (a, b): vector sum and
// difference of the shortest vectors.
inline std::vector<ExtSlope> common_neighbours(const ExtSlope& a,
                                               const ExtSlope& b) {
  return {ExtSlope(a.p + b.p, a.q + b.q), ExtSlope(a.p - b.p, a.q - b.q)};
}

inline std::vector<CFBlock> cut_blocks(const std::vector<ExtSlope>& path) {
  std::vector<CFBlock> blocks;
  size_t k = path.size() - 1;  // number of slices
  size_t start = 0;
  std::vector<ExtSlope> witnesses;
  for (size_t i = 0; i < k; ++i) {
    if (i == start) {
      witnesses = common_neighbours(path[i], path[i + 1]);
      continue;
    }
    std::vector<ExtSlope> kept;
    for (const ExtSlope& w : witnesses)
      if (w != path[i + 1] && edge_det(w, path[i + 1]) == 1) kept.push_back(w);
    if (kept.empty()) {
      blocks.push_back({start, i, witnesses.front()});
      start = i;
      witnesses = common_neighbours(path[i], path[i + 1]);
    } else {
      witnesses = std::move(kept);
    }
  }
  blocks.push_back({start, k, witnesses.front()});
  return blocks;
}

}  // namespace detail

// The minimal counterclockwise slope sequence from s1 to s0 in which
// consecutive slopes are Farey-adjacent and no slope can be skipped.
inline SliceDecomposition decompose(const ExtSlope& s0, const ExtSlope& s1) {
  if (s0 == s1) throw std::invalid_argument("decompose: equal slopes");
  std::vector<ExtSlope> path{s1};
  ExtSlope cur = s1;
  while (edge_det(cur, s0) != 1) {
    // In coordinates where cur = ∞ the next vertex toward s0 is ⌊s0⌋.
    Mat2Z m = detail::to_infinity(cur);
    ExtSlope s0m = apply_matrix(m, s0);
    ExtSlope next(floor_div(s0m.p, s0m.q), 1);
    cur = apply_matrix(invert(m), next);
    path.push_back(cur);
  }
  path.push_back(s0);
  SliceDecomposition d;
  d.blocks = detail::cut_blocks(path);
  d.slopes = std::move(path);
  return d;
}

// Twisting of a ruling curve of slope r on the torus t: minus half the
// geometric intersection count with the dividing set.
inline Int twisting_of_curve(const TorusDividing& t, const ExtSlope& r) {
  if (r == t.slope)
    throw std::invalid_argument("twisting_of_curve: curve parallel to dividing set");
  return -t.division_number * edge_det(t.slope, r);
}

}  // namespace tcs
