#pragma once

// Slope bookkeeping for small Seifert fibered spaces: the three attaching
// matrices, boundary slopes of the fiber complements as functions of the
// twisting numbers, edge-rounding arithmetic, and the bypass predicates
// (twist number lemma, imbalance principle).

#include "tcs/counting.hpp"
#include "tcs/rational.hpp"

#include <array>
#include <optional>
#include <stdexcept>

namespace tcs {

// Three reduced fractions beta_i/alpha_i plus the attaching matrices
// A_i = [[alpha_i, gamma_i], [-beta_i, delta_i]] of determinant 1.
struct SeifertData {
  std::array<ExtSlope, 3> invariants;
  std::array<Mat2Z, 3> attach;
};

namespace detail {

inline Mat2Z complete_attach(const ExtSlope& r) {
  Int alpha = r.q, beta = r.p;
  // alpha*delta + beta*gamma = 1, with |gamma| minimal.
  ExtGcd e = ext_gcd(alpha, beta);  // alpha*x + beta*y = 1
  Int gamma = e.y, delta = e.x;
  if (alpha > 1) {
    Int k = floor_div(gamma + alpha / 2, alpha);  // nearest multiple
    gamma -= k * alpha;
    delta += k * beta;
  }
  return Mat2Z(alpha, gamma, -beta, delta);
}

inline void check_attach(const ExtSlope& r, const Mat2Z& m) {
  if (m.det() != 1)
    throw std::invalid_argument("seifert: attaching matrix must have determinant 1");
  if (m.a != r.q || m.c != -r.p)
    throw std::invalid_argument("seifert: first matrix column must be (alpha, -beta)");
}

}  // namespace detail

inline SeifertData make_seifert(const ExtSlope& r1, const ExtSlope& r2,
                                const ExtSlope& r3) {
  std::array<ExtSlope, 3> inv{r1, r2, r3};
  for (const ExtSlope& r : inv)
    if (r.q < 1) throw std::invalid_argument("seifert: invariant must be finite");
  return SeifertData{inv,
                     {detail::complete_attach(r1), detail::complete_attach(r2),
                      detail::complete_attach(r3)}};
}

inline SeifertData make_seifert(const ExtSlope& r1, const ExtSlope& r2,
                                const ExtSlope& r3, const Mat2Z& a1,
                                const Mat2Z& a2, const Mat2Z& a3) {
  std::array<ExtSlope, 3> inv{r1, r2, r3};
  std::array<Mat2Z, 3> att{a1, a2, a3};
  for (int i = 0; i < 3; ++i) {
    if (inv[i].q < 1)
      throw std::invalid_argument("seifert: invariant must be finite");
    detail::check_attach(inv[i], att[i]);
  }
  return SeifertData{inv, att};
}

// Boundary slope on -∂(M \ V_i) of the fiber complement when V_i is a
// standard neighborhood with twisting number n: the slope of A_i (n, 1)^T.
inline ExtSlope complement_slope(const SeifertData& m, int fiber, const Int& n) {
  if (fiber < 1 || fiber > 3)
    throw std::invalid_argument("complement_slope: fiber index must be 1..3");
  if (n > 0)
    throw std::invalid_argument("complement_slope: twisting number must be <= 0");
  const Mat2Z& a = m.attach[fiber - 1];
  return ExtSlope(a.c * n + a.d, a.a * n + a.b);
}

// Slope change of re-reading a curve on the same torus with the opposite
// orientation of the ambient piece: s -> -s.
inline ExtSlope orient_reverse(const ExtSlope& s) { return -s; }

// Slope of the torus obtained by cutting along a vertical annulus between
// two tori of slopes a/d and b/d and rounding the four edges: (a+b-1)/d.
inline ExtSlope round_edges(const Int& a, const Int& b, const Int& d) {
  if (d == 0) throw std::invalid_argument("round_edges: zero denominator");
  return ExtSlope(a + b - 1, d);
}

// Twist number lemma hypothesis: a bypass along a ruling curve of slope r
// raises the twisting number n when 1/r >= n + 1 (with 1/∞ = 0).
inline bool twist_lemma_applicable(const ExtSlope& r, const Int& n) {
  if (r.p == 0 && !r.is_infinite())
    throw std::invalid_argument("twist_lemma: slope 0 has no reciprocal bound");
  Int num = r.q, den = r.p;  // 1/r
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den == 0) return false;  // 1/r = ±∞ cannot dominate; unreachable for q>=0
  return num >= (n + 1) * den;
}

// Imbalance principle: a vertical annulus between boundary circles of
// twistings t0, t1 <= 0 carries a bypass on the more twisted side.
inline std::optional<int> imbalance(const Int& t0, const Int& t1) {
  if (t0 > 0 || t1 > 0)
    throw std::invalid_argument("imbalance: twistings must be <= 0");
  if (t0 < t1) return 0;
  if (t1 < t0) return 1;
  return std::nullopt;
}

// Product upper bound from a decomposition into three solid tori and
// pair-of-pants blocks with fixed boundary data.
inline Int upper_bound_blocks(const ExtSlope& v1, const ExtSlope& v2,
                              const ExtSlope& v3, const Int& pants_count) {
  if (pants_count < 0)
    throw std::invalid_argument("upper_bound: negative block count");
  return count_solid_torus(v1) * count_solid_torus(v2) * count_solid_torus(v3) *
         pants_count;
}

}  // namespace tcs
