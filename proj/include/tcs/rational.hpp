#pragma once

// Exact arithmetic on extended rationals Q ∪ {∞}, determinant-±1 integer
// 2x2 matrices acting on them, and negative continued fractions.
//
// Conventions fixed here and inherited by everything else:
//  - a slope p/q is stored reduced with q >= 0; ∞ is exactly (1, 0);
//  - the shortest integral vector of slope p/q is (q, p), so that the
//    slope of a vector (x, y) is y/x (the vector (n, 1) has slope 1/n);
//  - no floating point anywhere: all integers are arbitrary precision.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace tcs {

using Int = boost::multiprecision::cpp_int;

inline Int gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

// Floor/ceil division for arbitrary sign of a, b != 0.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  return -floor_div(-a, b);
}

// Extended gcd: returns g = gcd(a,b) and (x, y) with a*x + b*y = g.
struct ExtGcd {
  Int g, x, y;
};

inline ExtGcd ext_gcd(Int a, Int b) {
  Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    Int q = a / b;  // truncation is fine: invariants hold for any quotient
    Int r = a - q * b;
    a = b;
    b = r;
    Int nx = x0 - q * x1, ny = y0 - q * y1;
    x0 = x1;
    y0 = y1;
    x1 = nx;
    y1 = ny;
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  return {a, x0, y0};
}

// A point of Q ∪ {∞}: reduced p/q with q >= 0, ∞ = (1, 0).
struct ExtSlope {
  Int p{0};
  Int q{1};

  ExtSlope() = default;
  ExtSlope(Int num, Int den) {
    if (num == 0 && den == 0)
      throw std::invalid_argument("slope: numerator and denominator both zero");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (den == 0) {
      p = 1;
      q = 0;
      return;
    }
    Int g = tcs::gcd(tcs::abs(num), den);
    p = num / g;
    q = den / g;
  }

  static ExtSlope infinity() { return ExtSlope(1, 0); }

  bool is_infinite() const { return q == 0; }
  bool is_integer() const { return q == 1; }

  friend bool operator==(const ExtSlope& a, const ExtSlope& b) {
    return a.p == b.p && a.q == b.q;
  }
  friend bool operator!=(const ExtSlope& a, const ExtSlope& b) {
    return !(a == b);
  }
  // Arbitrary total order, usable as a map key (not the circular order).
  friend bool operator<(const ExtSlope& a, const ExtSlope& b) {
    if (a.p != b.p) return a.p < b.p;
    return a.q < b.q;
  }

  ExtSlope operator-() const {
    if (is_infinite()) return *this;
    return ExtSlope(-p, q);
  }
};

inline ExtSlope normalize(const Int& p, const Int& q) { return ExtSlope(p, q); }

inline std::string to_string(const ExtSlope& s) {
  if (s.is_infinite()) return "inf";
  std::string out = s.p.str();
  if (s.q != 1) out += "/" + s.q.str();
  return out;
}

// Parses "p/q", a plain integer, or "inf"; optional sign and whitespace.
inline ExtSlope parse_slope(const std::string& text) {
  size_t i = 0, j = text.size();
  while (i < j && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
  std::string t = text.substr(i, j - i);
  if (t.empty()) throw std::invalid_argument("slope: empty string");
  bool neg = false;
  size_t k = 0;
  if (t[k] == '+' || t[k] == '-') {
    neg = (t[k] == '-');
    ++k;
  }
  if (t.substr(k) == "inf") return ExtSlope::infinity();
  auto parse_int = [](const std::string& u) -> Int {
    if (u.empty()) throw std::invalid_argument("slope: missing digits");
    size_t m = 0;
    bool n = false;
    if (u[m] == '+' || u[m] == '-') {
      n = (u[m] == '-');
      ++m;
    }
    if (m == u.size()) throw std::invalid_argument("slope: missing digits");
    Int v = 0;
    for (; m < u.size(); ++m) {
      if (!std::isdigit(static_cast<unsigned char>(u[m])))
        throw std::invalid_argument("slope: bad character '" +
                                    std::string(1, u[m]) + "'");
      v = v * 10 + (u[m] - '0');
    }
    return n ? Int(-v) : v;
  };
  std::string body = t.substr(k);
  size_t slash = body.find('/');
  Int num, den;
  if (slash == std::string::npos) {
    num = parse_int(body);
    den = 1;
  } else {
    num = parse_int(body.substr(0, slash));
    den = parse_int(body.substr(slash + 1));
  }
  if (neg) num = -num;
  return ExtSlope(num, den);
}

// Row-major [[a, b], [c, d]]; columns are the images of (1,0) and (0,1).
struct Mat2Z {
  Int a, b, c, d;

  Mat2Z(Int a_, Int b_, Int c_, Int d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    Int det = a * d - b * c;
    if (det != 1 && det != -1)
      throw std::invalid_argument("matrix: determinant must be +1 or -1");
  }

  static Mat2Z identity() { return Mat2Z(1, 0, 0, 1); }

  Int det() const { return a * d - b * c; }

  friend bool operator==(const Mat2Z& m, const Mat2Z& n) {
    return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
  }
};

inline Mat2Z compose(const Mat2Z& m, const Mat2Z& n) {
  return Mat2Z(m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
               m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d);
}

inline Mat2Z invert(const Mat2Z& m) {
  Int det = m.det();
  if (det == 1) return Mat2Z(m.d, -m.b, -m.c, m.a);
  return Mat2Z(-m.d, m.b, m.c, -m.a);
}

// Applies M to the vector (q, p) of s and reads the slope of the image.
inline ExtSlope apply_matrix(const Mat2Z& m, const ExtSlope& s) {
  Int x = m.a * s.q + m.b * s.p;
  Int y = m.c * s.q + m.d * s.p;
  return ExtSlope(y, x);
}

// Negative continued fraction [r0, ..., rk]: all ri <= -2 except the
// degenerate expansion [-1] of the slope -1 itself.
using NegCF = std::vector<Int>;

// Expansion -p/q = r0 - 1/(r1 - ... - 1/rk) by repeated ceiling division.
inline NegCF neg_cf(const ExtSlope& s) {
  if (s.is_infinite()) throw std::invalid_argument("neg_cf: slope is infinite");
  if (s.p > -s.q)  // s > -1
    throw std::invalid_argument("neg_cf: slope must be <= -1");
  if (s.p == -s.q) return {Int(-1)};
  Int p = -s.p, q = s.q;  // s = -p/q with p > q >= 1
  NegCF out;
  while (q != 0) {
    Int a = ceil_div(p, q);
    out.push_back(-a);
    Int next = a * q - p;
    p = q;
    q = next;
  }
  return out;
}

inline ExtSlope eval_neg_cf(const NegCF& cf) {
  if (cf.empty()) throw std::invalid_argument("eval_neg_cf: empty expansion");
  // Evaluate from the innermost term outward as a fraction n/d.
  Int n = cf.back(), d = 1;
  for (size_t i = cf.size() - 1; i-- > 0;) {
    // cf[i] - d/n
    Int nn = cf[i] * n - d;
    d = n;
    n = nn;
  }
  return ExtSlope(n, d);
}

}  // namespace tcs
