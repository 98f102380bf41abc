#pragma once

// Rational surgery diagrams for small Seifert manifolds (star-shaped trees
// of unknots with linking number 1 on the edges), the Kirby moves used to
// normalize them (Rolfsen twist, slam-dunk, inverse slam-dunk), and the
// enumeration of Legendrian realizations of a normalized diagram.

#include "tcs/rational.hpp"
#include "tcs/seifert.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tcs {

struct NormalizationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SurgeryNode {
  int id;
  ExtSlope coeff;
};

struct SurgeryDiagram {
  std::vector<SurgeryNode> nodes;            // kept sorted by id
  std::vector<std::pair<int, int>> edges;    // (lo, hi), kept sorted

  const SurgeryNode* find(int id) const {
    for (const auto& n : nodes)
      if (n.id == id) return &n;
    return nullptr;
  }
  SurgeryNode* find(int id) {
    for (auto& n : nodes)
      if (n.id == id) return &n;
    return nullptr;
  }

  std::vector<int> neighbours(int id) const {
    std::vector<int> out;
    for (const auto& [u, v] : edges) {
      if (u == id) out.push_back(v);
      if (v == id) out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  int degree(int id) const { return static_cast<int>(neighbours(id).size()); }

  void add_edge(int u, int v) {
    if (u > v) std::swap(u, v);
    edges.emplace_back(u, v);
    std::sort(edges.begin(), edges.end());
  }

  void remove_node(int id) {
    nodes.erase(std::remove_if(nodes.begin(), nodes.end(),
                               [&](const SurgeryNode& n) { return n.id == id; }),
                nodes.end());
    edges.erase(std::remove_if(edges.begin(), edges.end(),
                               [&](const std::pair<int, int>& e) {
                                 return e.first == id || e.second == id;
                               }),
                edges.end());
  }

  int next_id() const {
    int m = -1;
    for (const auto& n : nodes) m = std::max(m, n.id);
    return m + 1;
  }
};

// Central unknot with coefficient 0 and one leg -1/r_i per invariant.
inline SurgeryDiagram seifert_to_diagram(const SeifertData& m) {
  SurgeryDiagram d;
  d.nodes.push_back({0, ExtSlope(0, 1)});
  for (int i = 0; i < 3; ++i) {
    const ExtSlope& r = m.invariants[i];
    if (r.p == 0)
      throw std::invalid_argument("surgery diagram: invariant with zero numerator");
    d.nodes.push_back({i + 1, ExtSlope(-r.q, r.p)});
    d.add_edge(0, i + 1);
  }
  return d;
}

// Rolfsen twist: p/q -> p/(q + t p) on the node, +t on every neighbour.
// A coefficient that becomes ∞ makes the component removable: the node is
// deleted and its neighbours are joined into a path (in id order).
inline SurgeryDiagram rolfsen_twist(const SurgeryDiagram& d, int node, const Int& t) {
  SurgeryDiagram out = d;
  SurgeryNode* n = out.find(node);
  if (!n) throw std::invalid_argument("rolfsen: no such node");
  if (n->coeff.is_infinite())
    throw std::invalid_argument("rolfsen: component already removable");
  if (t == 0) return out;
  Int p = n->coeff.p, q = n->coeff.q + t * n->coeff.p;
  for (int nb : out.neighbours(node)) {
    SurgeryNode* m = out.find(nb);
    m->coeff = ExtSlope(m->coeff.p + t * m->coeff.q, m->coeff.q);
  }
  if (q == 0) {
    std::vector<int> nbs = out.neighbours(node);
    out.remove_node(node);
    for (size_t i = 0; i + 1 < nbs.size(); ++i) out.add_edge(nbs[i], nbs[i + 1]);
    return out;
  }
  out.find(node)->coeff = ExtSlope(p, q);
  return out;
}

// Slam-dunk of a leaf with coefficient r into its neighbour: s -> s - 1/r.
inline SurgeryDiagram slam_dunk(const SurgeryDiagram& d, int leaf) {
  SurgeryDiagram out = d;
  const SurgeryNode* n = out.find(leaf);
  if (!n) throw std::invalid_argument("slam_dunk: no such node");
  if (n->coeff.p == 0) throw std::invalid_argument("slam_dunk: coefficient 0");
  if (n->coeff.is_infinite())
    throw std::invalid_argument("slam_dunk: infinite coefficient");
  std::vector<int> nbs = out.neighbours(leaf);
  if (nbs.size() != 1) throw std::invalid_argument("slam_dunk: node is not a leaf");
  SurgeryNode* m = out.find(nbs.front());
  // s - 1/r = (s_p * r_p - r_q * s_q) / (s_q * r_p)
  m->coeff = ExtSlope(m->coeff.p * n->coeff.p - n->coeff.q * m->coeff.q,
                      m->coeff.q * n->coeff.p);
  out.remove_node(leaf);
  return out;
}

// Replaces a node of rational coefficient <= -1 by the linear chain of its
// negative continued fraction expansion; the first chain entry keeps the
// node's edges, the rest hang off it as a fresh tail.
inline SurgeryDiagram inverse_slam_dunk(const SurgeryDiagram& d, int node) {
  SurgeryDiagram out = d;
  SurgeryNode* n = out.find(node);
  if (!n) throw std::invalid_argument("inverse_slam_dunk: no such node");
  if (n->coeff.is_infinite() || n->coeff.p > -n->coeff.q)
    throw std::invalid_argument("inverse_slam_dunk: coefficient must be <= -1");
  NegCF cf = neg_cf(n->coeff);
  n->coeff = ExtSlope(cf.front(), 1);
  int prev = node;
  for (size_t i = 1; i < cf.size(); ++i) {
    int fresh = out.next_id();
    out.nodes.push_back({fresh, ExtSlope(cf[i], 1)});
    out.add_edge(prev, fresh);
    prev = fresh;
  }
  return out;
}

namespace detail {

inline bool all_integer_le(const SurgeryDiagram& d, const Int& bound) {
  for (const auto& n : d.nodes)
    if (n.coeff.q != 1 || n.coeff.p > bound) return false;
  return true;
}

// Every coefficient rational and strictly below -1 (so that the expansion
// of each node consists of integers <= -2).
inline bool expandable(const SurgeryDiagram& d) {
  for (const auto& n : d.nodes)
    if (n.coeff.is_infinite() || n.coeff.p >= -n.coeff.q) return false;
  return true;
}

inline SurgeryDiagram expand_all(const SurgeryDiagram& d) {
  SurgeryDiagram out = d;
  std::vector<int> ids;
  for (const auto& n : out.nodes) ids.push_back(n.id);
  for (int id : ids) out = inverse_slam_dunk(out, id);
  return out;
}

// Total number of stabilizations forced by the expanded coefficients:
// sum over expansion entries of (-c - 2); zero exactly for an all-(-2)
// final diagram.
inline Int stabilization_cost(const SurgeryDiagram& d) {
  Int cost = 0;
  for (const auto& n : d.nodes)
    for (const Int& c : neg_cf(n.coeff)) cost += -c - 2;
  return cost;
}

inline std::string diagram_key(const SurgeryDiagram& d) {
  std::string k;
  for (const auto& n : d.nodes)
    k += std::to_string(n.id) + ":" + to_string(n.coeff) + ";";
  k += "|";
  for (const auto& [u, v] : d.edges)
    k += std::to_string(u) + "-" + std::to_string(v) + ";";
  return k;
}

inline std::string coeff_signature(const SurgeryDiagram& d) {
  std::vector<std::string> cs;
  for (const auto& n : d.nodes) cs.push_back(to_string(n.coeff));
  std::sort(cs.begin(), cs.end());
  std::string out;
  for (const auto& c : cs) out += c + ",";
  return out;
}

}  // namespace detail

// Deterministic normalization toward a Legendrian-surgery-ready diagram
// (all coefficients integers <= -2 after expansion). Strategy, in order:
//   1. if every coefficient is already an integer <= -1, do nothing;
//   2. twist each leg whose coefficient is >= -1 by the unique Rolfsen
//      twist putting it into [-p, -1]; if afterwards every coefficient is
//      < -1, integerize by inverse slam-dunks;
//   3. otherwise run a bounded breadth-first search over slam-dunks and
//      small Rolfsen twists for a diagram with all coefficients < -1,
//      preferring one whose expansion needs no stabilization at all
//      (all coefficients -2), then fewer moves, then fewer components.
// The strategy is scripted, not a decision procedure; it throws
// NormalizationError when the search budget is exhausted.
inline SurgeryDiagram normalize_for_legendrian(const SurgeryDiagram& d) {
  if (d.nodes.empty())
    throw std::invalid_argument("normalize: empty diagram");
  for (const auto& n : d.nodes)
    if (n.coeff.is_infinite())
      throw std::invalid_argument("normalize: removable component present");

  if (detail::all_integer_le(d, Int(-1))) return d;

  // Phase 1: canonical leg twists.
  SurgeryDiagram cur = d;
  for (const auto& n : std::vector<SurgeryNode>(cur.nodes.begin(), cur.nodes.end())) {
    const SurgeryNode* live = cur.find(n.id);
    if (!live || cur.degree(n.id) != 1) continue;
    const ExtSlope& c = live->coeff;
    if (c.p < -c.q) continue;  // already < -1
    if (c.p == 0) continue;
    Int P = tcs::abs(c.p);
    Int r = ((c.q % P) + P) % P;
    Int qn = (c.p > 0) ? Int(r - P) : (r == 0 ? P : r);
    Int t = (qn - c.q) / c.p;
    if (t != 0) cur = rolfsen_twist(cur, n.id, t);
  }
  if (detail::expandable(cur)) return detail::expand_all(cur);

  // Phase 2: bounded search from the original diagram.
  const int kMaxDepth = 6;
  const size_t kMaxStates = 200000;
  struct Goal {
    SurgeryDiagram diagram;
    int depth;
    Int cost;
    size_t size;
    std::string sig;
  };
  std::vector<Goal> goals;
  int zero_cost_depth = -1;  // depth of the first stabilization-free goal
  std::deque<std::pair<SurgeryDiagram, int>> queue{{d, 0}};
  std::set<std::string> seen{detail::diagram_key(d)};
  static const Int kTwists[] = {Int(1), Int(-1), Int(2), Int(-2), Int(3), Int(-3)};
  while (!queue.empty() && seen.size() < kMaxStates) {
    auto [state, depth] = queue.front();
    queue.pop_front();
    // A stabilization-free goal beats anything deeper; once one is known,
    // only finish scanning its own breadth-first level.
    if (zero_cost_depth >= 0 && depth > zero_cost_depth) break;
    if (detail::expandable(state)) {
      Int cost = detail::stabilization_cost(state);
      if (cost == 0 && zero_cost_depth < 0) zero_cost_depth = depth;
      goals.push_back({state, depth, std::move(cost), state.nodes.size(),
                       detail::coeff_signature(state)});
      continue;
    }
    if (depth == kMaxDepth || (zero_cost_depth >= 0 && depth >= zero_cost_depth))
      continue;
    std::vector<SurgeryDiagram> moves;
    for (const auto& n : state.nodes)
      if (state.degree(n.id) == 1 && n.coeff.p != 0)
        moves.push_back(slam_dunk(state, n.id));
    for (const auto& n : state.nodes)
      for (const Int& t : kTwists) moves.push_back(rolfsen_twist(state, n.id, t));
    for (auto& next : moves) {
      if (next.nodes.empty()) continue;
      std::string key = detail::diagram_key(next);
      if (seen.insert(key).second) queue.emplace_back(std::move(next), depth + 1);
    }
  }
  if (goals.empty())
    throw NormalizationError("normalize: no move sequence found within budget");
  auto rank = [](const Goal& g) {
    return std::make_tuple(g.cost > 0 ? 1 : 0, g.depth, g.cost, g.size, g.sig);
  };
  const Goal* best = &goals.front();
  for (const Goal& g : goals)
    if (rank(g) < rank(*best)) best = &g;
  return detail::expand_all(best->diagram);
}

// A Legendrian representative per component: tb = coefficient + 1 and a
// rotation number of matching parity within the Bennequin bound.
struct LegendrianRealization {
  std::vector<std::pair<Int, Int>> components;  // (tb, rot) per node
};

namespace detail {

inline std::vector<Int> realization_coeffs(const SurgeryDiagram& d) {
  std::vector<Int> cs;
  for (const auto& n : d.nodes) {
    if (n.coeff.q != 1 || n.coeff.p > -2)
      throw std::invalid_argument("realizations: coefficients must be integers <= -2");
    cs.push_back(n.coeff.p);
  }
  return cs;
}

}  // namespace detail

inline Int count_realizations(const SurgeryDiagram& d) {
  Int prod = 1;
  for (const Int& c : detail::realization_coeffs(d)) prod *= -c - 1;
  return prod;
}

inline std::vector<LegendrianRealization> list_realizations(const SurgeryDiagram& d) {
  std::vector<Int> cs = detail::realization_coeffs(d);
  std::vector<LegendrianRealization> out{LegendrianRealization{}};
  for (const Int& c : cs) {
    Int tb = c + 1;
    std::vector<LegendrianRealization> next;
    for (const auto& partial : out)
      for (Int rot = tb + 1; rot <= -tb - 1; rot += 2) {
        LegendrianRealization r = partial;
        r.components.emplace_back(tb, rot);
        next.push_back(std::move(r));
      }
    out = std::move(next);
    if (out.size() > 100000)
      throw std::invalid_argument("realizations: enumeration too large");
  }
  return out;
}

}  // namespace tcs
