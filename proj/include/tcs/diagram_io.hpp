#pragma once

// JSON serialization of surgery diagrams:
// {"nodes": [{"id": 0, "coeff": "p/q"}, ...], "edges": [[i, j], ...]}

#include "tcs/kirby.hpp"
#include "tcs/rational.hpp"

#include <json.hpp>

#include <set>
#include <stdexcept>

namespace tcs {

struct DiagramFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline SurgeryDiagram diagram_from_json(const nlohmann::json& j) {
  if (!j.contains("nodes") || !j["nodes"].is_array())
    throw DiagramFormatError("diagram: missing nodes array");
  SurgeryDiagram d;
  std::set<int> ids;
  for (const auto& n : j["nodes"]) {
    if (!n.contains("id") || !n["id"].is_number_integer() ||
        !n.contains("coeff") || !n["coeff"].is_string())
      throw DiagramFormatError("diagram: node needs integer id and string coeff");
    int id = n["id"].get<int>();
    if (!ids.insert(id).second)
      throw DiagramFormatError("diagram: duplicate node id");
    try {
      d.nodes.push_back({id, parse_slope(n["coeff"].get<std::string>())});
    } catch (const std::invalid_argument& e) {
      throw DiagramFormatError(std::string("diagram: bad coefficient: ") + e.what());
    }
  }
  std::sort(d.nodes.begin(), d.nodes.end(),
            [](const SurgeryNode& a, const SurgeryNode& b) { return a.id < b.id; });
  if (j.contains("edges")) {
    if (!j["edges"].is_array())
      throw DiagramFormatError("diagram: edges must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2)
        throw DiagramFormatError("diagram: edge must be [i, j]");
      int u = e[0].get<int>(), v = e[1].get<int>();
      if (!ids.count(u) || !ids.count(v) || u == v)
        throw DiagramFormatError("diagram: edge endpoints invalid");
      d.add_edge(u, v);
    }
  }
  if (d.nodes.empty()) throw DiagramFormatError("diagram: no nodes");
  if (d.edges.size() + 1 != d.nodes.size())
    throw DiagramFormatError("diagram: must be a tree");
  std::set<int> reached{d.nodes.front().id};
  std::vector<int> stack{d.nodes.front().id};
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    for (int nb : d.neighbours(cur))
      if (reached.insert(nb).second) stack.push_back(nb);
  }
  if (reached.size() != d.nodes.size())
    throw DiagramFormatError("diagram: must be connected");
  return d;
}

inline nlohmann::json diagram_to_json(const SurgeryDiagram& d) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& n : d.nodes)
    nodes.push_back({{"id", n.id}, {"coeff", to_string(n.coeff)}});
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : d.edges) edges.push_back({u, v});
  return nlohmann::json{{"nodes", nodes}, {"edges", edges}};
}

}  // namespace tcs
