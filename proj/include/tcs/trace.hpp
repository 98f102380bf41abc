#pragma once

// Verifying trace engine: replays a scripted slope derivation step by step
// against inline expectations. Scripts never discover bypasses; each step
// records an assumed move or computation together with its expected result.

#include "tcs/counting.hpp"
#include "tcs/farey.hpp"
#include "tcs/rational.hpp"
#include "tcs/seifert.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tcs {

struct TraceFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TraceStepResult {
  size_t index;
  std::string op;
  std::string expected;
  std::string actual;
  bool pass;
};

struct TraceReport {
  std::vector<TraceStepResult> steps;
  bool all_pass = true;
  std::optional<size_t> failed_index;
};

namespace detail {

inline Int json_int(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw TraceFormatError(std::string("trace: missing integer field '") + key + "'");
  return Int(j[key].get<long long>());
}

inline ExtSlope json_slope(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    throw TraceFormatError(std::string("trace: missing slope field '") + key + "'");
  try {
    return parse_slope(j[key].get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw TraceFormatError(std::string("trace: bad slope in '") + key + "': " + e.what());
  }
}

inline Mat2Z named_matrix(const SeifertData& m, const std::string& name) {
  for (int i = 0; i < 3; ++i) {
    std::string base = "A" + std::to_string(i + 1);
    if (name == base) return m.attach[i];
    if (name == base + "_inv") return invert(m.attach[i]);
  }
  throw TraceFormatError("trace: unknown matrix name '" + name + "'");
}

}  // namespace detail

inline SeifertData seifert_from_json(const nlohmann::json& j) {
  if (!j.contains("invariants") || !j["invariants"].is_array() ||
      j["invariants"].size() != 3)
    throw TraceFormatError("trace: manifold needs exactly three invariants");
  std::vector<ExtSlope> inv;
  for (const auto& s : j["invariants"]) {
    if (!s.is_string()) throw TraceFormatError("trace: invariant must be a string");
    inv.push_back(parse_slope(s.get<std::string>()));
  }
  if (j.contains("matrices")) {
    const auto& ms = j["matrices"];
    if (!ms.is_array() || ms.size() != 3)
      throw TraceFormatError("trace: need exactly three matrices");
    std::vector<Mat2Z> mats;
    for (const auto& row : ms) {
      if (!row.is_array() || row.size() != 4)
        throw TraceFormatError("trace: matrix must be [a,b,c,d]");
      mats.emplace_back(Int(row[0].get<long long>()), Int(row[1].get<long long>()),
                        Int(row[2].get<long long>()), Int(row[3].get<long long>()));
    }
    return make_seifert(inv[0], inv[1], inv[2], mats[0], mats[1], mats[2]);
  }
  return make_seifert(inv[0], inv[1], inv[2]);
}

// Executes the script, comparing each step against its expectation;
// execution stops at the first failing step.
inline TraceReport run_trace(const nlohmann::json& script) {
  if (!script.contains("manifold"))
    throw TraceFormatError("trace: missing manifold");
  SeifertData m = seifert_from_json(script["manifold"]);
  if (!script.contains("steps") || !script["steps"].is_array())
    throw TraceFormatError("trace: missing steps array");

  TraceReport report;
  size_t index = 0;
  for (const auto& step : script["steps"]) {
    if (!step.contains("op") || !step["op"].is_string())
      throw TraceFormatError("trace: step without op");
    std::string op = step["op"].get<std::string>();
    std::string actual, expected;

    if (op == "complement_slope") {
      int fiber = static_cast<int>(detail::json_int(step, "fiber"));
      Int twist = detail::json_int(step, "twist");
      actual = to_string(complement_slope(m, fiber, twist));
      expected = to_string(detail::json_slope(step, "expect"));
    } else if (op == "round_edges") {
      actual = to_string(round_edges(detail::json_int(step, "a"),
                                     detail::json_int(step, "b"),
                                     detail::json_int(step, "d")));
      expected = to_string(detail::json_slope(step, "expect"));
    } else if (op == "bypass_attach") {
      Int n = step.contains("n") ? detail::json_int(step, "n") : Int(1);
      TorusDividing t(n, detail::json_slope(step, "s"));
      TorusDividing res = bypass_attach(t, detail::json_slope(step, "r"));
      actual = to_string(res.slope);
      expected = to_string(detail::json_slope(step, "expect"));
    } else if (op == "apply_matrix") {
      if (!step.contains("matrix"))
        throw TraceFormatError("trace: apply_matrix needs a matrix");
      const auto& mj = step["matrix"];
      Mat2Z mat = Mat2Z::identity();
      if (mj.is_string()) {
        mat = detail::named_matrix(m, mj.get<std::string>());
      } else if (mj.is_array() && mj.size() == 4) {
        mat = Mat2Z(Int(mj[0].get<long long>()), Int(mj[1].get<long long>()),
                    Int(mj[2].get<long long>()), Int(mj[3].get<long long>()));
      } else {
        throw TraceFormatError("trace: matrix must be a name or [a,b,c,d]");
      }
      actual = to_string(apply_matrix(mat, detail::json_slope(step, "slope")));
      expected = to_string(detail::json_slope(step, "expect"));
    } else if (op == "orient_reverse") {
      actual = to_string(orient_reverse(detail::json_slope(step, "slope")));
      expected = to_string(detail::json_slope(step, "expect"));
    } else if (op == "arc_contains") {
      bool inc_lo = !step.contains("include_lo") || step["include_lo"].get<bool>();
      bool inc_hi = !step.contains("include_hi") || step["include_hi"].get<bool>();
      bool res = arc_contains(detail::json_slope(step, "s"),
                              detail::json_slope(step, "lo"),
                              detail::json_slope(step, "hi"), inc_lo, inc_hi);
      actual = res ? "true" : "false";
      if (!step.contains("expect") || !step["expect"].is_boolean())
        throw TraceFormatError("trace: arc_contains expects a boolean");
      expected = step["expect"].get<bool>() ? "true" : "false";
    } else if (op == "twist_lemma") {
      bool res = twist_lemma_applicable(detail::json_slope(step, "r"),
                                        detail::json_int(step, "n"));
      actual = res ? "true" : "false";
      if (!step.contains("expect") || !step["expect"].is_boolean())
        throw TraceFormatError("trace: twist_lemma expects a boolean");
      expected = step["expect"].get<bool>() ? "true" : "false";
    } else if (op == "imbalance") {
      auto res = imbalance(detail::json_int(step, "t0"), detail::json_int(step, "t1"));
      actual = res ? std::to_string(*res) : "none";
      if (!step.contains("expect") || !step["expect"].is_string())
        throw TraceFormatError("trace: imbalance expects \"0\", \"1\" or \"none\"");
      expected = step["expect"].get<std::string>();
    } else if (op == "count_solid_torus") {
      actual = count_solid_torus(detail::json_slope(step, "slope")).str();
      expected = detail::json_int(step, "expect").str();
    } else if (op == "count_t2i") {
      actual = count_t2i(detail::json_slope(step, "s0"),
                         detail::json_slope(step, "s1")).str();
      expected = detail::json_int(step, "expect").str();
    } else if (op == "upper_bound") {
      actual = upper_bound_blocks(detail::json_slope(step, "v1"),
                                  detail::json_slope(step, "v2"),
                                  detail::json_slope(step, "v3"),
                                  detail::json_int(step, "pants")).str();
      expected = detail::json_int(step, "expect").str();
    } else {
      throw TraceFormatError("trace: unknown op '" + op + "'");
    }

    bool pass = (actual == expected);
    report.steps.push_back({index, op, expected, actual, pass});
    if (!pass) {
      report.all_pass = false;
      report.failed_index = index;
      break;
    }
    ++index;
  }
  return report;
}

inline nlohmann::json report_to_json(const TraceReport& r) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"index", s.index},
                     {"op", s.op},
                     {"expected", s.expected},
                     {"actual", s.actual},
                     {"pass", s.pass}});
  nlohmann::json out{{"steps", steps}, {"all_pass", r.all_pass}};
  if (r.failed_index) out["failed_index"] = *r.failed_index;
  return out;
}

}  // namespace tcs
