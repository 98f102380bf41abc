// Command-line front end: slope arithmetic, Farey tessellation queries,
// tight-structure counting, Seifert slope bookkeeping with verified trace
// replay, and Kirby-move manipulation of surgery diagrams.
//
// Exit codes: 0 success, 1 verification/normalization failure, 2 input error.

#include "tcs/counting.hpp"
#include "tcs/diagram_io.hpp"
#include "tcs/farey.hpp"
#include "tcs/kirby.hpp"
#include "tcs/rational.hpp"
#include "tcs/seifert.hpp"
#include "tcs/svg.hpp"
#include "tcs/trace.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kInputError = 2;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

tcs::Mat2Z parse_matrix(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 4)
    throw std::invalid_argument("matrix: expected four comma-separated integers");
  tcs::Int v[4];
  for (int i = 0; i < 4; ++i) {
    tcs::ExtSlope s = tcs::parse_slope(parts[i]);
    if (s.q != 1) throw std::invalid_argument("matrix: entries must be integers");
    v[i] = s.p;
  }
  return tcs::Mat2Z(v[0], v[1], v[2], v[3]);
}

tcs::Int parse_int_arg(const std::string& text) {
  tcs::ExtSlope s = tcs::parse_slope(text);
  if (s.q != 1) throw std::invalid_argument("expected an integer, got " + text);
  return s.p;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

void emit(bool as_json, const json& payload, const std::string& human) {
  if (as_json)
    std::cout << payload.dump(2) << "\n";
  else
    std::cout << human << "\n";
}

json decomposition_json(const tcs::SliceDecomposition& d) {
  json slopes = json::array();
  for (const auto& s : d.slopes) slopes.push_back(tcs::to_string(s));
  json blocks = json::array();
  for (const auto& b : d.blocks)
    blocks.push_back({{"begin", b.begin},
                      {"end", b.end},
                      {"witness", tcs::to_string(b.witness)}});
  return json{{"slopes", slopes}, {"blocks", blocks}};
}

std::string sign_string(const tcs::SignAssignment& a) {
  std::string s;
  for (int v : a) s += (v > 0 ? '+' : '-');
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Farey/contact-structure calculus"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  // slope
  auto* slope = app.add_subcommand("slope", "extended rational arithmetic");
  slope->require_subcommand(1);
  std::string sl_matrix, sl_slope;
  auto* sl_apply = slope->add_subcommand("apply", "apply a determinant-±1 matrix");
  sl_apply->add_option("--matrix", sl_matrix, "a,b,c,d")->required();
  sl_apply->add_option("slope", sl_slope)->required();
  std::string sl_cf_slope;
  auto* sl_cf = slope->add_subcommand("neg-cf", "negative continued fraction");
  sl_cf->add_option("slope", sl_cf_slope)->required();

  // farey
  auto* farey = app.add_subcommand("farey", "Farey tessellation queries");
  farey->require_subcommand(1);
  std::string fa_a, fa_b;
  auto* fa_edge = farey->add_subcommand("edge", "test the Farey edge relation");
  fa_edge->add_option("a", fa_a)->required();
  fa_edge->add_option("b", fa_b)->required();
  std::string fm_a, fm_b;
  auto* fa_mediant = farey->add_subcommand("mediant", "mediant of an edge");
  fa_mediant->add_option("a", fm_a)->required();
  fa_mediant->add_option("b", fm_b)->required();
  std::string by_s, by_r, by_n = "1";
  auto* fa_bypass = farey->add_subcommand("bypass", "bypass attachment");
  fa_bypass->add_option("--s", by_s, "dividing slope")->required();
  fa_bypass->add_option("--r", by_r, "attaching slope")->required();
  fa_bypass->add_option("--n", by_n, "division number (default 1)");
  std::string pa_s1, pa_s0;
  auto* fa_path = farey->add_subcommand("path", "basic-slice decomposition");
  fa_path->add_option("s1", pa_s1, "start (outer) slope")->required();
  fa_path->add_option("s0", pa_s0, "end (inner) slope")->required();
  std::string bl_s1, bl_s0;
  auto* fa_blocks = farey->add_subcommand("blocks", "continued-fraction blocks");
  fa_blocks->add_option("s1", bl_s1)->required();
  fa_blocks->add_option("s0", bl_s0)->required();
  int svg_max_den = 5;
  std::vector<std::string> svg_path;
  std::string svg_out;
  auto* fa_svg = farey->add_subcommand("svg", "render the tessellation");
  fa_svg->add_option("--max-den", svg_max_den, "denominator bound");
  fa_svg->add_option("--path", svg_path, "s1 s0 of a highlighted path")
      ->expected(2);
  fa_svg->add_option("--out", svg_out, "output file (default stdout)");

  // count
  auto* count = app.add_subcommand("count", "tight-structure counting");
  count->require_subcommand(1);
  std::string st_slope;
  auto* co_st = count->add_subcommand("solid-torus", "solid torus by boundary slope");
  co_st->add_option("slope", st_slope)->required();
  std::string t2_s0, t2_s1;
  auto* co_t2 = count->add_subcommand("t2i", "thickened torus between two slopes");
  co_t2->add_option("s0", t2_s0)->required();
  co_t2->add_option("s1", t2_s1)->required();
  int disc_n = 1;
  auto* co_disc = count->add_subcommand("disc", "disc dividing-set constellations");
  co_disc->add_option("n", disc_n, "boundary twisting -n")->required();

  // seifert
  auto* seifert = app.add_subcommand("seifert", "Seifert slope bookkeeping");
  seifert->require_subcommand(1);
  std::string se_inv, se_mats, se_twists;
  auto* se_slopes = seifert->add_subcommand("slopes", "complement boundary slopes");
  se_slopes->add_option("--invariants", se_inv, "r1,r2,r3")->required();
  se_slopes->add_option("--matrices", se_mats, "a,b,c,d;a,b,c,d;a,b,c,d");
  se_slopes->add_option("--twists", se_twists, "n1,n2,n3")->required();
  std::string ro_a, ro_b, ro_d;
  auto* se_round = seifert->add_subcommand("round", "edge-rounding slope");
  se_round->add_option("--a", ro_a)->required();
  se_round->add_option("--b", ro_b)->required();
  se_round->add_option("--d", ro_d)->required();
  std::string tr_file;
  auto* se_trace = seifert->add_subcommand("trace", "replay a verified trace");
  se_trace->add_option("file", tr_file)->required();
  std::string ub_v1, ub_v2, ub_v3, ub_pants = "1";
  auto* se_ub = seifert->add_subcommand("upper-bound", "product upper bound");
  se_ub->add_option("--v1", ub_v1)->required();
  se_ub->add_option("--v2", ub_v2)->required();
  se_ub->add_option("--v3", ub_v3)->required();
  se_ub->add_option("--pants", ub_pants, "pair-of-pants count (default 1)");

  // kirby
  auto* kirby = app.add_subcommand("kirby", "surgery diagram moves");
  kirby->require_subcommand(1);
  std::string kn_file;
  auto* ki_norm = kirby->add_subcommand("normalize", "normalize for Legendrian surgery");
  ki_norm->add_option("file", kn_file)->required();
  std::string kc_file;
  auto* ki_count = kirby->add_subcommand("count", "count Legendrian realizations");
  ki_count->add_option("file", kc_file)->required();
  std::string km_file, km_op, km_t = "0";
  int km_node = 0;
  auto* ki_move = kirby->add_subcommand("move", "apply one Kirby move");
  ki_move->add_option("file", km_file)->required();
  ki_move->add_option("--op", km_op, "rolfsen | slam-dunk | inverse-slam-dunk")
      ->required();
  ki_move->add_option("--node", km_node)->required();
  ki_move->add_option("--t", km_t, "Rolfsen twist amount");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (sl_apply->parsed()) {
      tcs::ExtSlope r = tcs::apply_matrix(parse_matrix(sl_matrix),
                                          tcs::parse_slope(sl_slope));
      emit(as_json, {{"result", tcs::to_string(r)}}, tcs::to_string(r));
    } else if (sl_cf->parsed()) {
      tcs::NegCF cf = tcs::neg_cf(tcs::parse_slope(sl_cf_slope));
      json arr = json::array();
      std::string human;
      for (const auto& c : cf) {
        arr.push_back(c.str());
        if (!human.empty()) human += ",";
        human += c.str();
      }
      emit(as_json, {{"coefficients", arr}}, "[" + human + "]");
    } else if (fa_edge->parsed()) {
      bool e = tcs::is_edge(tcs::parse_slope(fa_a), tcs::parse_slope(fa_b));
      emit(as_json, {{"edge", e}}, e ? "true" : "false");
    } else if (fa_mediant->parsed()) {
      tcs::ExtSlope m = tcs::mediant(tcs::parse_slope(fm_a), tcs::parse_slope(fm_b));
      emit(as_json, {{"result", tcs::to_string(m)}}, tcs::to_string(m));
    } else if (fa_bypass->parsed()) {
      tcs::TorusDividing t(parse_int_arg(by_n), tcs::parse_slope(by_s));
      tcs::TorusDividing r = tcs::bypass_attach(t, tcs::parse_slope(by_r));
      emit(as_json,
           {{"result", tcs::to_string(r.slope)},
            {"division_number", r.division_number.str()}},
           tcs::to_string(r.slope));
    } else if (fa_path->parsed() || fa_blocks->parsed()) {
      const std::string& s1 = fa_path->parsed() ? pa_s1 : bl_s1;
      const std::string& s0 = fa_path->parsed() ? pa_s0 : bl_s0;
      tcs::SliceDecomposition d =
          tcs::decompose(tcs::parse_slope(s0), tcs::parse_slope(s1));
      std::string human;
      for (const auto& s : d.slopes) {
        if (!human.empty()) human += " ";
        human += tcs::to_string(s);
      }
      if (fa_blocks->parsed()) {
        human += " |";
        for (const auto& b : d.blocks)
          human += " [" + std::to_string(b.begin) + "," + std::to_string(b.end) +
                   ")@" + tcs::to_string(b.witness);
      }
      emit(as_json, decomposition_json(d), human);
    } else if (fa_svg->parsed()) {
      std::vector<tcs::ExtSlope> path;
      if (svg_path.size() == 2) {
        tcs::SliceDecomposition d = tcs::decompose(tcs::parse_slope(svg_path[1]),
                                                   tcs::parse_slope(svg_path[0]));
        path = d.slopes;
      }
      std::string svg = tcs::emit_farey_svg(svg_max_den, path);
      if (svg_out.empty()) {
        std::cout << svg;
      } else {
        std::ofstream out(svg_out);
        if (!out) throw std::invalid_argument("cannot write file: " + svg_out);
        out << svg;
      }
    } else if (co_st->parsed()) {
      tcs::ExtSlope s = tcs::parse_slope(st_slope);
      tcs::ExtSlope nf = tcs::solid_torus_normal_form(s);
      tcs::Int c = tcs::count_solid_torus(s);
      json cf = json::array();
      for (const auto& r : tcs::neg_cf(nf)) cf.push_back(r.str());
      json classes = json::array();
      if (nf != tcs::ExtSlope(-1, 1)) {
        tcs::SliceDecomposition d = tcs::decompose(tcs::ExtSlope(-1, 1), nf);
        for (const auto& a : tcs::sign_classes(d)) classes.push_back(sign_string(a));
      }
      emit(as_json,
           {{"input", tcs::to_string(s)},
            {"normalized_form", tcs::to_string(nf)},
            {"continued_fraction", cf},
            {"count", c.str()},
            {"classes", classes}},
           c.str());
    } else if (co_t2->parsed()) {
      tcs::SliceDecomposition d =
          tcs::decompose(tcs::parse_slope(t2_s0), tcs::parse_slope(t2_s1));
      json classes = json::array();
      for (const auto& a : tcs::sign_classes(d)) {
        tcs::EulerVector e = tcs::relative_euler(d, a);
        classes.push_back({{"signs", sign_string(a)},
                           {"euler", {e.h.str(), e.v.str()}}});
      }
      tcs::Int c = tcs::count_t2i(d);
      emit(as_json,
           {{"input", {tcs::to_string(tcs::parse_slope(t2_s0)),
                       tcs::to_string(tcs::parse_slope(t2_s1))}},
            {"count", c.str()},
            {"classes", classes}},
           c.str());
    } else if (co_disc->parsed()) {
      auto configs = tcs::enumerate_disc_configs(disc_n);
      json classes = json::array();
      for (const auto& c : configs) {
        json chords = json::array();
        for (auto [a, b] : c.matching) chords.push_back({a, b});
        classes.push_back({{"matching", chords},
                           {"outer_sign", c.outer_sign},
                           {"rotation", tcs::rotation_number(c).str()}});
      }
      emit(as_json,
           {{"input", disc_n},
            {"count", configs.size()},
            {"matchings", configs.size() / 2},
            {"classes", classes}},
           std::to_string(configs.size()));
    } else if (se_slopes->parsed()) {
      auto invs = split(se_inv, ',');
      auto twists = split(se_twists, ',');
      if (invs.size() != 3 || twists.size() != 3)
        throw std::invalid_argument("need exactly three invariants and twists");
      tcs::SeifertData m = [&] {
        if (se_mats.empty())
          return tcs::make_seifert(tcs::parse_slope(invs[0]),
                                   tcs::parse_slope(invs[1]),
                                   tcs::parse_slope(invs[2]));
        auto mats = split(se_mats, ';');
        if (mats.size() != 3) throw std::invalid_argument("need three matrices");
        return tcs::make_seifert(tcs::parse_slope(invs[0]), tcs::parse_slope(invs[1]),
                                 tcs::parse_slope(invs[2]), parse_matrix(mats[0]),
                                 parse_matrix(mats[1]), parse_matrix(mats[2]));
      }();
      json arr = json::array();
      std::string human;
      for (int i = 0; i < 3; ++i) {
        tcs::ExtSlope s = tcs::complement_slope(m, i + 1, parse_int_arg(twists[i]));
        arr.push_back(tcs::to_string(s));
        if (!human.empty()) human += " ";
        human += tcs::to_string(s);
      }
      emit(as_json, {{"slopes", arr}}, human);
    } else if (se_round->parsed()) {
      tcs::ExtSlope s = tcs::round_edges(parse_int_arg(ro_a), parse_int_arg(ro_b),
                                         parse_int_arg(ro_d));
      emit(as_json, {{"result", tcs::to_string(s)}}, tcs::to_string(s));
    } else if (se_trace->parsed()) {
      tcs::TraceReport r = tcs::run_trace(read_json_file(tr_file));
      std::string human;
      for (const auto& s : r.steps)
        human += (s.pass ? "pass " : "FAIL ") + std::to_string(s.index) + " " +
                 s.op + ": expected " + s.expected + ", got " + s.actual + "\n";
      human += r.all_pass ? "all steps passed" : "trace failed";
      emit(as_json, tcs::report_to_json(r), human);
      if (!r.all_pass) return kVerificationFailed;
    } else if (se_ub->parsed()) {
      tcs::Int c = tcs::upper_bound_blocks(
          tcs::parse_slope(ub_v1), tcs::parse_slope(ub_v2), tcs::parse_slope(ub_v3),
          parse_int_arg(ub_pants));
      emit(as_json, {{"count", c.str()}}, c.str());
    } else if (ki_norm->parsed()) {
      tcs::SurgeryDiagram d = tcs::diagram_from_json(read_json_file(kn_file));
      tcs::SurgeryDiagram n = tcs::normalize_for_legendrian(d);
      std::string human;
      for (const auto& node : n.nodes) {
        if (!human.empty()) human += " ";
        human += tcs::to_string(node.coeff);
      }
      emit(as_json, tcs::diagram_to_json(n), human);
    } else if (ki_count->parsed()) {
      tcs::SurgeryDiagram d = tcs::diagram_from_json(read_json_file(kc_file));
      tcs::Int c = tcs::count_realizations(tcs::normalize_for_legendrian(d));
      emit(as_json, {{"count", c.str()}}, c.str());
    } else if (ki_move->parsed()) {
      tcs::SurgeryDiagram d = tcs::diagram_from_json(read_json_file(km_file));
      tcs::SurgeryDiagram r = [&] {
        if (km_op == "rolfsen")
          return tcs::rolfsen_twist(d, km_node, parse_int_arg(km_t));
        if (km_op == "slam-dunk") return tcs::slam_dunk(d, km_node);
        if (km_op == "inverse-slam-dunk") return tcs::inverse_slam_dunk(d, km_node);
        throw std::invalid_argument("unknown move: " + km_op);
      }();
      std::string human;
      for (const auto& node : r.nodes) {
        if (!human.empty()) human += " ";
        human += std::to_string(node.id) + ":" + tcs::to_string(node.coeff);
      }
      emit(as_json, tcs::diagram_to_json(r), human);
    }
  } catch (const tcs::NormalizationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
