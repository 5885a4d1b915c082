#pragma once

// Report serialization with a deterministic writer (insertion-ordered keys,
// %.17g doubles, NaN and infinities as null), plus problem-file loading.

#include <cstdio>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "paretoscope/builtins.hpp"
#include "paretoscope/diagnose.hpp"
#include "paretoscope/version.hpp"

namespace paretoscope {

struct JsonValue {
  enum class Type { Null, Bool, Int, Double, String, Array, Object };
  Type type = Type::Null;
  bool b = false;
  long long i = 0;
  double d = 0.0;
  std::string s;
  std::vector<JsonValue> arr;
  std::vector<std::pair<std::string, JsonValue>> obj;

  static JsonValue null() { return {}; }
  static JsonValue of(bool v) { JsonValue j; j.type = Type::Bool; j.b = v; return j; }
  static JsonValue of(int v) { JsonValue j; j.type = Type::Int; j.i = v; return j; }
  static JsonValue of(long long v) { JsonValue j; j.type = Type::Int; j.i = v; return j; }
  static JsonValue of(double v) { JsonValue j; j.type = Type::Double; j.d = v; return j; }
  static JsonValue of(const char* v) { JsonValue j; j.type = Type::String; j.s = v; return j; }
  static JsonValue of(std::string v) {
    JsonValue j;
    j.type = Type::String;
    j.s = std::move(v);
    return j;
  }
  static JsonValue array() { JsonValue j; j.type = Type::Array; return j; }
  static JsonValue object() { JsonValue j; j.type = Type::Object; return j; }

  JsonValue& set(const std::string& key) {
    obj.emplace_back(key, JsonValue{});
    return obj.back().second;
  }
  template <typename T>
  void set(const std::string& key, T v) {
    obj.emplace_back(key, of(std::move(v)));
  }
  void set_null(const std::string& key) { obj.emplace_back(key, JsonValue{}); }
  void push(JsonValue v) { arr.push_back(std::move(v)); }

  static JsonValue numbers(const std::vector<double>& xs) {
    JsonValue a = array();
    for (double x : xs) a.push(of(x));
    return a;
  }
  static JsonValue integers(const std::vector<int>& xs) {
    JsonValue a = array();
    for (int x : xs) a.push(of(x));
    return a;
  }
};

namespace detail {

inline void write_escaped(std::ostream& os, const std::string& s) {
  os << '"';
  for (char ch : s) {
    switch (ch) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\n': os << "\\n"; break;
      case '\t': os << "\\t"; break;
      case '\r': os << "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          os << buf;
        } else {
          os << ch;
        }
    }
  }
  os << '"';
}

inline void write_double(std::ostream& os, double v) {
  if (!std::isfinite(v)) {
    os << "null";
    return;
  }
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  os << buf;
}

inline void write_json(std::ostream& os, const JsonValue& j, int depth) {
  const std::string pad(2 * depth, ' ');
  const std::string pad_in(2 * (depth + 1), ' ');
  switch (j.type) {
    case JsonValue::Type::Null: os << "null"; break;
    case JsonValue::Type::Bool: os << (j.b ? "true" : "false"); break;
    case JsonValue::Type::Int: os << j.i; break;
    case JsonValue::Type::Double: write_double(os, j.d); break;
    case JsonValue::Type::String: write_escaped(os, j.s); break;
    case JsonValue::Type::Array:
      if (j.arr.empty()) {
        os << "[]";
        break;
      }
      os << "[\n";
      for (std::size_t k = 0; k < j.arr.size(); ++k) {
        os << pad_in;
        write_json(os, j.arr[k], depth + 1);
        if (k + 1 < j.arr.size()) os << ',';
        os << '\n';
      }
      os << pad << ']';
      break;
    case JsonValue::Type::Object:
      if (j.obj.empty()) {
        os << "{}";
        break;
      }
      os << "{\n";
      for (std::size_t k = 0; k < j.obj.size(); ++k) {
        os << pad_in;
        write_escaped(os, j.obj[k].first);
        os << ": ";
        write_json(os, j.obj[k].second, depth + 1);
        if (k + 1 < j.obj.size()) os << ',';
        os << '\n';
      }
      os << pad << '}';
      break;
  }
}

} // namespace detail

inline std::string serialize(const JsonValue& j) {
  std::ostringstream os;
  detail::write_json(os, j, 0);
  os << '\n';
  return os.str();
}

// ---- report -> json --------------------------------------------------------

namespace detail {

inline JsonValue feasible_to_json(const FeasibleSet& fs) {
  JsonValue j = JsonValue::object();
  switch (fs.kind) {
    case FeasibleSet::Kind::WholeSpace: j.set("kind", "whole_space"); break;
    case FeasibleSet::Kind::Box: j.set("kind", "box"); break;
    case FeasibleSet::Kind::Sublevel: j.set("kind", "sublevel"); break;
  }
  if (fs.kind == FeasibleSet::Kind::Box) {
    JsonValue lo = JsonValue::array(), hi = JsonValue::array();
    for (double v : fs.lower) lo.push(JsonValue::of(v));  // -inf renders as null
    for (double v : fs.upper) hi.push(JsonValue::of(v));
    j.set("lower") = std::move(lo);
    j.set("upper") = std::move(hi);
  }
  if (fs.kind == FeasibleSet::Kind::Sublevel) {
    JsonValue gs = JsonValue::array();
    for (const Expr& g : fs.constraints) gs.push(JsonValue::of(g.source()));
    j.set("constraints") = std::move(gs);
  }
  j.set("witness") = JsonValue::numbers(fs.witness);
  return j;
}

inline JsonValue check_to_json(const TheoremCheck& c) {
  JsonValue j = JsonValue::object();
  j.set("theorem_id", c.theorem_id);
  j.set("mode", c.mode);
  j.set("consistent", c.consistent);
  j.set("conclusion_observed", c.conclusion_observed);
  j.set("conclusion_detail", c.conclusion_detail);
  JsonValue hs = JsonValue::array();
  for (const Hypothesis& h : c.hypotheses) {
    JsonValue hj = JsonValue::object();
    hj.set("name", h.name);
    hj.set("holds", h.holds);
    hj.set("evidence", h.evidence);
    hs.push(std::move(hj));
  }
  j.set("hypotheses") = std::move(hs);
  return j;
}

inline JsonValue graph_to_json(const GraphAnalysis& ga) {
  const GraphSample& g = ga.graph;
  JsonValue j = JsonValue::object();
  j.set("scalarization", to_string(g.kind));
  j.set("oracle_driven", g.oracle_driven);
  j.set("single_valued_on_domain", ga.single_valued);
  j.set("values_connected_each_weight", ga.value_conn.all_connected);
  j.set("disconnected_value_weights") = JsonValue::integers(ga.value_conn.disconnected_weights);
  if (ga.closed_graph_spot_constant)
    j.set("closed_graph_spot_constant", *ga.closed_graph_spot_constant);
  else
    j.set_null("closed_graph_spot_constant");

  {
    JsonValue dom = JsonValue::object();
    dom.set("indices") = JsonValue::integers(dom_weight_indices(g));
    JsonValue comps = JsonValue::array();
    for (const auto& dc : ga.domain_comps) comps.push(JsonValue::integers(dc));
    dom.set("components") = std::move(comps);
    dom.set("closed_observed", ga.closedness.closed_observed);
    JsonValue ws = JsonValue::array();
    for (const GrowthWitness& w : ga.closedness.witnesses) {
      JsonValue wj = JsonValue::object();
      wj.set("escaping_index", w.escaping_index);
      wj.set("direction") = JsonValue::integers({w.dir_i, w.dir_j});
      wj.set("u_index", w.u_index);
      wj.set("u2_index", w.u2_index);
      wj.set("r1", w.r1);
      wj.set("r2", w.r2);
      ws.push(std::move(wj));
    }
    dom.set("growth_witnesses") = std::move(ws);
    dom.set("bounded_value_weights") = JsonValue::integers(ga.bounded_weights);
    j.set("domain") = std::move(dom);
  }
  {
    JsonValue im = JsonValue::object();
    im.set("point_count", static_cast<int>(ga.image.size()));
    JsonValue comps = JsonValue::array();
    for (const Component& c : ga.components) {
      JsonValue cj = JsonValue::object();
      cj.set("id", c.id);
      cj.set("size", static_cast<int>(c.point_indices.size()));
      cj.set("bounded_at_scale", c.bounded_at_scale);
      cj.set("inverse_closed_at_resolution", c.inverse_closed_at_resolution);
      cj.set("weight_indices") = JsonValue::integers(c.inverse_weight_indices);
      cj.set("point_indices") = JsonValue::integers(c.point_indices);
      comps.push(std::move(cj));
    }
    im.set("components") = std::move(comps);
    j.set("image") = std::move(im);
  }
  if (ga.covers) {
    JsonValue cv = JsonValue::object();
    cv.set("sampled", ga.covers->sampled);
    cv.set("all_points_weak_pareto", ga.covers->all_points_weak_pareto);
    cv.set("interior_points_weak_pareto", ga.covers->interior_points_weak_pareto);
    if (ga.covers->has_boundary_only_witness)
      cv.set("boundary_only_witness") = JsonValue::numbers(ga.covers->boundary_only_witness);
    else
      cv.set_null("boundary_only_witness");
    if (ga.covers->has_dominated_feasible_witness) {
      cv.set("dominated_feasible_witness") =
          JsonValue::numbers(ga.covers->dominated_feasible_witness);
      cv.set("dominating_point") = JsonValue::numbers(ga.covers->dominating_point);
    } else {
      cv.set_null("dominated_feasible_witness");
      cv.set_null("dominating_point");
    }
    j.set("covers") = std::move(cv);
  } else {
    j.set_null("covers");
  }
  {
    JsonValue entries = JsonValue::array();
    for (std::size_t w = 0; w < g.outcomes.size(); ++w) {
      const SolveOutcome& out = g.outcomes[w];
      JsonValue ej = JsonValue::object();
      ej.set("index", static_cast<int>(w));
      ej.set("weight") = JsonValue::numbers(g.weights[w].coords);
      ej.set("lattice") = JsonValue::integers(g.weights[w].lattice);
      ej.set("status", to_string(out.kind));
      ej.set("value", out.value);  // NaN renders as null
      ej.set("value_unbounded", out.value_unbounded_set);
      ej.set("window_radius_used", out.window_radius_used);
      ej.set("values_by_radius") = JsonValue::numbers(out.values_by_radius);
      JsonValue pts = JsonValue::array();
      for (const auto& x : out.points) pts.push(JsonValue::numbers(x));
      ej.set("points") = std::move(pts);
      entries.push(std::move(ej));
    }
    j.set("entries") = std::move(entries);
  }
  {
    JsonValue cs = JsonValue::array();
    for (const TheoremCheck& c : ga.checks) cs.push(check_to_json(c));
    j.set("checks") = std::move(cs);
  }
  return j;
}

} // namespace detail

inline JsonValue report_to_json(const Report& rep) {
  JsonValue j = JsonValue::object();
  j.set("schema_version", kReportSchemaVersion);
  j.set("tool_version", kVersion);
  {
    JsonValue p = JsonValue::object();
    p.set("name", rep.problem.name);
    p.set("n", rep.problem.n);
    p.set("m", rep.problem.m);
    p.set("convexity_tag", to_string(rep.problem.convexity_tag));
    p.set("lower_bound_tag", to_string(rep.problem.lower_bound_tag));
    JsonValue objs = JsonValue::array();
    for (const Expr& f : rep.problem.objectives) objs.push(JsonValue::of(f.source()));
    p.set("objectives") = std::move(objs);
    p.set("feasible") = detail::feasible_to_json(rep.problem.feasible);
    if (rep.problem.oracle) {
      JsonValue o = JsonValue::object();
      o.set("scalarization", to_string(rep.problem.oracle->kind));
      o.set("drives_graph", rep.problem.oracle->drives_graph);
      o.set("pieces", static_cast<int>(rep.problem.oracle->pieces.size()));
      o.set("image_components_expected", rep.problem.oracle->image_components_expected);
      o.set("dom_closed_expected", rep.problem.oracle->dom_closed_expected);
      o.set("components_unbounded_expected", rep.problem.oracle->components_unbounded_expected);
      p.set("oracle") = std::move(o);
    } else {
      p.set_null("oracle");
    }
    j.set("problem") = std::move(p);
  }
  {
    JsonValue r = JsonValue::object();
    r.set("N", rep.run.N);
    r.set("seed", static_cast<long long>(rep.run.seed));
    JsonValue kinds = JsonValue::array();
    for (const GraphAnalysis& ga : rep.graphs)
      kinds.push(JsonValue::of(to_string(ga.graph.kind)));
    r.set("scalarizations") = std::move(kinds);
    r.set("probe_trials", static_cast<long long>(rep.run.probe_trials));
    JsonValue s = JsonValue::object();
    s.set("radii") = JsonValue::numbers(rep.run.solver.radii);
    s.set("lattice_per_axis", rep.run.solver.lattice_per_axis);
    s.set("refine_steps", rep.run.solver.refine_steps);
    s.set("refine_seeds", rep.run.solver.refine_seeds);
    s.set("value_tol", rep.run.solver.value_tol);
    s.set("point_tol", rep.run.solver.point_tol);
    s.set("escape_decrease_min", rep.run.solver.escape_decrease_min);
    s.set("near_opt_band", rep.run.solver.near_opt_band);
    s.set("pool_cap", rep.run.solver.pool_cap);
    r.set("solver") = std::move(s);
    JsonValue c = JsonValue::object();
    c.set("eps_link", rep.run.comp.eps_link);
    c.set("core_radius", rep.run.comp.core_radius);
    c.set("rho", rep.run.comp.rho);
    r.set("components") = std::move(c);
    j.set("run") = std::move(r);
  }
  {
    JsonValue ps = JsonValue::array();
    for (const ProbeSummary& p : rep.probes) {
      JsonValue pj = JsonValue::object();
      pj.set("objective_index", p.objective_index);
      pj.set("passed", p.passed);
      pj.set("trials_completed", static_cast<long long>(p.trials_completed));
      if (p.counterexample) {
        JsonValue cj = JsonValue::object();
        cj.set("x") = JsonValue::numbers(p.counterexample->x);
        cj.set("y") = JsonValue::numbers(p.counterexample->y);
        cj.set("t", p.counterexample->t);
        pj.set("counterexample") = std::move(cj);
      } else {
        pj.set_null("counterexample");
      }
      ps.push(std::move(pj));
    }
    j.set("probes") = std::move(ps);
  }
  {
    JsonValue gs = JsonValue::array();
    for (const GraphAnalysis& ga : rep.graphs) gs.push(detail::graph_to_json(ga));
    j.set("graphs") = std::move(gs);
  }
  {
    JsonValue ns = JsonValue::array();
    for (const std::string& n : rep.notes) ns.push(JsonValue::of(n));
    j.set("notes") = std::move(ns);
  }
  return j;
}

inline std::string report_to_json_string(const Report& rep) {
  return serialize(report_to_json(rep));
}

// ---- json -> problem -------------------------------------------------------

namespace detail {

inline double bound_from_json(const nlohmann::ordered_json& v, double fallback) {
  if (v.is_null()) return fallback;
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s == "inf" || s == "+inf") return kInf;
    if (s == "-inf") return -kInf;
  }
  throw std::invalid_argument("box bound must be a number, null, or \"inf\"/\"-inf\"");
}

inline std::vector<double> vec_from_json(const nlohmann::ordered_json& a) {
  std::vector<double> out;
  for (const auto& v : a) out.push_back(v.get<double>());
  return out;
}

} // namespace detail

inline VectorProblem problem_from_json(const nlohmann::ordered_json& j) {
  VectorProblem pb;
  pb.name = j.value("name", std::string("user_problem"));
  pb.n = j.at("n").get<int>();
  pb.m = j.at("m").get<int>();
  if (j.contains("objectives"))
    for (const auto& s : j.at("objectives")) pb.objectives.push_back(Expr::parse(s.get<std::string>()));

  const auto& fj = j.at("feasible");
  std::string kind = fj.at("kind").get<std::string>();
  std::vector<double> witness = detail::vec_from_json(fj.at("witness"));
  if (kind == "whole_space") {
    pb.feasible = FeasibleSet::whole_space(std::move(witness));
  } else if (kind == "box") {
    std::vector<double> lo, hi;
    for (const auto& v : fj.at("lower")) lo.push_back(detail::bound_from_json(v, -kInf));
    for (const auto& v : fj.at("upper")) hi.push_back(detail::bound_from_json(v, kInf));
    pb.feasible = FeasibleSet::box(std::move(lo), std::move(hi), std::move(witness));
  } else if (kind == "sublevel") {
    std::vector<Expr> gs;
    for (const auto& s : fj.at("constraints")) gs.push_back(Expr::parse(s.get<std::string>()));
    pb.feasible = FeasibleSet::sublevel(std::move(gs), std::move(witness));
  } else {
    throw std::invalid_argument("unknown feasible set kind: " + kind);
  }

  pb.convexity_tag = convexity_tag_from_string(j.value("convexity_tag", std::string("none")));
  pb.lower_bound_tag =
      lower_bound_tag_from_string(j.value("lower_bound_tag", std::string("unknown")));

  if (j.contains("oracle") && !j.at("oracle").is_null()) {
    const auto& oj = j.at("oracle");
    OracleMap om;
    om.kind = scalarization_kind_from_string(oj.at("scalarization").get<std::string>());
    om.drives_graph = oj.value("drives_graph", false);
    for (const auto& pj : oj.at("pieces")) {
      OraclePiece pc;
      pc.lo = pj.at("lo").get<double>();
      pc.hi = pj.at("hi").get<double>();
      pc.lo_closed = pj.value("lo_closed", true);
      pc.hi_closed = pj.value("hi_closed", true);
      if (pj.contains("points"))
        for (const auto& pt : pj.at("points")) {
          std::vector<Expr> coords;
          for (const auto& s : pt) coords.push_back(Expr::parse(s.get<std::string>()));
          pc.points.push_back(std::move(coords));
        }
      if (pj.contains("rays"))
        for (const auto& rj : pj.at("rays"))
          pc.rays.push_back({detail::vec_from_json(rj.at("p")), detail::vec_from_json(rj.at("d"))});
      if (pj.contains("segments"))
        for (const auto& sj : pj.at("segments"))
          pc.segments.push_back(
              {detail::vec_from_json(sj.at("a")), detail::vec_from_json(sj.at("b"))});
      if (pj.contains("box") && !pj.at("box").is_null()) {
        pc.has_box = true;
        pc.box_lower = detail::vec_from_json(pj.at("box").at("lower"));
        pc.box_upper = detail::vec_from_json(pj.at("box").at("upper"));
      }
      om.pieces.push_back(std::move(pc));
    }
    if (oj.contains("expected")) {
      const auto& ej = oj.at("expected");
      om.image_components_expected = ej.value("image_components", 1);
      om.dom_closed_expected = ej.value("dom_closed", true);
      om.components_unbounded_expected = ej.value("components_unbounded", false);
    }
    pb.oracle = std::move(om);
  }

  validate(pb);
  return pb;
}

inline VectorProblem problem_from_json_text(const std::string& text) {
  return problem_from_json(nlohmann::ordered_json::parse(text));
}

} // namespace paretoscope
