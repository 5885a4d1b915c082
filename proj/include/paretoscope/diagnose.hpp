#pragma once

// Theorem bank: each check states the hypotheses it could verify at grid
// resolution, what the sampled graphs show, and whether the observation is
// consistent with the claimed conclusion. A check whose hypotheses fail is
// reported as informational, never as a violation.

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "paretoscope/mapping.hpp"

namespace paretoscope {

inline constexpr double kCoversGap = 0.1;

struct Hypothesis {
  std::string name;
  bool holds = false;
  std::string evidence;
};

struct TheoremCheck {
  std::string theorem_id;
  std::vector<Hypothesis> hypotheses;
  bool conclusion_observed = false;
  std::string conclusion_detail;
  bool consistent = true;
  std::string mode;  // "checkable" when every hypothesis held, else "informational"
};

inline void finalize(TheoremCheck& c) {
  bool all = true;
  for (const Hypothesis& h : c.hypotheses) all = all && h.holds;
  c.mode = all ? "checkable" : "informational";
  c.consistent = !(all && !c.conclusion_observed);
}

struct ProbeSummary {
  int objective_index = 0;
  bool passed = true;
  long trials_completed = 0;
  std::optional<QcxCounterexample> counterexample;
};

struct CoversDetail {
  bool sampled = false;
  bool all_points_weak_pareto = false;
  bool interior_points_weak_pareto = false;
  bool has_boundary_only_witness = false;
  std::vector<double> boundary_only_witness;
  bool has_dominated_feasible_witness = false;
  std::vector<double> dominated_feasible_witness;
  std::vector<double> dominating_point;
};

struct GraphAnalysis {
  GraphSample graph;
  std::vector<ImagePoint> image;
  std::vector<Component> components;
  std::vector<std::vector<int>> domain_comps;
  DomainClosedness closedness;
  ValueConnectivity value_conn;
  std::vector<int> bounded_weights;
  bool single_valued = false;
  std::optional<double> closed_graph_spot_constant;
  std::optional<CoversDetail> covers;
  std::vector<TheoremCheck> checks;
};

enum class KindSelection { Sum, Max, Both };

struct RunConfig {
  int N = 24;
  std::uint64_t seed = 7;
  KindSelection kinds = KindSelection::Both;
  SolverConfig solver;
  ComponentConfig comp;
  long probe_trials = 400;
};

struct Report {
  VectorProblem problem;
  RunConfig run;
  bool tag_downgraded = false;
  std::vector<ProbeSummary> probes;
  std::vector<GraphAnalysis> graphs;
  std::vector<std::string> notes;
};

// ---- helpers -------------------------------------------------------------

namespace detail {

inline bool any_unbounded(const std::vector<Component>& comps) {
  for (const Component& c : comps)
    if (!c.bounded_at_scale) return true;
  return false;
}

inline bool all_unbounded(const std::vector<Component>& comps) {
  for (const Component& c : comps)
    if (c.bounded_at_scale) return false;
  return !comps.empty();
}

inline bool no_vus(const GraphSample& g) {
  for (const SolveOutcome& out : g.outcomes)
    if (out.kind == SolveOutcome::Kind::Minimizers && out.value_unbounded_set) return false;
  return true;
}

inline std::string count_detail(const GraphAnalysis& ga) {
  std::ostringstream os;
  int unb = 0;
  for (const Component& c : ga.components)
    if (!c.bounded_at_scale) ++unb;
  os << ga.components.size() << " image component(s), " << unb << " unbounded; "
     << ga.domain_comps.size() << " domain component(s)";
  return os.str();
}

// Grid proxy for "the domain lies in the closure of its relative interior":
// some interior weight is in the domain, and every boundary weight in the
// domain has an interior domain neighbor.
inline Hypothesis dom_closure_of_interior(const GraphAnalysis& ga) {
  Hypothesis h{"domain_inside_closure_of_interior", true, ""};
  const GraphSample& g = ga.graph;
  std::vector<int> dom = dom_weight_indices(g);
  bool any_interior = false;
  for (int w : dom) any_interior = any_interior || g.weights[w].is_interior;
  if (dom.empty() || !any_interior) {
    h.holds = dom.empty();  // vacuous on an empty domain
    h.evidence = dom.empty() ? "empty domain (vacuous)"
                             : "domain touches only the simplex boundary";
    return h;
  }
  for (int w : dom) {
    if (g.weights[w].is_interior) continue;
    bool saved = false;
    for (int u : dom)
      if (g.weights[u].is_interior && weights_grid_adjacent(g.weights[w], g.weights[u]))
        saved = true;
    if (!saved) {
      h.holds = false;
      h.evidence = "boundary domain weight " + std::to_string(w) +
                   " has no interior domain neighbor";
      return h;
    }
  }
  h.evidence = "interior domain weights exist; boundary domain weights have interior neighbors";
  return h;
}

inline Hypothesis bounded_weights_open(const GraphAnalysis& ga) {
  Hypothesis h{"bounded_value_weights_open_in_grid", true, ""};
  const GraphSample& g = ga.graph;
  for (int w : ga.bounded_weights) {
    for (std::size_t u = 0; u < g.weights.size(); ++u) {
      if (!weights_grid_adjacent(g.weights[w], g.weights[u])) continue;
      if (g.outcomes[u].kind == SolveOutcome::Kind::Minimizers &&
          g.outcomes[u].value_unbounded_set) {
        h.holds = false;
        h.evidence = "weight " + std::to_string(w) +
                     " with bounded values neighbors weight " + std::to_string(u) +
                     " with unbounded values";
        return h;
      }
    }
  }
  h.evidence = "no bounded-value weight neighbors an unbounded-value weight";
  return h;
}

} // namespace detail

// ---- individual checks ----------------------------------------------------

inline TheoremCheck check_nonclosed_implies_unbounded(const GraphAnalysis& ga) {
  TheoremCheck c;
  c.theorem_id = "nonclosed_implies_unbounded";
  {
    Hypothesis h{"domain_not_closed_observed", !ga.closedness.closed_observed, ""};
    std::ostringstream os;
    os << ga.closedness.witnesses.size() << " growth witness(es)";
    if (!ga.closedness.witnesses.empty()) {
      const GrowthWitness& w = ga.closedness.witnesses.front();
      os << "; first at escaping weight " << w.escaping_index << " with value-set norms "
         << w.r1 << " over " << w.r2;
    }
    h.evidence = os.str();
    c.hypotheses.push_back(std::move(h));
  }
  c.hypotheses.push_back(detail::dom_closure_of_interior(ga));
  c.conclusion_observed = detail::any_unbounded(ga.components);
  c.conclusion_detail = "image unbounded at scale: " + detail::count_detail(ga);
  finalize(c);
  return c;
}

inline std::vector<TheoremCheck> check_components_unbounded(const GraphAnalysis& ga) {
  std::vector<TheoremCheck> out;
  const bool image_unbounded = detail::any_unbounded(ga.components);
  const bool all_unbounded = detail::all_unbounded(ga.components);
  {
    TheoremCheck c;
    c.theorem_id = "components_unbounded_connected_dom";
    c.hypotheses.push_back({"image_unbounded_observed", image_unbounded,
                            image_unbounded ? "some component is unbounded at scale"
                                            : "all components bounded at scale"});
    bool dom_conn = ga.domain_comps.size() == 1;
    c.hypotheses.push_back({"domain_grid_connected", dom_conn,
                            std::to_string(ga.domain_comps.size()) + " domain component(s)"});
    c.conclusion_observed = all_unbounded;
    c.conclusion_detail = "every image component unbounded: " + detail::count_detail(ga);
    finalize(c);
    out.push_back(std::move(c));
  }
  {
    TheoremCheck c;
    c.theorem_id = "components_unbounded_open_O";
    c.hypotheses.push_back({"image_unbounded_observed", image_unbounded,
                            image_unbounded ? "some component is unbounded at scale"
                                            : "all components bounded at scale"});
    c.hypotheses.push_back(detail::bounded_weights_open(ga));
    c.conclusion_observed = all_unbounded;
    c.conclusion_detail = "every image component unbounded: " + detail::count_detail(ga);
    finalize(c);
    out.push_back(std::move(c));
  }
  return out;
}

inline TheoremCheck check_dom_image_component_match(const GraphAnalysis& ga) {
  TheoremCheck c;
  c.theorem_id = "dom_image_component_match";
  {
    std::ostringstream os;
    if (ga.value_conn.all_connected) os << "every sampled value set is link-connected";
    else {
      os << ga.value_conn.disconnected_weights.size()
         << " weight(s) with link-disconnected value sets, first at weight "
         << ga.value_conn.disconnected_weights.front();
    }
    c.hypotheses.push_back(
        {"value_sets_connected_each_weight", ga.value_conn.all_connected, os.str()});
  }
  {
    bool bounded = detail::no_vus(ga.graph);
    c.hypotheses.push_back({"value_sets_bounded", bounded,
                            bounded ? "no unbounded value set sampled"
                                    : "some weight has an unbounded value set"});
  }
  c.conclusion_observed = ga.components.size() == ga.domain_comps.size();
  c.conclusion_detail = detail::count_detail(ga);
  finalize(c);
  return c;
}

inline TheoremCheck check_theta2_covers_solw(const VectorProblem& pb, const GraphAnalysis& ga) {
  TheoremCheck c;
  c.theorem_id = "theta2_covers_solw";
  {
    bool nn = pb.lower_bound_tag != LowerBoundTag::Unknown;
    c.hypotheses.push_back({"objectives_declared_nonnegative", nn,
                            std::string("lower bound tag: ") + to_string(pb.lower_bound_tag)});
  }
  {
    bool sampled = ga.covers && ga.covers->sampled;
    c.hypotheses.push_back({"graph_numerically_sampled", sampled,
                            sampled ? "weighted max graph produced by the solver"
                                    : "graph driven by a closed-form map; dominance "
                                      "audit not applicable"});
  }
  if (ga.covers && ga.covers->sampled) {
    c.conclusion_observed = ga.covers->all_points_weak_pareto;
    std::ostringstream os;
    os << "all sampled max-scalarization points weak-Pareto: "
       << (ga.covers->all_points_weak_pareto ? "yes" : "no")
       << "; interior-weight points weak-Pareto: "
       << (ga.covers->interior_points_weak_pareto ? "yes" : "no")
       << "; boundary-only solution witness: "
       << (ga.covers->has_boundary_only_witness ? "found" : "none")
       << "; dominated feasible witness: "
       << (ga.covers->has_dominated_feasible_witness ? "found" : "none");
    c.conclusion_detail = os.str();
  } else {
    c.conclusion_observed = false;
    c.conclusion_detail = "not sampled";
  }
  finalize(c);
  return c;
}

inline TheoremCheck check_iff_quasiconvex(const VectorProblem& pb, const GraphAnalysis& ga,
                                          bool tag_downgraded) {
  TheoremCheck c;
  c.theorem_id = "iff_quasiconvex";
  {
    bool qc = implies_quasiconvex(pb.convexity_tag) && !tag_downgraded && pb.has_objectives();
    std::string ev = std::string("convexity tag: ") + to_string(pb.convexity_tag);
    if (tag_downgraded) ev += " (downgraded by probe counterexample)";
    if (!pb.has_objectives()) ev += " (no objective functions)";
    c.hypotheses.push_back({"objectives_declared_quasiconvex", qc, std::move(ev)});
  }
  {
    bool nn = pb.lower_bound_tag != LowerBoundTag::Unknown;
    c.hypotheses.push_back({"objectives_declared_nonnegative", nn,
                            std::string("lower bound tag: ") + to_string(pb.lower_bound_tag)});
  }
  {
    bool bounded = detail::no_vus(ga.graph);
    c.hypotheses.push_back({"value_sets_bounded", bounded,
                            bounded ? "no unbounded value set sampled"
                                    : "some weight has an unbounded value set"});
  }
  bool image_conn = ga.components.size() <= 1;
  bool dom_conn = ga.domain_comps.size() <= 1;
  c.conclusion_observed = image_conn == dom_conn;
  std::ostringstream os;
  os << "image " << (image_conn ? "connected" : "disconnected") << " and domain "
     << (dom_conn ? "connected" : "disconnected") << "; " << detail::count_detail(ga);
  c.conclusion_detail = os.str();
  finalize(c);
  return c;
}

inline TheoremCheck check_iff_convex(const VectorProblem& pb, const GraphAnalysis& ga,
                                     bool tag_downgraded) {
  TheoremCheck c;
  c.theorem_id = "iff_convex";
  {
    bool cv = implies_convex(pb.convexity_tag) && !tag_downgraded && pb.has_objectives();
    std::string ev = std::string("convexity tag: ") + to_string(pb.convexity_tag);
    if (tag_downgraded) ev += " (downgraded by probe counterexample)";
    if (!pb.has_objectives()) ev += " (no objective functions)";
    c.hypotheses.push_back({"objectives_declared_convex", cv, std::move(ev)});
  }
  {
    bool bounded = detail::no_vus(ga.graph);
    c.hypotheses.push_back({"value_sets_bounded", bounded,
                            bounded ? "no unbounded value set sampled"
                                    : "some weight has an unbounded value set"});
  }
  bool image_conn = ga.components.size() <= 1;
  bool dom_conn = ga.domain_comps.size() <= 1;
  c.conclusion_observed = image_conn == dom_conn;
  std::ostringstream os;
  os << "image " << (image_conn ? "connected" : "disconnected") << " and domain "
     << (dom_conn ? "connected" : "disconnected") << "; " << detail::count_detail(ga);
  c.conclusion_detail = os.str();
  finalize(c);
  return c;
}

inline TheoremCheck check_convex_polynomial_connected(const VectorProblem& pb,
                                                      const GraphAnalysis& ga,
                                                      bool tag_downgraded) {
  TheoremCheck c;
  c.theorem_id = "convex_polynomial_connected";
  {
    bool cp = pb.convexity_tag == ConvexityTag::ConvexPolynomial && !tag_downgraded &&
              pb.has_objectives();
    std::string ev = std::string("convexity tag: ") + to_string(pb.convexity_tag);
    if (tag_downgraded) ev += " (downgraded by probe counterexample)";
    c.hypotheses.push_back({"objectives_declared_convex_polynomial", cp, std::move(ev)});
  }
  {
    bool bounded = detail::no_vus(ga.graph);
    c.hypotheses.push_back({"value_sets_bounded", bounded,
                            bounded ? "no unbounded value set sampled"
                                    : "some weight has an unbounded value set"});
  }
  c.conclusion_observed = ga.components.size() <= 1;
  c.conclusion_detail = "image connected: " + detail::count_detail(ga);
  finalize(c);
  return c;
}

// ---- report assembly -------------------------------------------------------

namespace detail {

inline std::optional<double> spot_constant(const GraphAnalysis& ga) {
  const GraphSample& g = ga.graph;
  if (g.N <= 0) return std::nullopt;
  std::map<int, std::vector<int>> comps_of_weight;
  for (const Component& c : ga.components)
    for (int w : c.inverse_weight_indices) comps_of_weight[w].push_back(c.id);
  std::vector<int> good;
  for (int w : ga.bounded_weights)
    if (!g.outcomes[w].points.empty()) good.push_back(w);
  std::optional<double> best;
  for (std::size_t a = 0; a < good.size(); ++a) {
    for (std::size_t b = a + 1; b < good.size(); ++b) {
      int u = good[a], v = good[b];
      if (!weights_grid_adjacent(g.weights[u], g.weights[v])) continue;
      bool shared = false;
      for (int cu : comps_of_weight[u])
        for (int cv : comps_of_weight[v]) shared = shared || cu == cv;
      if (!shared) continue;
      double d = kInf;
      for (const auto& p : g.outcomes[u].points)
        for (const auto& q : g.outcomes[v].points) d = std::min(d, dist_2(p, q));
      double scaled = d * g.N;
      if (!best || scaled > *best) best = scaled;
    }
  }
  return best;
}

inline CoversDetail compute_covers(const VectorProblem& pb, const GraphAnalysis& ga,
                                   const RunConfig& rc) {
  CoversDetail cd;
  cd.sampled = !ga.graph.oracle_driven && pb.has_objectives();
  if (!cd.sampled) return cd;
  const GraphSample& g = ga.graph;
  const double R0 = rc.solver.radii.front();

  struct PointInfo {
    bool at_interior = false;
    bool weak_pareto = false;
  };
  std::map<std::vector<double>, PointInfo> pts;
  for (std::size_t w = 0; w < g.outcomes.size(); ++w) {
    if (g.outcomes[w].kind != SolveOutcome::Kind::Minimizers) continue;
    for (const auto& x : g.outcomes[w].points) {
      PointInfo& pi = pts[x];
      pi.at_interior = pi.at_interior || g.weights[w].is_interior;
    }
  }

  std::uint64_t probe_seed = rc.seed * 0x9e3779b97f4a7c15ull + 17;
  cd.all_points_weak_pareto = true;
  cd.interior_points_weak_pareto = true;
  for (auto& [x, pi] : pts) {
    WeakParetoResult wp = is_weak_pareto(pb, x, rc.probe_trials, probe_seed++, R0);
    pi.weak_pareto = !wp.dominated;
    cd.all_points_weak_pareto = cd.all_points_weak_pareto && pi.weak_pareto;
    if (pi.at_interior)
      cd.interior_points_weak_pareto = cd.interior_points_weak_pareto && pi.weak_pareto;
  }

  // A weak-Pareto point sampled only at boundary weights, well separated from
  // everything the interior weights produced.
  for (auto& [x, pi] : pts) {
    if (pi.at_interior || !pi.weak_pareto) continue;
    double d = kInf;
    for (auto& [y, qi] : pts)
      if (qi.at_interior) d = std::min(d, dist_2(x, y));
    if (d > kCoversGap) {
      cd.has_boundary_only_witness = true;
      cd.boundary_only_witness = x;
      break;
    }
  }

  // A feasible point that is not weakly Pareto optimal at all.
  const int L = rc.solver.lattice_per_axis;
  const double spacing = 2.0 * R0 / (L - 1);
  std::vector<int> idx(pb.n, 0);
  std::vector<double> x(pb.n);
  long scanned = 0;
  for (;;) {
    for (int i = 0; i < pb.n; ++i) x[i] = -R0 + idx[i] * spacing;
    if (pb.feasible.contains(x, 1e-12)) {
      if (++scanned > 1000000) break;
      WeakParetoResult wp = is_weak_pareto(pb, x, rc.probe_trials, probe_seed++, R0);
      if (wp.dominated) {
        cd.has_dominated_feasible_witness = true;
        cd.dominated_feasible_witness = x;
        cd.dominating_point = wp.dominator;
        break;
      }
    }
    int i = 0;
    while (i < pb.n && ++idx[i] == L) idx[i++] = 0;
    if (i == pb.n) break;
  }
  return cd;
}

} // namespace detail

inline bool sum_possible(const VectorProblem& pb) {
  return pb.has_objectives() ||
         (pb.oracle && pb.oracle->drives_graph &&
          pb.oracle->kind == ScalarizationKind::WeightedSum);
}

inline bool max_possible(const VectorProblem& pb) {
  return pb.has_objectives() ||
         (pb.oracle && pb.oracle->drives_graph &&
          pb.oracle->kind == ScalarizationKind::WeightedMax);
}

// Under the default "both", the weighted max is sampled only when it is
// meaningful for the problem: declared nonnegative objectives, or a map
// carried for that scalarization.
inline bool max_selected_by_default(const VectorProblem& pb) {
  return pb.lower_bound_tag != LowerBoundTag::Unknown ||
         (pb.oracle && pb.oracle->kind == ScalarizationKind::WeightedMax);
}

inline GraphAnalysis analyze_graph(const VectorProblem& pb, ScalarizationKind kind,
                                   const std::vector<Weight>& grid, const RunConfig& rc,
                                   bool tag_downgraded) {
  GraphAnalysis ga;
  ga.graph = solve_grid(pb, kind, grid, rc.solver, rc.N);
  ga.image = image_points(ga.graph);
  ga.components = build_components(ga.graph, ga.image, rc.comp);
  ga.domain_comps = domain_components(ga.graph);
  ga.closedness = domain_closedness(ga.graph);
  classify_boundedness(ga.graph, ga.image, ga.components, ga.closedness, rc.comp.rho);
  classify_inverse_closedness(ga.graph, ga.components);
  ga.value_conn = values_connected_each_weight(ga.graph, rc.comp.eps_link);
  ga.bounded_weights = bounded_value_weights(ga.graph);
  ga.single_valued = single_valued_on_dom(ga.graph);
  ga.closed_graph_spot_constant = detail::spot_constant(ga);
  if (kind == ScalarizationKind::WeightedMax)
    ga.covers = detail::compute_covers(pb, ga, rc);

  ga.checks.push_back(check_nonclosed_implies_unbounded(ga));
  for (TheoremCheck& c : check_components_unbounded(ga)) ga.checks.push_back(std::move(c));
  ga.checks.push_back(check_dom_image_component_match(ga));
  if (kind == ScalarizationKind::WeightedMax) {
    ga.checks.push_back(check_theta2_covers_solw(pb, ga));
    ga.checks.push_back(check_iff_quasiconvex(pb, ga, tag_downgraded));
  } else {
    ga.checks.push_back(check_iff_convex(pb, ga, tag_downgraded));
    ga.checks.push_back(check_convex_polynomial_connected(pb, ga, tag_downgraded));
  }
  return ga;
}

inline Report run_report(const VectorProblem& pb, const RunConfig& rc) {
  validate(pb);
  Report rep;
  rep.problem = pb;
  rep.run = rc;

  std::vector<ScalarizationKind> kinds;
  switch (rc.kinds) {
    case KindSelection::Sum:
      if (!sum_possible(pb))
        throw std::invalid_argument("weighted sum graph not available for \"" + pb.name + "\"");
      kinds.push_back(ScalarizationKind::WeightedSum);
      break;
    case KindSelection::Max:
      if (!max_possible(pb))
        throw std::invalid_argument("weighted max graph not available for \"" + pb.name + "\"");
      kinds.push_back(ScalarizationKind::WeightedMax);
      break;
    case KindSelection::Both:
      if (sum_possible(pb)) kinds.push_back(ScalarizationKind::WeightedSum);
      if (max_possible(pb) && max_selected_by_default(pb))
        kinds.push_back(ScalarizationKind::WeightedMax);
      if (kinds.empty())
        throw std::invalid_argument("no scalarization available for \"" + pb.name + "\"");
      break;
  }

  if (pb.has_objectives() && pb.convexity_tag != ConvexityTag::None) {
    for (std::size_t i = 0; i < pb.objectives.size(); ++i) {
      QcxProbeResult pr =
          quasiconvexity_probe(pb.objectives[i], pb.feasible, rc.probe_trials,
                               rc.seed + 101 * i + 1, rc.solver.radii.front());
      ProbeSummary ps;
      ps.objective_index = static_cast<int>(i);
      ps.passed = pr.passed;
      ps.trials_completed = pr.trials_completed;
      ps.counterexample = pr.counterexample;
      if (!pr.passed) {
        rep.tag_downgraded = true;
        rep.notes.push_back("objective " + std::to_string(i + 1) +
                            " failed the quasiconvexity probe; declared structure tags are "
                            "ignored by the checks");
      }
      rep.probes.push_back(std::move(ps));
    }
  }

  std::vector<Weight> grid = simplex_grid(pb.m, rc.N);
  for (ScalarizationKind kind : kinds)
    rep.graphs.push_back(analyze_graph(pb, kind, grid, rc, rep.tag_downgraded));

  {
    std::ostringstream os;
    os << "classifications are relative to resolution N=" << rc.N << ", window radii up to "
       << rc.solver.radii.back() << ", and linking scale " << rc.comp.eps_link
       << "; they are numerical evidence, not proofs";
    rep.notes.push_back(os.str());
  }
  for (const GraphAnalysis& ga : rep.graphs) {
    if (ga.graph.oracle_driven)
      rep.notes.push_back(std::string("the weighted ") +
                          (ga.graph.kind == ScalarizationKind::WeightedMax ? "max" : "sum") +
                          " graph is driven by the problem's closed-form solution map");
    if (ga.graph.kind == ScalarizationKind::WeightedSum)
      rep.notes.push_back(
          "the sum-scalarization connectedness criterion is read on the domain of the "
          "sampled weighted-sum mapping");
    if (ga.graph.kind == ScalarizationKind::WeightedMax && ga.single_valued &&
        implies_quasiconvex(pb.convexity_tag) && !rep.tag_downgraded)
      rep.notes.push_back(
          "weighted max map sampled single-valued with quasiconvex structure declared: "
          "solution and weak-solution sets coincide under semistrictness");
    if (ga.graph.kind == ScalarizationKind::WeightedSum && implies_convex(pb.convexity_tag) &&
        !rep.tag_downgraded && ga.components.size() > 1 && detail::no_vus(ga.graph))
      rep.notes.push_back(
          "FLAG: declared convex structure but the weighted-sum image is disconnected at "
          "this resolution");
  }
  return rep;
}

} // namespace paretoscope
