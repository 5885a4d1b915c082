#include "doctest.h"

#include <algorithm>

#include "paretoscope/builtins.hpp"
#include "paretoscope/diagnose.hpp"
#include "paretoscope/json_io.hpp"

using namespace paretoscope;

namespace {

const TheoremCheck* find_check(const GraphAnalysis& ga, const std::string& id) {
  for (const TheoremCheck& c : ga.checks)
    if (c.theorem_id == id) return &c;
  return nullptr;
}

bool has_note(const Report& rep, const std::string& needle) {
  for (const std::string& n : rep.notes)
    if (n.find(needle) != std::string::npos) return true;
  return false;
}

} // namespace

TEST_CASE("finalize marks checkable versus informational") {
  TheoremCheck c;
  c.theorem_id = "t";
  c.hypotheses.push_back({"a", true, ""});
  c.hypotheses.push_back({"b", true, ""});
  c.conclusion_observed = true;
  finalize(c);
  CHECK(c.mode == "checkable");
  CHECK(c.consistent);

  c.conclusion_observed = false;
  finalize(c);
  CHECK(c.mode == "checkable");
  CHECK_FALSE(c.consistent); // all hypotheses held yet the conclusion failed

  c.hypotheses[1].holds = false;
  finalize(c);
  CHECK(c.mode == "informational");
  CHECK(c.consistent); // nothing to contradict

  c.conclusion_observed = true;
  finalize(c);
  CHECK(c.mode == "informational");
  CHECK(c.consistent);
}

TEST_CASE("scalarization availability per problem") {
  CHECK(sum_possible(builtin("nonconvex_quartic")));
  CHECK(sum_possible(builtin("monotone_affine"))); // map-driven
  CHECK_FALSE(max_possible(builtin("monotone_affine")));
  CHECK(max_possible(builtin("warburton_quasiconvex")));
  CHECK(max_selected_by_default(builtin("warburton_quasiconvex")));
  CHECK(max_selected_by_default(builtin("rectangle_identity")));
  CHECK_FALSE(max_selected_by_default(builtin("nonconvex_quartic")));
  CHECK_FALSE(max_selected_by_default(builtin("convex_quadratic")));
  CHECK_FALSE(max_selected_by_default(builtin("linear_fractional")));
}

TEST_CASE("requesting an unavailable scalarization is an input error") {
  RunConfig rc;
  rc.N = 4;
  rc.kinds = KindSelection::Max;
  CHECK_THROWS_AS(run_report(builtin("monotone_affine"), rc), std::invalid_argument);
}

TEST_CASE("map-driven report on the affine problem") {
  RunConfig rc;
  rc.N = 8;
  Report rep = run_report(builtin("monotone_affine"), rc);
  REQUIRE(rep.graphs.size() == 1);
  const GraphAnalysis& ga = rep.graphs[0];
  CHECK(ga.graph.kind == ScalarizationKind::WeightedSum);
  CHECK(ga.graph.oracle_driven);
  CHECK(rep.probes.empty()); // no objectives, nothing to probe
  CHECK(has_note(rep, "closed-form solution map"));
  CHECK(has_note(rep, "numerical evidence, not proofs"));

  CHECK(ga.domain_comps.size() == 2);
  REQUIRE(ga.components.size() == 2);
  for (const Component& c : ga.components) CHECK_FALSE(c.bounded_at_scale);

  const TheoremCheck* open_o = find_check(ga, "components_unbounded_open_O");
  REQUIRE(open_o != nullptr);
  CHECK(open_o->mode == "checkable");
  CHECK(open_o->consistent);

  const TheoremCheck* match = find_check(ga, "dom_image_component_match");
  REQUIRE(match != nullptr);
  CHECK(match->mode == "checkable");
  CHECK(match->consistent);
}

TEST_CASE("non-closed domain check on the quartic problem") {
  RunConfig rc;
  rc.N = 8;
  Report rep = run_report(builtin("nonconvex_quartic"), rc);
  REQUIRE(rep.graphs.size() == 1); // weighted max not selected by default here
  const GraphAnalysis& ga = rep.graphs[0];
  CHECK_FALSE(ga.graph.oracle_driven);

  CHECK_FALSE(ga.closedness.closed_observed);
  CHECK(ga.closedness.witnesses.size() >= 2);
  REQUIRE(ga.components.size() == 2);
  for (const Component& c : ga.components) CHECK_FALSE(c.bounded_at_scale);

  const TheoremCheck* nc = find_check(ga, "nonclosed_implies_unbounded");
  REQUIRE(nc != nullptr);
  CHECK(nc->mode == "checkable");
  CHECK(nc->conclusion_observed);
  CHECK(nc->consistent);
}

TEST_CASE("convex checks on the quadratic problem") {
  RunConfig rc;
  rc.N = 8;
  Report rep = run_report(builtin("convex_quadratic"), rc);
  REQUIRE(rep.graphs.size() == 1);
  const GraphAnalysis& ga = rep.graphs[0];

  CHECK(ga.domain_comps.size() == 1);
  CHECK(ga.components.size() == 1);
  CHECK_FALSE(ga.components[0].bounded_at_scale);
  CHECK_FALSE(ga.closedness.closed_observed);

  for (const char* id : {"iff_convex", "convex_polynomial_connected", "dom_image_component_match"}) {
    const TheoremCheck* c = find_check(ga, id);
    REQUIRE(c != nullptr);
    CHECK(c->mode == "checkable");
    CHECK(c->consistent);
  }
  // probes ran and passed for the declared convex structure
  REQUIRE(rep.probes.size() == 2);
  for (const ProbeSummary& p : rep.probes) CHECK(p.passed);
  CHECK_FALSE(rep.tag_downgraded);
}

TEST_CASE("both scalarizations selected for the box-constrained quasiconvex problem") {
  RunConfig rc;
  rc.N = 8;
  rc.probe_trials = 200;
  Report rep = run_report(builtin("warburton_quasiconvex"), rc);
  REQUIRE(rep.graphs.size() == 2);
  CHECK(rep.graphs[0].graph.kind == ScalarizationKind::WeightedSum);
  CHECK(rep.graphs[1].graph.kind == ScalarizationKind::WeightedMax);
  CHECK(rep.graphs[1].graph.oracle_driven);
  CHECK_FALSE(rep.graphs[0].graph.oracle_driven);

  const GraphAnalysis& mx = rep.graphs[1];
  CHECK(mx.single_valued);
  CHECK(mx.domain_comps.size() == 2);
  CHECK(mx.components.size() == 2);
  const TheoremCheck* iffq = find_check(mx, "iff_quasiconvex");
  REQUIRE(iffq != nullptr);
  CHECK(iffq->mode == "checkable");
  CHECK(iffq->consistent);
  CHECK(has_note(rep, "semistrictness"));
}

TEST_CASE("covers detail carries inclusion witnesses on the rectangle") {
  RunConfig rc;
  rc.N = 8;
  rc.probe_trials = 200;
  Report rep = run_report(builtin("rectangle_identity"), rc);
  REQUIRE(rep.graphs.size() == 2);
  const GraphAnalysis& mx = rep.graphs[1];
  CHECK(mx.graph.kind == ScalarizationKind::WeightedMax);
  REQUIRE(mx.covers.has_value());
  const CoversDetail& cd = *mx.covers;
  CHECK(cd.sampled);
  CHECK(cd.interior_points_weak_pareto);
  CHECK_FALSE(cd.all_points_weak_pareto); // box entries at the simplex corner are dominated
  CHECK(cd.has_boundary_only_witness);
  CHECK(cd.has_dominated_feasible_witness);
  REQUIRE_FALSE(cd.dominated_feasible_witness.empty());
  REQUIRE_FALSE(cd.dominating_point.empty());
  for (std::size_t i = 0; i < cd.dominating_point.size(); ++i)
    CHECK(cd.dominating_point[i] < cd.dominated_feasible_witness[i]);

  const TheoremCheck* cover = find_check(mx, "theta2_covers_solw");
  REQUIRE(cover != nullptr);
  CHECK(cover->mode == "informational"); // objectives are not bounded below by zero
  CHECK(cover->consistent);

  // graph-level classifications
  CHECK(mx.closedness.closed_observed);
  for (const Component& c : mx.components) CHECK(c.bounded_at_scale);
  CHECK(mx.closed_graph_spot_constant.has_value());
}

TEST_CASE("failed probe downgrades declared structure") {
  VectorProblem pb;
  pb.name = "mis_tagged";
  pb.n = 2;
  pb.m = 2;
  pb.objectives.push_back(Expr::parse("-x1^2"));
  pb.objectives.push_back(Expr::parse("x2"));
  pb.feasible = FeasibleSet::box({-2.0, -2.0}, {2.0, 2.0}, {0.0, 0.0});
  pb.convexity_tag = ConvexityTag::Convex;
  validate(pb);

  RunConfig rc;
  rc.N = 4;
  rc.probe_trials = 2000;
  Report rep = run_report(pb, rc);
  CHECK(rep.tag_downgraded);
  REQUIRE_FALSE(rep.probes.empty());
  CHECK_FALSE(rep.probes[0].passed);
  CHECK(rep.probes[0].counterexample.has_value());
  CHECK(has_note(rep, "failed the quasiconvexity probe"));

  REQUIRE(rep.graphs.size() == 1);
  const TheoremCheck* iffc = find_check(rep.graphs[0], "iff_convex");
  REQUIRE(iffc != nullptr);
  CHECK(iffc->mode == "informational");
  CHECK(iffc->consistent);
}

TEST_CASE("report serialization is deterministic and parseable") {
  RunConfig rc;
  rc.N = 6;
  rc.probe_trials = 100;
  Report a = run_report(builtin("rectangle_identity"), rc);
  Report b = run_report(builtin("rectangle_identity"), rc);
  std::string ja = report_to_json_string(a);
  std::string jb = report_to_json_string(b);
  CHECK(ja == jb);
  CHECK_FALSE(ja.empty());
  CHECK(ja.back() == '\n');

  nlohmann::ordered_json parsed = nlohmann::ordered_json::parse(ja);
  CHECK(parsed.at("schema_version").get<int>() == kReportSchemaVersion);
  CHECK(parsed.at("problem").at("name").get<std::string>() == "rectangle_identity");
  CHECK(parsed.at("run").at("N").get<int>() == 6);
  REQUIRE(parsed.at("graphs").is_array());
  REQUIRE(parsed.at("graphs").size() == 2);
  for (const auto& gj : parsed.at("graphs")) {
    CHECK(gj.at("entries").size() == 7);
    for (const auto& ck : gj.at("checks")) {
      CHECK(ck.contains("theorem_id"));
      CHECK(ck.contains("hypotheses"));
      CHECK(ck.contains("consistent"));
      CHECK(ck.contains("mode"));
    }
  }

  // every check in a defaults run over the catalog reports consistency
  for (const auto& gj : parsed.at("graphs"))
    for (const auto& ck : gj.at("checks")) CHECK(ck.at("consistent").get<bool>());
}

TEST_CASE("weight recovery stays exact inside the report pipeline") {
  // recover_weight composed with the max scalarization: at the recovered
  // weight, all scaled criteria agree at the anchor point
  VectorProblem pb = builtin("warburton_quasiconvex");
  std::vector<double> x = {3.0, 1.0};
  std::vector<double> f = pb.evaluate(x);
  std::vector<double> xi = recover_weight(f).coords;
  double v0 = xi[0] * f[0];
  double v1 = xi[1] * f[1];
  CHECK(v0 == doctest::Approx(v1).epsilon(1e-12));
  double inv = 1.0 / f[0] + 1.0 / f[1];
  CHECK(v0 == doctest::Approx(1.0 / inv).epsilon(1e-12));
}
