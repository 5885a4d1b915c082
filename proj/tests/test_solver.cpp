#include "doctest.h"

#include <cmath>
#include <cstdlib>

#include "paretoscope/builtins.hpp"
#include "paretoscope/solver.hpp"

using namespace paretoscope;

TEST_CASE("minimizer found for a smooth convex weight") {
  VectorProblem pb = builtin("convex_quadratic");
  // xi = (1/2, 1/2): sum scalarization minimized at x1 = x2 = 1/2.
  Weight w = make_weight({0.5, 0.5});
  SolverConfig cfg;
  SolveOutcome out = minimize_scalar(pb, ScalarizationKind::WeightedSum, w, cfg);
  CHECK(out.kind == SolveOutcome::Kind::Minimizers);
  CHECK_FALSE(out.value_unbounded_set);
  CHECK(out.window_radius_used == doctest::Approx(4.0));
  REQUIRE_FALSE(out.points.empty());
  const std::vector<double>& best = out.points.front();
  CHECK(best[0] == doctest::Approx(0.5).epsilon(1e-3));
  CHECK(best[1] == doctest::Approx(0.5).epsilon(1e-3));
  CHECK(out.value == doctest::Approx(-0.25).epsilon(1e-6));
}

TEST_CASE("escape detected when the scalarization is unbounded below") {
  VectorProblem pb = builtin("nonconvex_quartic");
  // xi = (1, 0): minimize x1^4 - 2*x2, unbounded in x2.
  Weight w = make_weight({1.0, 0.0});
  SolverConfig cfg;
  SolveOutcome out = minimize_scalar(pb, ScalarizationKind::WeightedSum, w, cfg);
  CHECK(out.kind == SolveOutcome::Kind::Escaping);
  CHECK_FALSE(out.value_unbounded_set);
  REQUIRE(out.values_by_radius.size() == cfg.radii.size());
  // best in window R is x = (0, R), value -2R
  for (std::size_t k = 0; k < cfg.radii.size(); ++k)
    CHECK(out.values_by_radius[k] == doctest::Approx(-2.0 * cfg.radii[k]).epsilon(1e-9));
  for (std::size_t k = 1; k < out.values_by_radius.size(); ++k)
    CHECK(out.values_by_radius[k] < out.values_by_radius[k - 1] - cfg.escape_decrease_min);
  REQUIRE(out.points.size() == cfg.radii.size());
  for (std::size_t k = 0; k < out.points.size(); ++k)
    CHECK(norm_inf(out.points[k]) == doctest::Approx(cfg.radii[k]));
}

TEST_CASE("escape values at the other endpoint") {
  VectorProblem pb = builtin("nonconvex_quartic");
  // xi = (0, 1): minimize -2*x1^2 + x2^2, best in window R at (R, 0), value -2R^2.
  Weight w = make_weight({0.0, 1.0});
  SolveOutcome out = minimize_scalar(pb, ScalarizationKind::WeightedSum, w, SolverConfig{});
  CHECK(out.kind == SolveOutcome::Kind::Escaping);
  REQUIRE(out.values_by_radius.size() == 4);
  CHECK(out.values_by_radius[0] == doctest::Approx(-32.0));
  CHECK(out.values_by_radius[1] == doctest::Approx(-512.0));
  CHECK(out.values_by_radius[2] == doctest::Approx(-8192.0));
  CHECK(out.values_by_radius[3] == doctest::Approx(-131072.0));
}

TEST_CASE("window grows until the minimizer is interior") {
  VectorProblem pb = builtin("nonconvex_quartic");
  // xi near 1: solutions x2 = xi1/(1-xi1) far from the origin.
  Weight w = make_weight({23.0 / 24.0, 1.0 / 24.0});
  SolveOutcome out = minimize_scalar(pb, ScalarizationKind::WeightedSum, w, SolverConfig{});
  CHECK(out.kind == SolveOutcome::Kind::Minimizers);
  CHECK(out.window_radius_used == doctest::Approx(64.0));
  double x2_expected = 23.0; // xi1/(1-xi1)
  bool found = false;
  for (const auto& p : out.points)
    if (std::fabs(p[1] - x2_expected) < 1e-2) found = true;
  CHECK(found);
}

TEST_CASE("infeasible window reported when the witness lies outside") {
  VectorProblem pb;
  pb.name = "far_box";
  pb.n = 1;
  pb.m = 2;
  pb.objectives.push_back(Expr::parse("x1"));
  pb.objectives.push_back(Expr::parse("-x1"));
  pb.feasible = FeasibleSet::box({1000.0}, {1001.0}, {1000.5});
  validate(pb);
  SolverConfig cfg;
  cfg.radii = {4.0};
  SolveOutcome out =
      minimize_scalar(pb, ScalarizationKind::WeightedSum, make_weight({0.5, 0.5}), cfg);
  CHECK(out.kind == SolveOutcome::Kind::InfeasibleWindow);
  CHECK(out.points.empty());
}

TEST_CASE("near-optimal band keeps symmetric minimizers") {
  VectorProblem pb = builtin("nonconvex_quartic");
  Weight w = make_weight({0.5, 0.5});
  SolveOutcome out = minimize_scalar(pb, ScalarizationKind::WeightedSum, w, SolverConfig{});
  REQUIRE(out.kind == SolveOutcome::Kind::Minimizers);
  // stationary points (+-1, 1) both optimal
  bool plus = false, minus = false;
  for (const auto& p : out.points) {
    if (std::fabs(p[0] - 1.0) < 1e-3 && std::fabs(p[1] - 1.0) < 1e-3) plus = true;
    if (std::fabs(p[0] + 1.0) < 1e-3 && std::fabs(p[1] - 1.0) < 1e-3) minus = true;
  }
  CHECK(plus);
  CHECK(minus);
}

TEST_CASE("best value never increases across radii") {
  for (const char* name : {"nonconvex_quartic", "warburton_quasiconvex"}) {
    VectorProblem pb = builtin(name);
    for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      Weight w = make_weight({t, 1.0 - t});
      SolveOutcome out = minimize_scalar(pb, ScalarizationKind::WeightedSum, w, SolverConfig{});
      for (std::size_t k = 1; k < out.values_by_radius.size(); ++k)
        CHECK(out.values_by_radius[k] <= out.values_by_radius[k - 1] + 1e-12);
    }
  }
}

TEST_CASE("stalled hug reports minimizers with the unbounded-set flag") {
  // infimum 0 approached along x1 -> inf but never attained: window best keeps
  // pressing the edge while the improvements shrink below the escape threshold.
  VectorProblem pb;
  pb.name = "vanishing_tail";
  pb.n = 1;
  pb.m = 2;
  pb.objectives.push_back(Expr::parse("1/x1^2"));
  pb.objectives.push_back(Expr::parse("1/x1^2"));
  pb.feasible = FeasibleSet::box({1.0}, {kInf}, {1.0});
  validate(pb);
  Weight w = make_weight({0.5, 0.5});
  SolveOutcome out = minimize_scalar(pb, ScalarizationKind::WeightedSum, w, SolverConfig{});
  CHECK(out.kind == SolveOutcome::Kind::Minimizers);
  CHECK(out.value_unbounded_set);
  CHECK(out.window_radius_used == doctest::Approx(256.0));
  CHECK(out.value == doctest::Approx(1.0 / 65536.0));
  double far = 0.0;
  for (const auto& p : out.points) far = std::max(far, norm_inf(p));
  CHECK(far == doctest::Approx(256.0));
}

TEST_CASE("solve_grid covers every weight and respects oracle-driven graphs") {
  VectorProblem pb = builtin("monotone_affine");
  std::vector<Weight> grid = simplex_grid(2, 8);
  GraphSample g = solve_grid(pb, ScalarizationKind::WeightedSum, grid, SolverConfig{}, 8);
  CHECK(g.oracle_driven);
  REQUIRE(g.outcomes.size() == grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double xi1 = grid[i].coords[0];
    bool in_dom = xi1 < 0.5 - 1e-12 || xi1 > 0.5 + 1e-12;
    if (in_dom) {
      CHECK(g.outcomes[i].kind == SolveOutcome::Kind::Minimizers);
      REQUIRE_FALSE(g.outcomes[i].points.empty());
      double denom = 1.0 - 2.0 * xi1;
      CHECK(g.outcomes[i].points[0][0] == doctest::Approx(1.0 / denom));
      CHECK(g.outcomes[i].points[0][1] == doctest::Approx(-1.0 / denom));
    } else {
      CHECK(g.outcomes[i].kind == SolveOutcome::Kind::Escaping);
    }
  }
}

TEST_CASE("solve_grid without objectives or a driving map is an error") {
  VectorProblem pb = builtin("monotone_affine");
  std::vector<Weight> grid = simplex_grid(2, 4);
  CHECK_THROWS_AS(solve_grid(pb, ScalarizationKind::WeightedMax, grid, SolverConfig{}, 4),
                  std::logic_error);
}

TEST_CASE("thread count resolution") {
  CHECK(resolve_thread_count() >= 1);
}

TEST_CASE("outcome kind names") {
  CHECK(to_string(SolveOutcome::Kind::Minimizers) == std::string("minimizers"));
  CHECK(to_string(SolveOutcome::Kind::Escaping) == std::string("escaping"));
  CHECK(to_string(SolveOutcome::Kind::InfeasibleWindow) == std::string("infeasible_window"));
}
