#include "doctest.h"

#include <cmath>

#include "paretoscope/builtins.hpp"
#include "paretoscope/json_io.hpp"

using namespace paretoscope;

TEST_CASE("feasible set membership") {
  FeasibleSet whole = FeasibleSet::whole_space({0.0, 0.0});
  CHECK(whole.contains({1e9, -1e9}, 0.0));

  FeasibleSet box = FeasibleSet::box({-1.0, 0.0}, {0.0, 1.0}, {-0.5, 0.5});
  CHECK(box.contains({-0.5, 0.5}, 0.0));
  CHECK(box.contains({-1.0, 0.0}, 0.0));
  CHECK_FALSE(box.contains({0.1, 0.5}, 0.0));
  CHECK(box.contains({0.1, 0.5}, 0.2));
  CHECK_THROWS_AS(box.contains({0.0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(box.contains({0.0, 0.0}, -1.0), std::invalid_argument);

  FeasibleSet half_open = FeasibleSet::box({2.0, 0.0}, {kInf, 4.0}, {2.0, 0.0});
  CHECK(half_open.contains({1e8, 4.0}, 0.0));
  CHECK_FALSE(half_open.contains({1.9, 0.0}, 0.0));

  FeasibleSet sub = FeasibleSet::sublevel(
      {Expr::parse("-x1"), Expr::parse("-x2"), Expr::parse("1-x1-x2")}, {1.0, 0.0});
  CHECK(sub.contains({1.0, 0.0}, 0.0));
  CHECK(sub.contains({0.5, 0.5}, 0.0));
  CHECK_FALSE(sub.contains({0.4, 0.4}, 0.0));
  CHECK_FALSE(sub.contains({-0.1, 2.0}, 0.0));
}

TEST_CASE("sublevel evaluation errors mean infeasible") {
  FeasibleSet sub = FeasibleSet::sublevel({Expr::parse("1/x1 - 1")}, {2.0});
  CHECK(sub.contains({2.0}, 0.0));
  CHECK_FALSE(sub.contains({0.0}, 0.0));
}

TEST_CASE("clamp to box") {
  FeasibleSet box = FeasibleSet::box({-1.0, 0.0}, {0.0, 1.0}, {-0.5, 0.5});
  std::vector<double> x = {5.0, -3.0};
  box.clamp_box(x);
  CHECK(x[0] == 0.0);
  CHECK(x[1] == 0.0);
}

TEST_CASE("builtin catalog validates") {
  for (const std::string& name : builtin_names()) {
    VectorProblem pb = builtin(name);
    CHECK(pb.name == name);
    CHECK_NOTHROW(validate(pb));
    CHECK(pb.oracle.has_value());
    CHECK_FALSE(builtin_summary(name).empty());
  }
  CHECK(builtin_names().size() == 6);
  CHECK_THROWS_AS(builtin("nope"), std::invalid_argument);
}

TEST_CASE("objective evaluation") {
  VectorProblem pb = builtin("nonconvex_quartic");
  std::vector<double> f = pb.evaluate({2.0, 3.0});
  CHECK(f[0] == doctest::Approx(10.0));
  CHECK(f[1] == doctest::Approx(1.0));
  CHECK_THROWS_AS(pb.evaluate({1.0}), std::invalid_argument);

  VectorProblem mono = builtin("monotone_affine");
  CHECK_FALSE(mono.has_objectives());
  CHECK_THROWS_AS(mono.evaluate({0.0, 0.0}), std::logic_error);
}

TEST_CASE("oracle pieces cover their stated intervals") {
  VectorProblem pb = builtin("linear_fractional");
  const OracleMap& om = *pb.oracle;
  CHECK(find_piece(pb, 0.0) == &om.pieces[0]);
  CHECK(find_piece(pb, 0.49) == &om.pieces[0]);
  CHECK(find_piece(pb, 0.5) == &om.pieces[1]);
  CHECK(find_piece(pb, 0.6) == &om.pieces[2]);
  CHECK(find_piece(pb, 2.0 / 3.0) == &om.pieces[3]);
  CHECK(find_piece(pb, 0.7) == nullptr);
  CHECK(find_piece(pb, 1.0) == nullptr);
}

TEST_CASE("oracle evaluation on the quartic branches") {
  // Stationary points of the weighted sum satisfy x1^2 * x2 = 1 exactly.
  VectorProblem pb = builtin("nonconvex_quartic");
  for (double t : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    OracleValue v = oracle_eval(pb, {t, 1.0 - t}, 256.0);
    REQUIRE(v.in_domain);
    REQUIRE(v.points.size() == 2);
    for (const auto& p : v.points) {
      CHECK(std::fabs(p[0] * p[0] * p[1] - 1.0) < 1e-9);
      CHECK(p[1] == doctest::Approx(t / (1.0 - t)));
    }
    CHECK(v.points[0][0] == doctest::Approx(-v.points[1][0]));
  }
  OracleValue end0 = oracle_eval(pb, {0.0, 1.0}, 256.0);
  CHECK_FALSE(end0.in_domain);
  OracleValue end1 = oracle_eval(pb, {1.0, 0.0}, 256.0);
  CHECK_FALSE(end1.in_domain);
}

TEST_CASE("oracle rays discretize inside the window") {
  VectorProblem pb = builtin("linear_fractional");
  OracleValue v = oracle_eval(pb, {0.5, 0.5}, 64.0);
  REQUIRE(v.in_domain);
  CHECK(v.value_unbounded);
  REQUIRE_FALSE(v.points.empty());
  for (const auto& p : v.points) {
    CHECK(p[1] == doctest::Approx(0.0));
    CHECK(p[0] >= 1.0 - 1e-12);
    CHECK(p[0] <= 64.0 + 1e-9);
  }
  // endpoint of the ray is the anchor point
  CHECK(v.points.front()[0] == doctest::Approx(1.0));
}

TEST_CASE("oracle segments and boxes enumerate endpoints") {
  VectorProblem pb = builtin("rectangle_identity");
  OracleValue seg = oracle_eval(pb, {0.5, 0.5}, 4.0);
  REQUIRE(seg.in_domain);
  CHECK_FALSE(seg.value_unbounded);
  bool saw_a = false, saw_b = false;
  for (const auto& p : seg.points) {
    CHECK(p[1] == doctest::Approx(0.0));
    CHECK(p[0] >= -1.0 - 1e-12);
    CHECK(p[0] <= 0.0 + 1e-12);
    if (std::fabs(p[0] + 1.0) < 1e-12) saw_a = true;
    if (std::fabs(p[0]) < 1e-12) saw_b = true;
  }
  CHECK(saw_a);
  CHECK(saw_b);

  OracleValue box = oracle_eval(pb, {1.0, 0.0}, 4.0);
  REQUIRE(box.in_domain);
  bool saw_corner = false;
  for (const auto& p : box.points)
    if (std::fabs(p[0]) < 1e-12 && std::fabs(p[1] - 1.0) < 1e-12) saw_corner = true;
  CHECK(saw_corner);
}

TEST_CASE("oracle points stay feasible") {
  for (const std::string& name : builtin_names()) {
    VectorProblem pb = builtin(name);
    for (int k = 0; k <= 16; ++k) {
      double t = k / 16.0;
      OracleValue v = oracle_eval(pb, {t, 1.0 - t}, 256.0);
      if (!v.in_domain) continue;
      for (const auto& p : v.points) {
        INFO(name, " xi1=", t);
        CHECK(pb.feasible.contains(p, 1e-9));
      }
    }
  }
}

TEST_CASE("problem JSON round trip") {
  std::string text = R"({
    "name": "toy",
    "n": 2,
    "m": 2,
    "objectives": ["x1^2", "x2^2"],
    "feasible": {"kind": "box", "lower": [-1, -1], "upper": [1, 1], "witness": [0, 0]},
    "convexity_tag": "convex",
    "lower_bound_tag": "bounded_below_by_zero"
  })";
  VectorProblem pb = problem_from_json_text(text);
  CHECK(pb.name == "toy");
  CHECK(pb.n == 2);
  CHECK(pb.m == 2);
  CHECK(pb.convexity_tag == ConvexityTag::Convex);
  CHECK(pb.lower_bound_tag == LowerBoundTag::BoundedBelowByZero);
  CHECK(pb.feasible.kind == FeasibleSet::Kind::Box);
  CHECK_FALSE(pb.oracle.has_value());
  std::vector<double> f = pb.evaluate({0.5, -0.5});
  CHECK(f[0] == doctest::Approx(0.25));
  CHECK(f[1] == doctest::Approx(0.25));
}

TEST_CASE("problem JSON rejects malformed input") {
  CHECK_THROWS_AS(problem_from_json_text("not json"), nlohmann::json::exception);
  CHECK_THROWS_AS(problem_from_json_text(R"({"name":"x"})"), nlohmann::json::exception);
  // objective count must match m
  std::string bad = R"({
    "name": "bad", "n": 1, "m": 2, "objectives": ["x1"],
    "feasible": {"kind": "whole_space", "witness": [0]}
  })";
  CHECK_THROWS_AS(problem_from_json_text(bad), std::invalid_argument);
  // infeasible witness
  std::string badw = R"({
    "name": "badw", "n": 1, "m": 1, "objectives": ["x1"],
    "feasible": {"kind": "box", "lower": [0], "upper": [1], "witness": [5]}
  })";
  CHECK_THROWS_AS(problem_from_json_text(badw), std::invalid_argument);
}

TEST_CASE("tag implications") {
  CHECK(implies_quasiconvex(ConvexityTag::Quasiconvex));
  CHECK(implies_quasiconvex(ConvexityTag::Convex));
  CHECK(implies_quasiconvex(ConvexityTag::ConvexPolynomial));
  CHECK_FALSE(implies_quasiconvex(ConvexityTag::None));
  CHECK(implies_convex(ConvexityTag::Convex));
  CHECK(implies_convex(ConvexityTag::ConvexPolynomial));
  CHECK_FALSE(implies_convex(ConvexityTag::Quasiconvex));
}
