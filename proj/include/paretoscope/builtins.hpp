#pragma once

// Built-in problem catalog. Each entry fixes the feasible set, the objective
// list (possibly empty when only a closed-form solution map is known), the
// declared structure tags, and the reference map used by oracle-check.

#include <stdexcept>
#include <string>
#include <vector>

#include "paretoscope/problem.hpp"

namespace paretoscope {

namespace detail {

inline std::vector<std::vector<Expr>> oracle_points(
    const std::vector<std::vector<std::string>>& formulas) {
  std::vector<std::vector<Expr>> out;
  for (const auto& pt : formulas) {
    std::vector<Expr> coords;
    for (const auto& s : pt) coords.push_back(Expr::parse(s));
    out.push_back(std::move(coords));
  }
  return out;
}

inline OraclePiece piece_interval(double lo, bool lo_closed, double hi, bool hi_closed) {
  OraclePiece pc;
  pc.lo = lo;
  pc.lo_closed = lo_closed;
  pc.hi = hi;
  pc.hi_closed = hi_closed;
  return pc;
}

inline VectorProblem make_nonconvex_quartic() {
  VectorProblem pb;
  pb.name = "nonconvex_quartic";
  pb.n = 2;
  pb.m = 2;
  pb.objectives = {Expr::parse("x1^4 - 2*x2"), Expr::parse("-2*x1^2 + x2^2")};
  pb.feasible = FeasibleSet::whole_space({0.0, 0.0});
  pb.convexity_tag = ConvexityTag::None;
  pb.lower_bound_tag = LowerBoundTag::Unknown;

  OracleMap om;
  om.kind = ScalarizationKind::WeightedSum;
  om.drives_graph = false;
  OraclePiece pc = piece_interval(0.0, false, 1.0, false);
  pc.points = oracle_points({{"-((1-x1)/x1)^0.5", "x1/(1-x1)"},
                             {"((1-x1)/x1)^0.5", "x1/(1-x1)"}});
  om.pieces.push_back(std::move(pc));
  om.image_components_expected = 2;
  om.dom_closed_expected = false;
  om.components_unbounded_expected = true;
  pb.oracle = std::move(om);
  return pb;
}

inline VectorProblem make_linear_fractional() {
  VectorProblem pb;
  pb.name = "linear_fractional";
  pb.n = 2;
  pb.m = 2;
  pb.objectives = {Expr::parse("(x1+1)/(2*x1+x2)"), Expr::parse("(-x1-2)/(x1+x2)")};
  pb.feasible = FeasibleSet::sublevel(
      {Expr::parse("-x1"), Expr::parse("-x2"), Expr::parse("1-x1-x2")}, {1.0, 0.0});
  pb.convexity_tag = ConvexityTag::Quasiconvex;
  pb.lower_bound_tag = LowerBoundTag::Unknown;

  OracleMap om;
  om.kind = ScalarizationKind::WeightedSum;
  om.drives_graph = true;
  {
    OraclePiece pc = piece_interval(0.0, true, 0.5, false);
    pc.points = oracle_points({{"1", "0"}});
    om.pieces.push_back(std::move(pc));
  }
  {
    OraclePiece pc = piece_interval(0.5, true, 0.5, true);
    pc.rays.push_back({{1.0, 0.0}, {1.0, 0.0}});
    om.pieces.push_back(std::move(pc));
  }
  {
    OraclePiece pc = piece_interval(0.5, false, 2.0 / 3.0, false);
    pc.points = oracle_points({{"(2-3*x1)/(2*x1-1)", "2"}});
    om.pieces.push_back(std::move(pc));
  }
  {
    OraclePiece pc = piece_interval(2.0 / 3.0, true, 2.0 / 3.0, true);
    pc.rays.push_back({{0.0, 2.0}, {0.0, 1.0}});
    om.pieces.push_back(std::move(pc));
  }
  om.image_components_expected = 2;
  om.dom_closed_expected = true;
  om.components_unbounded_expected = true;
  pb.oracle = std::move(om);
  return pb;
}

inline VectorProblem make_monotone_affine() {
  VectorProblem pb;
  pb.name = "monotone_affine";
  pb.n = 2;
  pb.m = 2;
  // The source problem orders R^2 by a cone without scalar objective
  // functions; only the closed-form solution map is carried.
  pb.feasible = FeasibleSet::whole_space({0.0, 0.0});
  pb.convexity_tag = ConvexityTag::None;
  pb.lower_bound_tag = LowerBoundTag::Unknown;

  OracleMap om;
  om.kind = ScalarizationKind::WeightedSum;
  om.drives_graph = true;
  {
    OraclePiece pc = piece_interval(0.0, true, 0.5, false);
    pc.points = oracle_points({{"1/(1-2*x1)", "-1/(1-2*x1)"}});
    om.pieces.push_back(std::move(pc));
  }
  {
    OraclePiece pc = piece_interval(0.5, false, 1.0, true);
    pc.points = oracle_points({{"1/(1-2*x1)", "-1/(1-2*x1)"}});
    om.pieces.push_back(std::move(pc));
  }
  om.image_components_expected = 2;
  om.dom_closed_expected = false;
  om.components_unbounded_expected = true;
  pb.oracle = std::move(om);
  return pb;
}

inline VectorProblem make_warburton_quasiconvex() {
  VectorProblem pb;
  pb.name = "warburton_quasiconvex";
  pb.n = 2;
  pb.m = 2;
  pb.objectives = {Expr::parse("x1/(x1+x2-1)"), Expr::parse("x1/(x1-x2+3)")};
  pb.feasible = FeasibleSet::box({2.0, 0.0}, {kInf, 4.0}, {2.0, 0.0});
  pb.convexity_tag = ConvexityTag::Quasiconvex;
  pb.lower_bound_tag = LowerBoundTag::StrictlyBoundedBelowByZero;

  OracleMap om;
  om.kind = ScalarizationKind::WeightedMax;
  om.drives_graph = true;
  {
    OraclePiece pc = piece_interval(1.0 / 6.0, false, 0.5, false);
    pc.points = oracle_points({{"(1+2*x1)/(1-2*x1)", "0"}});
    om.pieces.push_back(std::move(pc));
  }
  {
    OraclePiece pc = piece_interval(0.5, false, 5.0 / 6.0, false);
    pc.points = oracle_points({{"(3-2*x1)/(2*x1-1)", "4"}});
    om.pieces.push_back(std::move(pc));
  }
  om.image_components_expected = 2;
  om.dom_closed_expected = false;
  om.components_unbounded_expected = true;
  pb.oracle = std::move(om);
  return pb;
}

inline VectorProblem make_rectangle_identity() {
  VectorProblem pb;
  pb.name = "rectangle_identity";
  pb.n = 2;
  pb.m = 2;
  pb.objectives = {Expr::parse("x1"), Expr::parse("x2")};
  pb.feasible = FeasibleSet::box({-1.0, 0.0}, {0.0, 1.0}, {-0.5, 0.5});
  pb.convexity_tag = ConvexityTag::Convex;
  pb.lower_bound_tag = LowerBoundTag::Unknown;

  OracleMap om;
  om.kind = ScalarizationKind::WeightedMax;
  om.drives_graph = false;
  {
    OraclePiece pc = piece_interval(0.0, true, 1.0, false);
    pc.segments.push_back({{-1.0, 0.0}, {0.0, 0.0}});
    om.pieces.push_back(std::move(pc));
  }
  {
    OraclePiece pc = piece_interval(1.0, true, 1.0, true);
    pc.has_box = true;
    pc.box_lower = {-1.0, 0.0};
    pc.box_upper = {0.0, 1.0};
    om.pieces.push_back(std::move(pc));
  }
  om.image_components_expected = 1;
  om.dom_closed_expected = true;
  om.components_unbounded_expected = false;
  pb.oracle = std::move(om);
  return pb;
}

inline VectorProblem make_convex_quadratic() {
  VectorProblem pb;
  pb.name = "convex_quadratic";
  pb.n = 2;
  pb.m = 2;
  pb.objectives = {Expr::parse("x1^2 - x2"), Expr::parse("-x1 + x2^2")};
  pb.feasible = FeasibleSet::box({0.0, 0.0}, {kInf, kInf}, {0.0, 0.0});
  pb.convexity_tag = ConvexityTag::ConvexPolynomial;
  pb.lower_bound_tag = LowerBoundTag::Unknown;

  OracleMap om;
  om.kind = ScalarizationKind::WeightedSum;
  om.drives_graph = false;
  OraclePiece pc = piece_interval(0.0, false, 1.0, false);
  pc.points = oracle_points({{"(1-x1)/(2*x1)", "x1/(2*(1-x1))"}});
  om.pieces.push_back(std::move(pc));
  om.image_components_expected = 1;
  om.dom_closed_expected = false;
  om.components_unbounded_expected = true;
  pb.oracle = std::move(om);
  return pb;
}

} // namespace detail

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "nonconvex_quartic",   "linear_fractional", "monotone_affine",
      "warburton_quasiconvex", "rectangle_identity", "convex_quadratic"};
  return names;
}

inline VectorProblem builtin(const std::string& name) {
  VectorProblem pb;
  if (name == "nonconvex_quartic") pb = detail::make_nonconvex_quartic();
  else if (name == "linear_fractional") pb = detail::make_linear_fractional();
  else if (name == "monotone_affine") pb = detail::make_monotone_affine();
  else if (name == "warburton_quasiconvex") pb = detail::make_warburton_quasiconvex();
  else if (name == "rectangle_identity") pb = detail::make_rectangle_identity();
  else if (name == "convex_quadratic") pb = detail::make_convex_quadratic();
  else throw std::invalid_argument("unknown builtin problem: " + name);
  validate(pb);
  return pb;
}

inline std::string builtin_summary(const std::string& name) {
  if (name == "nonconvex_quartic")
    return "quartic/quadratic pair on R^2; weighted sums escape at the simplex "
           "endpoints and split the graph into two unbounded branches";
  if (name == "linear_fractional")
    return "two linear-fractional objectives on a shifted quadrant; piecewise "
           "map with two value-unbounded weights";
  if (name == "monotone_affine")
    return "cone-ordered affine model carried as a closed-form map only; the "
           "map blows up at the midpoint weight";
  if (name == "warburton_quasiconvex")
    return "quasiconvex ratios on a slab, strictly positive; weighted max map "
           "is single-valued on two open weight intervals";
  if (name == "rectangle_identity")
    return "identity objectives on a rectangle; weighted max recovers the weak "
           "solution set between interior and full simplex sampling";
  if (name == "convex_quadratic")
    return "convex polynomial pair on the nonnegative quadrant; interior "
           "weights give a smooth argmin curve escaping at both ends";
  throw std::invalid_argument("unknown builtin problem: " + name);
}

} // namespace paretoscope
