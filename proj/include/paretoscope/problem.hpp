#pragma once

// Vector optimization problems: feasible sets, objective lists, and the
// optional closed-form solution maps attached to the built-in catalog.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "paretoscope/expr.hpp"

namespace paretoscope {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// ---- small vector helpers used throughout ------------------------------

inline double norm_inf(const std::vector<double>& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::fabs(v));
  return m;
}

inline double norm_2(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

inline double dist_2(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

// ---- tags ---------------------------------------------------------------

enum class ConvexityTag { None, Quasiconvex, StrictlyQuasiconvex, Convex, ConvexPolynomial };
enum class LowerBoundTag { Unknown, BoundedBelowByZero, StrictlyBoundedBelowByZero };
enum class ScalarizationKind { WeightedSum, WeightedMax };

inline const char* to_string(ConvexityTag t) {
  switch (t) {
    case ConvexityTag::None: return "none";
    case ConvexityTag::Quasiconvex: return "quasiconvex";
    case ConvexityTag::StrictlyQuasiconvex: return "strictly_quasiconvex";
    case ConvexityTag::Convex: return "convex";
    case ConvexityTag::ConvexPolynomial: return "convex_polynomial";
  }
  return "none";
}

inline const char* to_string(LowerBoundTag t) {
  switch (t) {
    case LowerBoundTag::Unknown: return "unknown";
    case LowerBoundTag::BoundedBelowByZero: return "bounded_below_by_zero";
    case LowerBoundTag::StrictlyBoundedBelowByZero: return "strictly_bounded_below_by_zero";
  }
  return "unknown";
}

inline const char* to_string(ScalarizationKind k) {
  return k == ScalarizationKind::WeightedSum ? "sum" : "max";
}

inline ConvexityTag convexity_tag_from_string(const std::string& s) {
  if (s == "none") return ConvexityTag::None;
  if (s == "quasiconvex") return ConvexityTag::Quasiconvex;
  if (s == "strictly_quasiconvex") return ConvexityTag::StrictlyQuasiconvex;
  if (s == "convex") return ConvexityTag::Convex;
  if (s == "convex_polynomial") return ConvexityTag::ConvexPolynomial;
  throw std::invalid_argument("unknown convexity tag: " + s);
}

inline LowerBoundTag lower_bound_tag_from_string(const std::string& s) {
  if (s == "unknown") return LowerBoundTag::Unknown;
  if (s == "bounded_below_by_zero") return LowerBoundTag::BoundedBelowByZero;
  if (s == "strictly_bounded_below_by_zero") return LowerBoundTag::StrictlyBoundedBelowByZero;
  throw std::invalid_argument("unknown lower bound tag: " + s);
}

inline ScalarizationKind scalarization_kind_from_string(const std::string& s) {
  if (s == "sum") return ScalarizationKind::WeightedSum;
  if (s == "max") return ScalarizationKind::WeightedMax;
  throw std::invalid_argument("unknown scalarization kind: " + s);
}

// Declared quasiconvexity (directly or through a stronger tag).
inline bool implies_quasiconvex(ConvexityTag t) { return t != ConvexityTag::None; }
inline bool implies_convex(ConvexityTag t) {
  return t == ConvexityTag::Convex || t == ConvexityTag::ConvexPolynomial;
}

// ---- feasible sets ------------------------------------------------------

struct FeasibleSet {
  enum class Kind { WholeSpace, Box, Sublevel };

  Kind kind = Kind::WholeSpace;
  std::vector<double> lower, upper;  // Box; +/-inf entries allowed
  std::vector<Expr> constraints;     // Sublevel: g_j(x) <= 0
  std::vector<double> witness;       // certifies nonemptiness; fixes the dimension

  static FeasibleSet whole_space(std::vector<double> witness_pt) {
    FeasibleSet fs;
    fs.kind = Kind::WholeSpace;
    fs.witness = std::move(witness_pt);
    return fs;
  }

  static FeasibleSet box(std::vector<double> lo, std::vector<double> hi,
                         std::vector<double> witness_pt) {
    FeasibleSet fs;
    fs.kind = Kind::Box;
    fs.lower = std::move(lo);
    fs.upper = std::move(hi);
    fs.witness = std::move(witness_pt);
    return fs;
  }

  static FeasibleSet sublevel(std::vector<Expr> gs, std::vector<double> witness_pt) {
    FeasibleSet fs;
    fs.kind = Kind::Sublevel;
    fs.constraints = std::move(gs);
    fs.witness = std::move(witness_pt);
    return fs;
  }

  bool contains(const std::vector<double>& x, double tol) const {
    if (tol < 0.0) throw std::invalid_argument("contains: negative tolerance");
    if (x.size() != witness.size())
      throw std::invalid_argument("contains: point dimension mismatch");
    switch (kind) {
      case Kind::WholeSpace:
        return true;
      case Kind::Box:
        for (std::size_t i = 0; i < x.size(); ++i)
          if (x[i] < lower[i] - tol || x[i] > upper[i] + tol) return false;
        return true;
      case Kind::Sublevel:
        for (const Expr& g : constraints) {
          double v;
          try {
            v = g.eval(x);
          } catch (const EvalError&) {
            return false;
          }
          if (!(v <= tol)) return false;
        }
        return true;
    }
    return false;
  }

  // Componentwise projection; only meaningful for box-shaped sets.
  void clamp_box(std::vector<double>& x) const {
    if (kind != Kind::Box) return;
    for (std::size_t i = 0; i < x.size(); ++i)
      x[i] = std::clamp(x[i], lower[i], upper[i]);
  }
};

// ---- closed-form solution maps -----------------------------------------

// One piece of a piecewise map over the simplex, keyed by an interval in
// xi_1 (the catalog is bicriteria). The payload is a finite point list
// (formulas in the weight coordinates x1..xm), rays p + t*d with t >= 0
// (value-unbounded pieces), or bounded sets (segments / a whole box).
struct OraclePiece {
  double lo = 0.0, hi = 1.0;
  bool lo_closed = true, hi_closed = true;

  std::vector<std::vector<Expr>> points;

  struct Ray {
    std::vector<double> p, d;
  };
  std::vector<Ray> rays;

  struct Segment {
    std::vector<double> a, b;
  };
  std::vector<Segment> segments;

  bool has_box = false;
  std::vector<double> box_lower, box_upper;

  bool covers(double xi1, double tol = 1e-12) const {
    bool above = lo_closed ? (xi1 >= lo - tol) : (xi1 > lo + tol);
    bool below = hi_closed ? (xi1 <= hi + tol) : (xi1 < hi - tol);
    return above && below;
  }

  bool value_unbounded() const { return !rays.empty(); }
};

struct OracleMap {
  ScalarizationKind kind = ScalarizationKind::WeightedSum;
  // When set, grid sampling of this scalarization returns the map's own
  // values instead of running the numeric solver; used for catalog entries
  // whose solution map is supplied as data.
  bool drives_graph = false;
  std::vector<OraclePiece> pieces;
  int image_components_expected = 1;
  bool dom_closed_expected = true;
  bool components_unbounded_expected = false;
};

struct OracleValue {
  bool in_domain = false;
  std::vector<std::vector<double>> points;
  bool value_unbounded = false;
};

// ---- the problem type ---------------------------------------------------

struct VectorProblem {
  std::string name;
  int n = 0;  // decision dimension
  int m = 0;  // criteria count
  std::vector<Expr> objectives;  // empty when only a closed-form map is given
  FeasibleSet feasible;
  ConvexityTag convexity_tag = ConvexityTag::None;
  LowerBoundTag lower_bound_tag = LowerBoundTag::Unknown;
  std::optional<OracleMap> oracle;

  bool has_objectives() const { return !objectives.empty(); }

  std::vector<double> evaluate(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != n)
      throw std::invalid_argument("evaluate: point has dimension " +
                                  std::to_string(x.size()) + ", expected " +
                                  std::to_string(n));
    if (objectives.empty())
      throw std::logic_error("problem \"" + name +
                             "\" carries no objective functions (solution map "
                             "supplied as closed-form data)");
    std::vector<double> out(objectives.size());
    for (std::size_t i = 0; i < objectives.size(); ++i) out[i] = objectives[i].eval(x);
    return out;
  }
};

inline bool contains(const FeasibleSet& fs, const std::vector<double>& x, double tol) {
  return fs.contains(x, tol);
}

inline std::vector<double> evaluate(const VectorProblem& pb, const std::vector<double>& x) {
  return pb.evaluate(x);
}

// Structural sanity checks shared by the loader and the builtin catalog.
inline void validate(const VectorProblem& pb) {
  if (pb.n <= 0 || pb.m <= 0) throw std::invalid_argument("n and m must be positive");
  if (static_cast<int>(pb.feasible.witness.size()) != pb.n)
    throw std::invalid_argument("witness dimension must equal n");
  if (!pb.feasible.contains(pb.feasible.witness, 0.0))
    throw std::invalid_argument("witness is not feasible at tolerance 0");
  if (pb.feasible.kind == FeasibleSet::Kind::Box) {
    if (pb.feasible.lower.size() != pb.feasible.upper.size() ||
        static_cast<int>(pb.feasible.lower.size()) != pb.n)
      throw std::invalid_argument("box bound dimensions must equal n");
    for (int i = 0; i < pb.n; ++i)
      if (!(pb.feasible.lower[i] <= pb.feasible.upper[i]))
        throw std::invalid_argument("box lower bound exceeds upper bound");
  }
  if (!pb.objectives.empty() && static_cast<int>(pb.objectives.size()) != pb.m)
    throw std::invalid_argument("objective count must equal m");
  for (const Expr& f : pb.objectives)
    if (f.max_var() > pb.n)
      throw std::invalid_argument("objective references variable beyond x" +
                                  std::to_string(pb.n));
  for (const Expr& g : pb.feasible.constraints)
    if (g.max_var() > pb.n)
      throw std::invalid_argument("constraint references variable beyond x" +
                                  std::to_string(pb.n));
  if (pb.oracle) {
    for (const OraclePiece& pc : pb.oracle->pieces) {
      for (const auto& pt : pc.points) {
        if (static_cast<int>(pt.size()) != pb.n)
          throw std::invalid_argument("oracle point formula dimension must equal n");
        for (const Expr& e : pt)
          if (e.max_var() > pb.m)
            throw std::invalid_argument("oracle formula references weight beyond x" +
                                        std::to_string(pb.m));
      }
      for (const auto& r : pc.rays)
        if (static_cast<int>(r.p.size()) != pb.n || static_cast<int>(r.d.size()) != pb.n)
          throw std::invalid_argument("oracle ray dimension must equal n");
    }
  }
}

inline const OraclePiece* find_piece(const VectorProblem& pb, double xi1) {
  if (!pb.oracle) return nullptr;
  for (const OraclePiece& pc : pb.oracle->pieces)
    if (pc.covers(xi1)) return &pc;
  return nullptr;
}

// Evaluate the closed-form map at weight coordinates xi, truncating
// unbounded pieces at the given window radius (discretization step is
// window_radius / 256 along rays, and per axis for bounded sets).
inline OracleValue oracle_eval(const VectorProblem& pb, const std::vector<double>& xi,
                               double window_radius) {
  if (!pb.oracle) throw std::logic_error("problem \"" + pb.name + "\" has no oracle map");
  if (static_cast<int>(xi.size()) != pb.m)
    throw std::invalid_argument("oracle_eval: weight has wrong dimension");
  if (!(window_radius > 0.0)) throw std::invalid_argument("oracle_eval: window radius must be positive");

  OracleValue out;
  const OraclePiece* piece = nullptr;
  for (const OraclePiece& pc : pb.oracle->pieces)
    if (pc.covers(xi[0])) { piece = &pc; break; }
  if (!piece) return out;  // outside the printed domain

  out.in_domain = true;
  out.value_unbounded = piece->value_unbounded();
  const double step = window_radius / 256.0;

  for (const auto& formulas : piece->points) {
    std::vector<double> pt(formulas.size());
    for (std::size_t i = 0; i < formulas.size(); ++i) pt[i] = formulas[i].eval(xi);
    out.points.push_back(std::move(pt));
  }

  for (const auto& ray : piece->rays) {
    for (int k = 0;; ++k) {
      std::vector<double> pt(ray.p.size());
      for (std::size_t i = 0; i < pt.size(); ++i) pt[i] = ray.p[i] + k * step * ray.d[i];
      if (norm_inf(pt) > window_radius) break;
      out.points.push_back(std::move(pt));
    }
  }

  for (const auto& seg : piece->segments) {
    double len = dist_2(seg.a, seg.b);
    int steps = std::max(1, static_cast<int>(std::floor(len / step + 1e-9)));
    for (int k = 0; k <= steps; ++k) {
      double t = std::min(1.0, (k * step) / len);
      if (k == steps) t = 1.0;
      std::vector<double> pt(seg.a.size());
      for (std::size_t i = 0; i < pt.size(); ++i)
        pt[i] = seg.a[i] + t * (seg.b[i] - seg.a[i]);
      out.points.push_back(std::move(pt));
    }
  }

  if (piece->has_box) {
    std::vector<std::vector<double>> axes(piece->box_lower.size());
    for (std::size_t i = 0; i < axes.size(); ++i) {
      double a = piece->box_lower[i], b = piece->box_upper[i];
      for (double v = a; v < b - 1e-12; v += step) axes[i].push_back(v);
      axes[i].push_back(b);
    }
    std::vector<double> pt(axes.size());
    std::vector<std::size_t> idx(axes.size(), 0);
    for (;;) {
      for (std::size_t i = 0; i < axes.size(); ++i) pt[i] = axes[i][idx[i]];
      out.points.push_back(pt);
      std::size_t i = 0;
      while (i < axes.size() && ++idx[i] == axes[i].size()) idx[i++] = 0;
      if (i == axes.size()) break;
    }
  }

  return out;
}

} // namespace paretoscope
