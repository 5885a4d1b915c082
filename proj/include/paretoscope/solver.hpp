#pragma once

// Windowed global minimization of a scalarized objective over expanding
// boxes, and grid sampling of the solution mapping over simplex weights.
// The solver reports either a near-optimal point set inside the window, or
// evidence that minimizing sequences escape every window it tried.

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "paretoscope/problem.hpp"
#include "paretoscope/scalarize.hpp"

namespace paretoscope {

struct SolverConfig {
  std::vector<double> radii = {4.0, 16.0, 64.0, 256.0};
  int lattice_per_axis = 129;
  int refine_steps = 60;
  int refine_seeds = 48;
  double value_tol = 1e-6;
  double point_tol = 1e-6;
  double escape_decrease_min = 1e-3;
  double near_opt_band = 1e-4;
  int pool_cap = 1024;
};

struct SolveOutcome {
  enum class Kind { Minimizers, Escaping, InfeasibleWindow };
  Kind kind = Kind::InfeasibleWindow;
  std::vector<std::vector<double>> points;
  double value = std::numeric_limits<double>::quiet_NaN();
  bool value_unbounded_set = false;
  std::vector<double> values_by_radius;
  double window_radius_used = 0.0;
};

inline const char* to_string(SolveOutcome::Kind k) {
  switch (k) {
    case SolveOutcome::Kind::Minimizers: return "minimizers";
    case SolveOutcome::Kind::Escaping: return "escaping";
    case SolveOutcome::Kind::InfeasibleWindow: return "infeasible_window";
  }
  return "infeasible_window";
}

struct GraphSample {
  std::string problem_name;
  ScalarizationKind kind = ScalarizationKind::WeightedSum;
  int N = 0;
  SolverConfig cfg;
  std::vector<Weight> weights;
  std::vector<SolveOutcome> outcomes;
  bool oracle_driven = false;
};

namespace detail {

inline bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return a.size() < b.size();
}

struct ScoredPoint {
  std::vector<double> x;
  double v = kInf;
};

inline double scalar_value(const VectorProblem& pb, ScalarizationKind kind, const Weight& w,
                           const std::vector<double>& x) {
  if (!pb.feasible.contains(x, 1e-12)) return kInf;
  try {
    double v = scalarize(pb, kind, w, x);
    return std::isfinite(v) ? v : kInf;
  } catch (const EvalError&) {
    return kInf;
  }
}

// Compass descent clipped to the window: per-axis +/- step moves accepted on
// strict improvement, step halved after a pass with no move.
inline ScoredPoint descend(const VectorProblem& pb, ScalarizationKind kind, const Weight& w,
                           std::vector<double> x, double v, double step, double radius,
                           const SolverConfig& cfg) {
  std::vector<double> trial = x;
  for (int round = 0; round < cfg.refine_steps; ++round) {
    bool moved = false;
    for (int i = 0; i < pb.n; ++i) {
      for (double sgn : {1.0, -1.0}) {
        trial = x;
        trial[i] = std::clamp(x[i] + sgn * step, -radius, radius);
        if (trial[i] == x[i]) continue;
        double tv = scalar_value(pb, kind, w, trial);
        if (tv < v) {
          x = trial;
          v = tv;
          moved = true;
        }
      }
    }
    if (!moved) step *= 0.5;
  }
  return {std::move(x), v};
}

inline void farthest_first_dedup(std::vector<ScoredPoint>& pts, double eps) {
  if (pts.size() <= 1) return;
  std::vector<ScoredPoint> kept;
  kept.push_back(pts.front());
  std::vector<double> mindist(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) mindist[i] = dist_2(pts[i].x, kept[0].x);
  for (;;) {
    std::size_t best = 0;
    double bestd = -1.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (mindist[i] > bestd) { bestd = mindist[i]; best = i; }
    if (bestd <= eps) break;
    kept.push_back(pts[best]);
    for (std::size_t i = 0; i < pts.size(); ++i)
      mindist[i] = std::min(mindist[i], dist_2(pts[i].x, kept.back().x));
  }
  std::sort(kept.begin(), kept.end(), [](const ScoredPoint& a, const ScoredPoint& b) {
    if (a.v != b.v) return a.v < b.v;
    return lex_less(a.x, b.x);
  });
  pts = std::move(kept);
}

} // namespace detail

// Minimize the scalarization for one weight over expanding windows.
inline SolveOutcome minimize_scalar(const VectorProblem& pb, ScalarizationKind kind,
                                    const Weight& w, const SolverConfig& cfg) {
  if (!pb.has_objectives())
    throw std::logic_error("minimize_scalar: problem \"" + pb.name +
                           "\" has no objective functions");
  if (cfg.radii.empty()) throw std::invalid_argument("solver needs at least one window radius");

  SolveOutcome out;
  std::vector<detail::ScoredPoint> carried;
  std::vector<std::vector<double>> best_per_radius;

  for (std::size_t ri = 0; ri < cfg.radii.size(); ++ri) {
    const double R = cfg.radii[ri];
    const double spacing = 2.0 * R / (cfg.lattice_per_axis - 1);
    std::vector<detail::ScoredPoint> pool;

    for (auto& cp : carried) {
      double v = detail::scalar_value(pb, kind, w, cp.x);
      if (v < kInf) pool.push_back({cp.x, v});
    }
    if (norm_inf(pb.feasible.witness) <= R) {
      double v = detail::scalar_value(pb, kind, w, pb.feasible.witness);
      if (v < kInf) pool.push_back({pb.feasible.witness, v});
    }

    std::vector<double> x(pb.n, -R);
    std::vector<int> idx(pb.n, 0);
    for (;;) {
      for (int i = 0; i < pb.n; ++i) x[i] = -R + idx[i] * spacing;
      double v = detail::scalar_value(pb, kind, w, x);
      if (v < kInf) pool.push_back({x, v});
      int i = 0;
      while (i < pb.n && ++idx[i] == cfg.lattice_per_axis) idx[i++] = 0;
      if (i == pb.n) break;
    }

    if (pool.empty()) {
      if (ri + 1 == cfg.radii.size()) {
        out.kind = SolveOutcome::Kind::InfeasibleWindow;
        out.window_radius_used = R;
        return out;
      }
      continue;
    }

    std::sort(pool.begin(), pool.end(),
              [](const detail::ScoredPoint& a, const detail::ScoredPoint& b) {
                if (a.v != b.v) return a.v < b.v;
                return detail::lex_less(a.x, b.x);
              });

    int seeds = std::min<int>(cfg.refine_seeds, static_cast<int>(pool.size()));
    for (int s = 0; s < seeds; ++s)
      pool.push_back(detail::descend(pb, kind, w, pool[s].x, pool[s].v, spacing, R, cfg));

    std::sort(pool.begin(), pool.end(),
              [](const detail::ScoredPoint& a, const detail::ScoredPoint& b) {
                if (a.v != b.v) return a.v < b.v;
                return detail::lex_less(a.x, b.x);
              });

    std::vector<detail::ScoredPoint> band;
    {
      const double precut =
          pool.front().v + cfg.near_opt_band * (1.0 + std::fabs(pool.front().v));
      for (auto& sp : pool) {
        if (sp.v > precut) break;
        band.push_back(sp);
        if (static_cast<int>(band.size()) >= cfg.pool_cap) break;
      }
    }
    // Refine every reported point, not just the top seeds: a raw lattice
    // point can clear the value band while sitting visibly off the
    // minimizer set.
    for (auto& sp : band) sp = detail::descend(pb, kind, w, sp.x, sp.v, spacing, R, cfg);
    std::sort(band.begin(), band.end(),
              [](const detail::ScoredPoint& a, const detail::ScoredPoint& b) {
                if (a.v != b.v) return a.v < b.v;
                return detail::lex_less(a.x, b.x);
              });

    const double best_v = band.front().v;
    out.values_by_radius.push_back(best_v);
    best_per_radius.push_back(band.front().x);

    const double cut = best_v + cfg.near_opt_band * (1.0 + std::fabs(best_v));
    while (!band.empty() && band.back().v > cut) band.pop_back();
    detail::farthest_first_dedup(band, cfg.point_tol);

    const bool interior = R - norm_inf(band.front().x) > cfg.point_tol * R;
    if (interior) {
      out.kind = SolveOutcome::Kind::Minimizers;
      out.value = best_v;
      out.window_radius_used = R;
      out.points.clear();
      for (auto& sp : band) out.points.push_back(sp.x);
      return out;
    }
    carried = std::move(band);
  }

  // Reaching here means the best point pressed the window edge at every
  // radius that produced one.
  const double R_final = cfg.radii.back();
  std::size_t k = out.values_by_radius.size();
  bool decreasing = k >= 2;
  for (std::size_t i = 0; i + 1 < k; ++i)
    if (!(out.values_by_radius[i + 1] <= out.values_by_radius[i] - cfg.escape_decrease_min))
      decreasing = false;

  if (decreasing) {
    out.kind = SolveOutcome::Kind::Escaping;
    out.points = std::move(best_per_radius);
    out.value = out.values_by_radius.back();
    out.value_unbounded_set = false;
    out.window_radius_used = R_final;
    return out;
  }

  // Stalled against the boundary without meaningful descent: treat the
  // near-optimal set as attained but extending beyond any window.
  out.kind = SolveOutcome::Kind::Minimizers;
  out.value = out.values_by_radius.empty() ? kInf : out.values_by_radius.back();
  out.value_unbounded_set = true;
  out.window_radius_used = R_final;
  out.points.clear();
  for (auto& sp : carried) out.points.push_back(sp.x);
  return out;
}

inline int resolve_thread_count() {
  if (const char* env = std::getenv("PARETOSCOPE_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Sample the solution mapping of one scalarization over a simplex grid.
// Entries come from the numeric solver, unless the problem carries a
// closed-form map for this scalarization that is marked graph-driving.
inline GraphSample solve_grid(const VectorProblem& pb, ScalarizationKind kind,
                              const std::vector<Weight>& weights, const SolverConfig& cfg,
                              int N = 0) {
  if (weights.empty()) throw std::invalid_argument("solve_grid: empty weight grid");
  const bool driven = pb.oracle && pb.oracle->drives_graph && pb.oracle->kind == kind;
  if (!driven && !pb.has_objectives())
    throw std::logic_error("solve_grid: problem \"" + pb.name +
                           "\" has neither objectives nor a graph-driving map for this "
                           "scalarization");

  GraphSample g;
  g.problem_name = pb.name;
  g.kind = kind;
  g.N = N;
  g.cfg = cfg;
  g.weights = weights;
  g.outcomes.resize(weights.size());
  g.oracle_driven = driven;

  auto solve_one = [&](std::size_t i) {
    if (driven) {
      OracleValue ov = oracle_eval(pb, weights[i], cfg.radii.back());
      SolveOutcome& out = g.outcomes[i];
      if (ov.in_domain) {
        out.kind = SolveOutcome::Kind::Minimizers;
        out.points = std::move(ov.points);
        out.value_unbounded_set = ov.value_unbounded;
      } else {
        out.kind = SolveOutcome::Kind::Escaping;
      }
      out.window_radius_used = cfg.radii.back();
    } else {
      g.outcomes[i] = minimize_scalar(pb, kind, weights[i], cfg);
    }
  };

  const int threads = std::min<int>(resolve_thread_count(), static_cast<int>(weights.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < weights.size(); ++i) solve_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex err_mu;
    std::vector<std::thread> workers;
    for (int t = 0; t < threads; ++t) {
      workers.emplace_back([&]() {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= g.weights.size()) return;
          try {
            solve_one(i);
          } catch (...) {
            std::lock_guard<std::mutex> lk(err_mu);
            if (!first_error) first_error = std::current_exception();
            return;
          }
        }
      });
    }
    for (auto& th : workers) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }
  return g;
}

} // namespace paretoscope
